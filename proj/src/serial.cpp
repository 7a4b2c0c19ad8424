#include "helly/serial.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace helly {

namespace {

BigInt bigFromJson(const Json& j, const char* what) {
    if (!j.is_string()) throw std::invalid_argument(std::string(what) + ": expected a string");
    const std::string s = j.get<std::string>();
    Rational r = Rational::parse(s);
    if (r.den() != 1) throw std::invalid_argument(std::string(what) + ": expected an integer");
    return r.num();
}

Json pointToJson(const Point2& p) { return Json::array({p.x.str(), p.y.str()}); }

Point2 pointFromJson(const Json& j) {
    if (!j.is_array() || j.size() != 2)
        throw std::invalid_argument("pointFromJson: expected [x, y]");
    return Point2{rationalFromJson(j[0]), rationalFromJson(j[1])};
}

std::vector<Rational> vectorFromJson(const Json& j, const char* what) {
    if (!j.is_array()) throw std::invalid_argument(std::string(what) + ": expected an array");
    std::vector<Rational> out;
    out.reserve(j.size());
    for (const auto& e : j) out.push_back(rationalFromJson(e));
    return out;
}

Json vectorToJson(const std::vector<Rational>& v) {
    Json out = Json::array();
    for (const auto& x : v) out.push_back(x.str());
    return out;
}

}  // namespace

Json toJson(const Rational& x) { return x.str(); }

Rational rationalFromJson(const Json& j) {
    if (!j.is_string())
        throw std::invalid_argument("rationalFromJson: expected a canonical string");
    return Rational::parse(j.get<std::string>());
}

Json toJson(const Surd& s) { return s.str(); }

Surd surdFromJson(const Json& j) {
    if (!j.is_string()) throw std::invalid_argument("surdFromJson: expected a canonical string");
    return Surd::parse(j.get<std::string>());
}

Json toJson(const Box& b) {
    return Json{{"lower", vectorToJson(b.lower)}, {"upper", vectorToJson(b.upper)}};
}

Box boxFromJson(const Json& j) {
    return Box(vectorFromJson(j.at("lower"), "boxFromJson"),
               vectorFromJson(j.at("upper"), "boxFromJson"));
}

Json toJson(const PeriodicSet1D& s) {
    Json residues = Json::array();
    for (const auto& r : s.residues()) residues.push_back(r.str());
    return Json{{"period", s.period().str()}, {"residues", residues}};
}

PeriodicSet1D periodicSetFromJson(const Json& j) {
    return PeriodicSet1D(rationalFromJson(j.at("period")),
                         vectorFromJson(j.at("residues"), "periodicSetFromJson"));
}

Json toJson(const PeriodicProductSet& q) {
    Json out = Json::array();
    for (size_t i = 0; i < q.dim(); ++i) out.push_back(toJson(q.factor(i)));
    return out;
}

PeriodicProductSet periodicProductFromJson(const Json& j) {
    if (!j.is_array())
        throw std::invalid_argument("periodicProductFromJson: expected an array of factors");
    std::vector<PeriodicSet1D> factors;
    for (const auto& f : j) factors.push_back(periodicSetFromJson(f));
    return PeriodicProductSet(std::move(factors));
}

Json toJson(const FamilyInstance& F) {
    Json sets = Json::array();
    for (const auto& s : F.sets) {
        Json hs = Json::array();
        for (const auto& h : s.shape.halfspaces)
            hs.push_back(Json{{"normal", vectorToJson(h.normal)}, {"offset", h.offset.str()}});
        sets.push_back(Json{{"name", s.name}, {"halfspaces", hs}});
    }
    Json out{{"dim", F.dim}, {"sets", sets}};
    if (!F.colors.empty()) out["colors"] = F.colors;
    return out;
}

FamilyInstance familyFromJson(const Json& j) {
    FamilyInstance F;
    F.dim = j.at("dim").get<size_t>();
    for (const auto& s : j.at("sets")) {
        std::vector<Halfspace> halfspaces;
        for (const auto& h : s.at("halfspaces")) {
            auto normal = vectorFromJson(h.at("normal"), "familyFromJson");
            if (normal.size() != F.dim)
                throw std::invalid_argument("familyFromJson: normal width differs from dim");
            halfspaces.emplace_back(std::move(normal), rationalFromJson(h.at("offset")));
        }
        F.sets.push_back({s.at("name").get<std::string>(),
                          Polyhedron(F.dim, std::move(halfspaces))});
    }
    if (j.contains("colors")) {
        F.colors = j.at("colors").get<std::vector<size_t>>();
        if (F.colors.size() != F.sets.size())
            throw std::invalid_argument("familyFromJson: one color per set");
    }
    return F;
}

Json toJson(const PolygonCertificate& cert) {
    Json vertices = Json::array();
    for (const auto& v : cert.vertices) vertices.push_back(pointToJson(v));
    return Json{{"type", "empty-polygon"},
                {"vertices", vertices},
                {"host", cert.host},
                {"window", Json::array({pointToJson(cert.windowLo), pointToJson(cert.windowHi)})},
                {"provenance", cert.provenance}};
}

PolygonCertificate polygonCertificateFromJson(const Json& j) {
    if (j.at("type").get<std::string>() != "empty-polygon")
        throw std::invalid_argument("polygonCertificateFromJson: wrong certificate type");
    PolygonCertificate cert;
    for (const auto& v : j.at("vertices")) cert.vertices.push_back(pointFromJson(v));
    cert.host = j.at("host").get<std::string>();
    const Json& win = j.at("window");
    if (!win.is_array() || win.size() != 2)
        throw std::invalid_argument("polygonCertificateFromJson: window needs two corners");
    cert.windowLo = pointFromJson(win[0]);
    cert.windowHi = pointFromJson(win[1]);
    cert.provenance = j.at("provenance").get<std::string>();
    return cert;
}

Json toJson(const RatioRunCertificate& cert) {
    Json values = Json::array();
    for (const auto& v : cert.values) values.push_back(v.str());
    return Json{{"type", "ratio-run"},
                {"values", values},
                {"baseIndex", cert.baseIndex},
                {"runLength", cert.runLength},
                {"strictCount", cert.strictCount}};
}

RatioRunCertificate ratioRunFromJson(const Json& j) {
    if (j.at("type").get<std::string>() != "ratio-run")
        throw std::invalid_argument("ratioRunFromJson: wrong certificate type");
    RatioRunCertificate cert;
    for (const auto& v : j.at("values")) cert.values.push_back(bigFromJson(v, "ratioRunFromJson"));
    cert.baseIndex = j.at("baseIndex").get<size_t>();
    cert.runLength = j.at("runLength").get<size_t>();
    cert.strictCount = j.at("strictCount").get<size_t>();
    return cert;
}

Json toJson(const SyndeticConstruction& c) {
    Json convergents = Json::array();
    for (const auto& cv : c.convergents)
        convergents.push_back(Json{{"q", cv.q.str()}, {"p", cv.p.str()}});
    Json polygons = Json::array();
    for (const auto& poly : c.polygons) {
        Json verts = Json::array();
        for (const auto& v : poly) verts.push_back(pointToJson(v));
        polygons.push_back(verts);
    }
    Json translations = Json::array();
    for (const auto& [wx, wy] : c.translations)
        translations.push_back(Json::array({wx, wy}));
    Json classes = Json::array();
    for (const auto& strip : c.classes)
        classes.push_back(Json{{"xLo", strip.xLo},
                               {"xHi", strip.xHi},
                               {"yLo", strip.yLo},
                               {"yHi", strip.yHi},
                               {"removedRows", strip.removedRows}});
    return Json{{"alpha", c.alpha.str()},
                {"convergents", convergents},
                {"polygons", polygons},
                {"translations", translations},
                {"windowBound", c.windowBound},
                {"setA", c.setA},
                {"classes", classes}};
}

SyndeticConstruction syndeticFromJson(const Json& j) {
    SyndeticConstruction c{surdFromJson(j.at("alpha")), {}, {}, {}, 0, {}, {}};
    for (const auto& cv : j.at("convergents"))
        c.convergents.push_back(
            {bigFromJson(cv.at("q"), "syndeticFromJson"), bigFromJson(cv.at("p"), "syndeticFromJson")});
    for (const auto& poly : j.at("polygons")) {
        std::vector<Point2> verts;
        for (const auto& v : poly) verts.push_back(pointFromJson(v));
        c.polygons.push_back(std::move(verts));
    }
    for (const auto& t : j.at("translations")) {
        if (!t.is_array() || t.size() != 2)
            throw std::invalid_argument("syndeticFromJson: translation needs two entries");
        c.translations.emplace_back(t[0].get<long long>(), t[1].get<long long>());
    }
    c.windowBound = j.at("windowBound").get<long long>();
    c.setA = j.at("setA").get<std::vector<long long>>();
    for (const auto& s : j.at("classes")) {
        SyndeticStrip strip;
        strip.xLo = s.at("xLo").get<long long>();
        strip.xHi = s.at("xHi").get<long long>();
        strip.yLo = s.at("yLo").get<long long>();
        strip.yHi = s.at("yHi").get<long long>();
        strip.removedRows = s.at("removedRows").get<std::vector<long long>>();
        c.classes.push_back(std::move(strip));
    }
    return c;
}

Json toJson(const VerificationReport& rep) {
    Json params{{"d", rep.dim}, {"familySize", rep.familySize}, {"h", rep.helly.str()},
                {"t", rep.params.t.str()}};
    if (rep.params.n) params["n"] = rep.params.n->str();
    if (rep.params.m) params["m"] = *rep.params.m;
    if (rep.params.k) params["k"] = *rep.params.k;
    if (rep.params.w) params["w"] = rep.params.w->str();

    Json out{{"theoremId", rep.theoremId},
             {"parameters", params},
             {"outcome", outcomeName(rep.outcome)},
             {"note", rep.note}};

    Json witness = Json::object();
    if (!rep.failingSubfamily.empty()) witness["subfamily"] = rep.failingSubfamily;
    if (rep.witness) witness["box"] = toJson(*rep.witness);
    if (rep.witnessCount) witness["count"] = rep.witnessCount->str();
    if (rep.witnessVolume) witness["volume"] = rep.witnessVolume->str();
    if (rep.witnessPoint) witness["point"] = vectorToJson(*rep.witnessPoint);
    if (!witness.empty()) out["witness"] = witness;
    return out;
}

Json toJson(const CensusResult& c) {
    return Json{{"alpha", c.alpha.str()},
                {"beta", c.beta.str()},
                {"goodCount", c.goodCount.str()},
                {"subfamilyCount", c.subfamilyCount.str()},
                {"bestSize", c.bestSize},
                {"bestSubfamily", c.bestSubfamily}};
}

Json toJson(const BoundRecord& r) {
    return Json{{"setDescriptor", r.setDescriptor},
                {"quantity", r.quantity},
                {"n", r.n.str()},
                {"kind", r.kind == BoundKind::Upper ? "upper" : "lower"},
                {"value", r.value.str()},
                {"provenance", r.provenance}};
}

Json toJson(const CertCheck& c) {
    return Json{{"valid", c.valid}, {"violation", c.violation}};
}

std::string polygonSvg(const PolygonCertificate& cert, const std::vector<Point2>& points) {
    double loX = cert.windowLo.x.toDouble(), loY = cert.windowLo.y.toDouble();
    double hiX = cert.windowHi.x.toDouble(), hiY = cert.windowHi.y.toDouble();
    double spanX = std::max(hiX - loX, 1e-9), spanY = std::max(hiY - loY, 1e-9);
    const double size = 640.0, margin = 40.0;
    double scale = (size - 2 * margin) / std::max(spanX, spanY);
    auto px = [&](const Point2& p) { return margin + (p.x.toDouble() - loX) * scale; };
    // SVG y grows downward; flip so the plot reads like the plane
    auto py = [&](const Point2& p) { return size - margin - (p.y.toDouble() - loY) * scale; };

    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << size << "\" height=\""
        << size << "\" viewBox=\"0 0 " << size << " " << size << "\">\n";
    svg << "  <rect x=\"" << margin << "\" y=\"" << size - margin - spanY * scale
        << "\" width=\"" << spanX * scale << "\" height=\"" << spanY * scale
        << "\" fill=\"none\" stroke=\"#999\" stroke-dasharray=\"6 4\"/>\n";
    if (!cert.vertices.empty()) {
        svg << "  <polygon points=\"";
        for (const auto& v : cert.vertices) svg << px(v) << "," << py(v) << " ";
        svg << "\" fill=\"#cfe8ff\" fill-opacity=\"0.6\" stroke=\"#1f5fa8\" stroke-width=\"2\"/>\n";
    }
    for (const auto& p : points) {
        if (p.x < cert.windowLo.x || p.x > cert.windowHi.x || p.y < cert.windowLo.y ||
            p.y > cert.windowHi.y)
            continue;
        svg << "  <circle cx=\"" << px(p) << "\" cy=\"" << py(p)
            << "\" r=\"3\" fill=\"#333\"/>\n";
    }
    for (const auto& v : cert.vertices)
        svg << "  <circle cx=\"" << px(v) << "\" cy=\"" << py(v)
            << "\" r=\"5\" fill=\"#d9432f\"/>\n";
    svg << "</svg>\n";
    return svg.str();
}

}  // namespace helly
