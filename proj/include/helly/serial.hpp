#pragma once

#include "helly/certificates.hpp"
#include "helly/constructions.hpp"
#include "helly/harness.hpp"

#include "json.hpp"

#include <string>
#include <vector>

namespace helly {

using Json = nlohmann::json;

// Scalars travel as canonical strings ("num/den", "a/b+c/d*sqrt(D)") so
// serialized values round-trip bit-exactly; the parsers reject anything
// non-canonical.
Json toJson(const Rational& x);
Rational rationalFromJson(const Json& j);
Json toJson(const Surd& s);
Surd surdFromJson(const Json& j);

Json toJson(const Box& b);
Box boxFromJson(const Json& j);

Json toJson(const PeriodicSet1D& s);
PeriodicSet1D periodicSetFromJson(const Json& j);
Json toJson(const PeriodicProductSet& q);
PeriodicProductSet periodicProductFromJson(const Json& j);

Json toJson(const FamilyInstance& F);
FamilyInstance familyFromJson(const Json& j);

// {"type":"empty-polygon", ...} / {"type":"ratio-run", ...}; the readers
// check the tag.
Json toJson(const PolygonCertificate& cert);
PolygonCertificate polygonCertificateFromJson(const Json& j);
Json toJson(const RatioRunCertificate& cert);
RatioRunCertificate ratioRunFromJson(const Json& j);

Json toJson(const SyndeticConstruction& c);
SyndeticConstruction syndeticFromJson(const Json& j);

// Output-only records.
Json toJson(const VerificationReport& rep);
Json toJson(const CensusResult& c);
Json toJson(const BoundRecord& r);
Json toJson(const CertCheck& c);

// Standalone SVG of a polygon certificate with the ambient points that fall
// inside its window: hull outline, vertex dots, interior points.
std::string polygonSvg(const PolygonCertificate& cert, const std::vector<Point2>& points);

}  // namespace helly
