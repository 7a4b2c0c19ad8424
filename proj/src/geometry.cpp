#include "helly/geometry.hpp"

#include <algorithm>
#include <stdexcept>

namespace helly {

int orientation(const Point2& a, const Point2& b, const Point2& c) {
    Rational cross = (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
    return cross.sign();
}

std::vector<Point2> convexHull2(std::vector<Point2> pts) {
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    size_t n = pts.size();
    if (n <= 1) return pts;
    if (n == 2) return pts;

    // Andrew's monotone chain; strict turns only, so collinear points drop out.
    std::vector<Point2> hull(2 * n);
    size_t k = 0;
    for (size_t i = 0; i < n; ++i) {
        while (k >= 2 && orientation(hull[k - 2], hull[k - 1], pts[i]) <= 0) --k;
        hull[k++] = pts[i];
    }
    size_t lower = k + 1;
    for (size_t i = n - 1; i-- > 0;) {
        while (k >= lower && orientation(hull[k - 2], hull[k - 1], pts[i]) <= 0) --k;
        hull[k++] = pts[i];
    }
    hull.resize(k - 1);
    return hull;
}

bool onSegment(const Point2& q, const Point2& a, const Point2& b) {
    if (orientation(a, b, q) != 0) return false;
    return !(q.x < std::min(a.x, b.x) || q.x > std::max(a.x, b.x) ||
             q.y < std::min(a.y, b.y) || q.y > std::max(a.y, b.y));
}

bool pointInConvexPolygon(const Point2& p, const std::vector<Point2>& poly, Containment mode) {
    size_t n = poly.size();
    if (n == 0) throw std::invalid_argument("pointInConvexPolygon: empty polygon");
    if (n == 1) return mode == Containment::Closed && p == poly[0];
    if (n == 2) return mode == Containment::Closed && onSegment(p, poly[0], poly[1]);

    for (size_t i = 0; i < n; ++i)
        if (orientation(poly[i], poly[(i + 1) % n], poly[(i + 2) % n]) != 1)
            throw std::invalid_argument("pointInConvexPolygon: vertices not strictly convex ccw");

    bool boundary = false;
    for (size_t i = 0; i < n; ++i) {
        int o = orientation(poly[i], poly[(i + 1) % n], p);
        if (o < 0) return false;
        if (o == 0) boundary = true;
    }
    return mode == Containment::Closed ? true : !boundary;
}

}  // namespace helly
