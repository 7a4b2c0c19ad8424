#pragma once

#include "helly/rational.hpp"

#include <vector>

namespace helly {

struct Point2 {
    Rational x, y;

    bool operator==(const Point2& o) const { return x == o.x && y == o.y; }
    // lexicographic, x dominant
    bool operator<(const Point2& o) const {
        auto c = x <=> o.x;
        if (c != std::strong_ordering::equal) return c == std::strong_ordering::less;
        return y < o.y;
    }
};

// Sign of the cross product (b-a) x (c-a): +1 left turn, 0 collinear, -1 right turn.
int orientation(const Point2& a, const Point2& b, const Point2& c);

// Convex hull in counterclockwise order, collinear points eliminated.
// Degenerate inputs: a single point comes back alone, a collinear set as its
// two extremes.
std::vector<Point2> convexHull2(std::vector<Point2> pts);

enum class Containment { Interior, Closed };

// Membership test against a convex polygon given in counterclockwise order.
// Throws std::invalid_argument if the vertex list is not in strictly convex
// position (the caller promised convexity; a violated promise is an error,
// not a false result). Polygons with one or two vertices have empty interior.
bool pointInConvexPolygon(const Point2& p, const std::vector<Point2>& poly, Containment mode);

// True when q lies on the closed segment [a, b].
bool onSegment(const Point2& q, const Point2& a, const Point2& b);

}  // namespace helly
