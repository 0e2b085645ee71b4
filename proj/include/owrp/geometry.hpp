#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "owrp/errors.hpp"

namespace owrp {

using i128 = __int128;

// All internal coordinates are the input grid coordinates multiplied by
// kCoordScale, so midpoints of grid segments stay integral.
inline constexpr int64_t kCoordScale = 2;

struct Point {
    int64_t x = 0;
    int64_t y = 0;

    friend bool operator==(const Point&, const Point&) = default;
};

// Lexicographic (x, then y).
inline bool lex_less(const Point& a, const Point& b) {
    return a.x != b.x ? a.x < b.x : a.y < b.y;
}

struct Segment {
    Point a;
    Point b;

    bool horizontal() const { return a.y == b.y; }
    bool vertical() const { return a.x == b.x; }
    bool degenerate() const { return a == b; }
};

// Simple orthogonal polygon: counterclockwise vertex cycle, strictly
// alternating axis-parallel edges, no redundant (collinear) vertices,
// rotation canonicalized to the lexicographically smallest vertex.
// Coordinates are stored doubled (see kCoordScale).
class OrthoPolygon {
public:
    // Normalizes and checks a raw vertex list given in grid units.
    // Throws Error with NotClosedOrTooSmall / NotOrthogonal / NotSimple /
    // ZeroLengthEdge.
    static OrthoPolygon validate(std::span<const std::pair<int64_t, int64_t>> raw);

    // For generators that guarantee validity by construction; only applies
    // ccw/rotation canonicalization. `doubled` must already satisfy all
    // invariants except orientation/rotation.
    static OrthoPolygon from_doubled_unchecked(std::vector<Point> doubled);

    int n() const { return static_cast<int>(verts_.size()); }
    const std::vector<Point>& vertices() const { return verts_; }
    Point vertex(int i) const { return verts_[static_cast<size_t>(i)]; }
    Segment edge(int i) const {
        return {verts_[static_cast<size_t>(i)],
                verts_[static_cast<size_t>((i + 1) % n())]};
    }

    // Twice the signed area in doubled coordinates (positive, ccw).
    int64_t doubled_area2() const;
    // Exact area in grid units.
    int64_t area_units() const { return doubled_area2() / (2 * kCoordScale * kCoordScale); }

    friend bool operator==(const OrthoPolygon&, const OrthoPolygon&) = default;

private:
    std::vector<Point> verts_;
};

bool is_x_monotone(const OrthoPolygon& p);

// Indices of vertices with a 270-degree interior angle.
std::vector<int> reflex_vertices(const OrthoPolygon& p);

// Closed-region containment, exact. The point (px/den, py/den) may be
// rational; den > 0.
bool contains_point_scaled(const OrthoPolygon& p, i128 px, i128 py, i128 den);

inline bool contains_point(const OrthoPolygon& p, Point q) {
    return contains_point_scaled(p, q.x, q.y, 1);
}

// True iff the whole closed segment lies in the closed region. Grazing the
// boundary or passing through a reflex corner does not block.
bool contains_segment(const OrthoPolygon& p, Point a, Point b);

}  // namespace owrp
