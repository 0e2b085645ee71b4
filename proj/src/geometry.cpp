#include "owrp/geometry.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>

namespace owrp {

const char* error_code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::NotClosedOrTooSmall: return "NotClosedOrTooSmall";
        case ErrorCode::NotOrthogonal: return "NotOrthogonal";
        case ErrorCode::NotSimple: return "NotSimple";
        case ErrorCode::ZeroLengthEdge: return "ZeroLengthEdge";
        case ErrorCode::UnsupportedClass: return "UnsupportedClass";
        case ErrorCode::PointOutside: return "PointOutside";
        case ErrorCode::RouteOutside: return "RouteOutside";
        case ErrorCode::TooLarge: return "TooLarge";
        case ErrorCode::BudgetExceeded: return "BudgetExceeded";
        case ErrorCode::GenerationFailed: return "GenerationFailed";
        case ErrorCode::MalformedJson: return "MalformedJson";
        case ErrorCode::InvalidArgument: return "InvalidArgument";
    }
    return "Unknown";
}

namespace {

int64_t shoelace2(const std::vector<Point>& v) {
    int64_t sum = 0;
    const size_t n = v.size();
    for (size_t i = 0; i < n; ++i) {
        const Point& a = v[i];
        const Point& b = v[(i + 1) % n];
        sum += a.x * b.y - b.x * a.y;
    }
    return sum;
}

void rotate_to_canonical_start(std::vector<Point>& v) {
    auto it = std::min_element(v.begin(), v.end(), lex_less);
    std::rotate(v.begin(), it, v.end());
}

struct EdgeBox {
    int64_t xmin, xmax, ymin, ymax;
    int index;
};

// Any contact (crossing or touching) between non-adjacent edges makes the
// boundary non-simple. For axis-parallel segments, closed bbox overlap is
// equivalent to contact.
void check_simple(const std::vector<Point>& v) {
    const int n = static_cast<int>(v.size());
    std::vector<EdgeBox> boxes;
    boxes.reserve(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
        const Point& a = v[static_cast<size_t>(i)];
        const Point& b = v[static_cast<size_t>((i + 1) % n)];
        boxes.push_back({std::min(a.x, b.x), std::max(a.x, b.x),
                         std::min(a.y, b.y), std::max(a.y, b.y), i});
    }
    std::sort(boxes.begin(), boxes.end(),
              [](const EdgeBox& a, const EdgeBox& b) { return a.xmin < b.xmin; });
    for (size_t i = 0; i < boxes.size(); ++i) {
        for (size_t j = i + 1; j < boxes.size() && boxes[j].xmin <= boxes[i].xmax; ++j) {
            int d = std::abs(boxes[i].index - boxes[j].index);
            if (d == 1 || d == n - 1) continue;
            if (boxes[j].ymin <= boxes[i].ymax && boxes[i].ymin <= boxes[j].ymax)
                throw Error(ErrorCode::NotSimple, "non-adjacent edges touch or cross",
                            boxes[i].index);
        }
    }
}

}  // namespace

int64_t OrthoPolygon::doubled_area2() const { return shoelace2(verts_); }

OrthoPolygon OrthoPolygon::from_doubled_unchecked(std::vector<Point> doubled) {
    if (shoelace2(doubled) < 0) std::reverse(doubled.begin(), doubled.end());
    rotate_to_canonical_start(doubled);
    OrthoPolygon p;
    p.verts_ = std::move(doubled);
    return p;
}

OrthoPolygon OrthoPolygon::validate(std::span<const std::pair<int64_t, int64_t>> raw) {
    if (raw.size() < 3)
        throw Error(ErrorCode::NotClosedOrTooSmall, "need at least 3 vertices");

    std::vector<Point> v;
    v.reserve(raw.size());
    for (const auto& [x, y] : raw) v.push_back({x * kCoordScale, y * kCoordScale});
    if (v.front() == v.back()) v.pop_back();  // accept explicitly closed input

    const int n0 = static_cast<int>(v.size());
    for (int i = 0; i < n0; ++i) {
        const Point& a = v[static_cast<size_t>(i)];
        const Point& b = v[static_cast<size_t>((i + 1) % n0)];
        if (a == b)
            throw Error(ErrorCode::ZeroLengthEdge, "zero-length edge at vertex " +
                        std::to_string(i), i);
        if (a.x != b.x && a.y != b.y)
            throw Error(ErrorCode::NotOrthogonal, "diagonal edge ending at vertex " +
                        std::to_string((i + 1) % n0), (i + 1) % n0);
    }

    // Merge collinear adjacent edges; a reversal (spike) is non-simple.
    bool changed = true;
    while (changed) {
        changed = false;
        const int n = static_cast<int>(v.size());
        if (n < 3) throw Error(ErrorCode::NotClosedOrTooSmall, "degenerate boundary");
        for (int i = 0; i < n; ++i) {
            const Point& a = v[static_cast<size_t>((i + n - 1) % n)];
            const Point& b = v[static_cast<size_t>(i)];
            const Point& c = v[static_cast<size_t>((i + 1) % n)];
            const bool h1 = a.y == b.y, h2 = b.y == c.y;
            if (h1 != h2) continue;
            // same orientation and shared vertex => collinear
            const int64_t d1 = h1 ? b.x - a.x : b.y - a.y;
            const int64_t d2 = h1 ? c.x - b.x : c.y - b.y;
            if ((d1 > 0) != (d2 > 0))
                throw Error(ErrorCode::NotSimple, "boundary folds back at vertex " +
                            std::to_string(i), i);
            v.erase(v.begin() + i);
            changed = true;
            break;
        }
    }

    if (v.size() < 4)
        throw Error(ErrorCode::NotClosedOrTooSmall, "fewer than 4 vertices after merging");
    assert(v.size() % 2 == 0);

    const int64_t area2 = shoelace2(v);
    if (area2 == 0) throw Error(ErrorCode::NotSimple, "zero-area boundary");
    if (area2 < 0) std::reverse(v.begin(), v.end());

    check_simple(v);
    rotate_to_canonical_start(v);

    OrthoPolygon p;
    p.verts_ = std::move(v);
    return p;
}

bool is_x_monotone(const OrthoPolygon& p) {
    // x-monotone iff the x-direction of horizontal edges flips exactly twice
    // around the cycle.
    std::vector<int> signs;
    for (int i = 0; i < p.n(); ++i) {
        Segment e = p.edge(i);
        if (e.horizontal()) signs.push_back(e.b.x > e.a.x ? 1 : -1);
    }
    int flips = 0;
    const size_t m = signs.size();
    for (size_t i = 0; i < m; ++i)
        if (signs[i] != signs[(i + 1) % m]) ++flips;
    return flips == 2;
}

std::vector<int> reflex_vertices(const OrthoPolygon& p) {
    std::vector<int> out;
    const int n = p.n();
    for (int i = 0; i < n; ++i) {
        const Point a = p.vertex((i + n - 1) % n);
        const Point b = p.vertex(i);
        const Point c = p.vertex((i + 1) % n);
        const int64_t cross = (b.x - a.x) * (c.y - b.y) - (b.y - a.y) * (c.x - b.x);
        if (cross < 0) out.push_back(i);
    }
    return out;
}

bool contains_point_scaled(const OrthoPolygon& p, i128 px, i128 py, i128 den) {
    assert(den > 0);
    const int n = p.n();
    // Boundary counts as inside.
    for (int i = 0; i < n; ++i) {
        Segment e = p.edge(i);
        if (e.horizontal()) {
            if (py == i128(e.a.y) * den &&
                i128(std::min(e.a.x, e.b.x)) * den <= px &&
                px <= i128(std::max(e.a.x, e.b.x)) * den)
                return true;
        } else {
            if (px == i128(e.a.x) * den &&
                i128(std::min(e.a.y, e.b.y)) * den <= py &&
                py <= i128(std::max(e.a.y, e.b.y)) * den)
                return true;
        }
    }
    // Ray to +x; only vertical edges can cross it. Half-open y-range handles
    // ray-through-vertex cases.
    bool inside = false;
    for (int i = 0; i < n; ++i) {
        Segment e = p.edge(i);
        if (!e.vertical()) continue;
        const i128 ylo = i128(std::min(e.a.y, e.b.y)) * den;
        const i128 yhi = i128(std::max(e.a.y, e.b.y)) * den;
        if (ylo <= py && py < yhi && px < i128(e.a.x) * den) inside = !inside;
    }
    return inside;
}

namespace {

struct Frac {
    i128 num;
    i128 den;  // > 0
};

bool frac_less(const Frac& a, const Frac& b) { return a.num * b.den < b.num * a.den; }
bool frac_eq(const Frac& a, const Frac& b) { return a.num * b.den == b.num * a.den; }

}  // namespace

bool contains_segment(const OrthoPolygon& p, Point a, Point b) {
    if (!contains_point(p, a) || !contains_point(p, b)) return false;
    if (a == b) return true;

    const int64_t dx = b.x - a.x;
    const int64_t dy = b.y - a.y;
    const int64_t xlo = std::min(a.x, b.x), xhi = std::max(a.x, b.x);
    const int64_t ylo = std::min(a.y, b.y), yhi = std::max(a.y, b.y);

    // Split the segment at every crossing with the grid lines spanned by the
    // polygon's edges, then check one interior point per piece. Extra splits
    // at lines the segment merely grazes are harmless.
    std::vector<int64_t> xs, ys;
    for (int i = 0; i < p.n(); ++i) {
        Segment e = p.edge(i);
        if (e.vertical() && dx != 0 && xlo < e.a.x && e.a.x < xhi) xs.push_back(e.a.x);
        if (e.horizontal() && dy != 0 && ylo < e.a.y && e.a.y < yhi) ys.push_back(e.a.y);
    }
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
    std::sort(ys.begin(), ys.end());
    ys.erase(std::unique(ys.begin(), ys.end()), ys.end());

    std::vector<Frac> cuts;
    cuts.reserve(xs.size() + ys.size() + 2);
    for (int64_t c : xs)
        cuts.push_back(dx > 0 ? Frac{c - a.x, dx} : Frac{a.x - c, -dx});
    for (int64_t c : ys)
        cuts.push_back(dy > 0 ? Frac{c - a.y, dy} : Frac{a.y - c, -dy});
    cuts.push_back({0, 1});
    cuts.push_back({1, 1});
    std::sort(cuts.begin(), cuts.end(), frac_less);
    cuts.erase(std::unique(cuts.begin(), cuts.end(), frac_eq), cuts.end());

    for (size_t i = 0; i + 1 < cuts.size(); ++i) {
        const Frac& t0 = cuts[i];
        const Frac& t1 = cuts[i + 1];
        // midpoint (t0 + t1) / 2 of the parameter interval
        const i128 num = t0.num * t1.den + t1.num * t0.den;
        const i128 den = 2 * t0.den * t1.den;
        const i128 px = i128(a.x) * den + num * dx;
        const i128 py = i128(a.y) * den + num * dy;
        if (!contains_point_scaled(p, px, py, den)) return false;
    }
    return true;
}

}  // namespace owrp
