#include "owrp/oracle.hpp"

#include <algorithm>
#include <cassert>

#include "owrp/decomposition.hpp"

namespace owrp {

bool visible(const OrthoPolygon& p, Point a, Point b) {
    if (!contains_point(p, a) || !contains_point(p, b))
        throw Error(ErrorCode::PointOutside, "visibility endpoint outside polygon");
    return contains_segment(p, a, b);
}

namespace {

OrthoPolygon scale_polygon(const OrthoPolygon& p, int64_t s) {
    std::vector<Point> v;
    v.reserve(static_cast<size_t>(p.n()));
    for (const Point& q : p.vertices()) v.push_back({q.x * s, q.y * s});
    return OrthoPolygon::from_doubled_unchecked(std::move(v));
}

// Witnesses for one sample: its perpendicular projections onto each route
// segment (the vertical/horizontal sight-line candidates), then the route
// vertices.
bool sample_covered(const OrthoPolygon& poly, const std::vector<Point>& route,
                    Point q) {
    for (size_t i = 0; i + 1 < route.size(); ++i) {
        const Point& a = route[i];
        const Point& b = route[i + 1];
        if (a.y == b.y) {
            if (std::min(a.x, b.x) <= q.x && q.x <= std::max(a.x, b.x) &&
                contains_segment(poly, q, {q.x, a.y}))
                return true;
        } else {
            if (std::min(a.y, b.y) <= q.y && q.y <= std::max(a.y, b.y) &&
                contains_segment(poly, q, {a.x, q.y}))
                return true;
        }
    }
    for (const Point& v : route)
        if (contains_segment(poly, q, v)) return true;
    return false;
}

}  // namespace

CoverageReport coverage(const OrthoPolygon& p, const OrthoRoute& route, int resolution) {
    if (resolution < 2)
        throw Error(ErrorCode::InvalidArgument, "coverage resolution must be >= 2");
    const int64_t r = resolution;
    // Everything is rescaled so cell samples and quarter-unit insets are
    // integers: scaled = doubled * 2r = grid units * 4r.
    const int64_t s = 2 * r;
    const OrthoPolygon poly = scale_polygon(p, s);

    std::vector<Point> rt;
    rt.reserve(route.vertices.size());
    for (const Point& v : route.vertices) rt.push_back({v.x * s, v.y * s});
    for (size_t i = 0; i + 1 < rt.size(); ++i)
        if (!contains_segment(poly, rt[i], rt[i + 1]))
            throw Error(ErrorCode::RouteOutside, "route segment leaves the polygon");
    if (rt.size() == 1 && !contains_point(poly, rt[0]))
        throw Error(ErrorCode::RouteOutside, "point route outside the polygon");

    int64_t xmin = p.vertices()[0].x, xmax = xmin, ymin = p.vertices()[0].y, ymax = ymin;
    for (const Point& v : p.vertices()) {
        xmin = std::min(xmin, v.x); xmax = std::max(xmax, v.x);
        ymin = std::min(ymin, v.y); ymax = std::max(ymax, v.y);
    }

    CoverageReport report;
    report.resolution = resolution;
    const double unscale = 1.0 / static_cast<double>(4 * r);
    auto check = [&](Point q) {
        if (!contains_point(poly, q)) return;
        ++report.samples_total;
        if (!sample_covered(poly, rt, q))
            report.uncovered.emplace_back(static_cast<double>(q.x) * unscale,
                                          static_cast<double>(q.y) * unscale);
    };

    // r x r cell-centered samples per unit cell (cells in doubled coords are
    // kCoordScale wide).
    for (int64_t cx = xmin; cx < xmax; cx += kCoordScale) {
        for (int64_t cy = ymin; cy < ymax; cy += kCoordScale) {
            for (int64_t kx = 0; kx < r; ++kx)
                for (int64_t ky = 0; ky < r; ++ky)
                    check({cx * s + 2 * (2 * kx + 1), cy * s + 2 * (2 * ky + 1)});
        }
    }

    // Quarter-unit insets around polygon vertices and rect corners catch
    // blocking right at reflex corners.
    const int64_t eps = r;  // half a doubled unit, scaled
    auto insets = [&](int64_t x, int64_t y) {
        for (int dx : {-1, 1})
            for (int dy : {-1, 1})
                check({x + dx * eps, y + dy * eps});
    };
    for (const Point& v : p.vertices()) insets(v.x * s, v.y * s);
    for (const Rect& rect : decompose(p).rects) {
        insets(rect.x_left * s, rect.bottom * s);
        insets(rect.x_left * s, rect.top * s);
        insets(rect.x_right * s, rect.bottom * s);
        insets(rect.x_right * s, rect.top * s);
    }

    report.covered = report.uncovered.empty();
    return report;
}

int64_t brute_align_min(const std::vector<std::pair<int64_t, int64_t>>& corridors) {
    const int k = static_cast<int>(corridors.size());
    if (k > 20) throw Error(ErrorCode::TooLarge, "brute_align_min limited to k <= 20");
    if (k <= 1) return 0;
    int64_t best = -1;
    for (uint32_t mask = 0; mask < (1u << k); ++mask) {
        int64_t total = 0;
        for (int i = 0; i + 1 < k; ++i) {
            const int64_t a = (mask >> i) & 1 ? corridors[static_cast<size_t>(i)].second
                                              : corridors[static_cast<size_t>(i)].first;
            const int64_t b = (mask >> (i + 1)) & 1
                                  ? corridors[static_cast<size_t>(i) + 1].second
                                  : corridors[static_cast<size_t>(i) + 1].first;
            total += std::abs(b - a);
        }
        if (best < 0 || total < best) best = total;
    }
    return best;
}

std::optional<Rect> kernel_rect(const OrthoPolygon& p) {
    int64_t xlo = INT64_MIN, xhi = INT64_MAX, ylo = INT64_MIN, yhi = INT64_MAX;
    for (int i = 0; i < p.n(); ++i) {
        Segment e = p.edge(i);
        if (e.horizontal()) {
            if (e.b.x > e.a.x) ylo = std::max(ylo, e.a.y);  // interior above
            else yhi = std::min(yhi, e.a.y);
        } else {
            if (e.b.y > e.a.y) xhi = std::min(xhi, e.a.x);  // interior to the left
            else xlo = std::max(xlo, e.a.x);
        }
    }
    if (xlo > xhi || ylo > yhi) return std::nullopt;
    return Rect{xlo, xhi, ylo, yhi, -1, -1};
}

namespace {

std::vector<int64_t> half_grid(std::vector<int64_t> coords) {
    std::sort(coords.begin(), coords.end());
    coords.erase(std::unique(coords.begin(), coords.end()), coords.end());
    std::vector<int64_t> out;
    for (size_t i = 0; i < coords.size(); ++i) {
        out.push_back(coords[i]);
        if (i + 1 < coords.size()) out.push_back((coords[i] + coords[i + 1]) / 2);
    }
    return out;
}

}  // namespace

std::optional<MinBendResult> brute_min_bend(const OrthoPolygon& p, int max_bends,
                                            int64_t budget) {
    if (max_bends < 0 || max_bends > 2)
        throw Error(ErrorCode::InvalidArgument, "brute_min_bend supports max_bends <= 2");

    std::vector<int64_t> xs, ys;
    for (int i = 0; i < p.n(); ++i) {
        Segment e = p.edge(i);
        if (e.vertical()) xs.push_back(e.a.x);
        else ys.push_back(e.a.y);
    }
    const std::vector<int64_t> xc = half_grid(std::move(xs));
    const std::vector<int64_t> yc = half_grid(std::move(ys));

    int64_t left = budget;
    auto try_route = [&](std::vector<Point> verts, int bends)
        -> std::optional<MinBendResult> {
        if (--left < 0) throw Error(ErrorCode::BudgetExceeded, "brute_min_bend budget exhausted");
        for (const Point& v : verts)
            if (!contains_point(p, v)) return std::nullopt;
        for (size_t i = 0; i + 1 < verts.size(); ++i)
            if (!contains_segment(p, verts[i], verts[i + 1])) return std::nullopt;
        OrthoRoute route = normalize_route(std::move(verts));
        if (coverage(p, route, 2).covered) return MinBendResult{bends, std::move(route)};
        return std::nullopt;
    };

    // 0 bends: points, then straight segments.
    for (int64_t x : xc)
        for (int64_t y : yc)
            if (auto hit = try_route({{x, y}}, 0)) return hit;
    for (int64_t y : yc)
        for (size_t i = 0; i < xc.size(); ++i)
            for (size_t j = i + 1; j < xc.size(); ++j)
                if (auto hit = try_route({{xc[i], y}, {xc[j], y}}, 0)) return hit;
    for (int64_t x : xc)
        for (size_t i = 0; i < yc.size(); ++i)
            for (size_t j = i + 1; j < yc.size(); ++j)
                if (auto hit = try_route({{x, yc[i]}, {x, yc[j]}}, 0)) return hit;
    if (max_bends < 1) return std::nullopt;

    // 1 bend: L-shapes around a corner.
    for (int64_t cx : xc)
        for (int64_t cy : yc)
            for (int64_t ex : xc) {
                if (ex == cx) continue;
                for (int64_t ey : yc) {
                    if (ey == cy) continue;
                    if (auto hit = try_route({{ex, cy}, {cx, cy}, {cx, ey}}, 1)) return hit;
                }
            }
    if (max_bends < 2) return std::nullopt;

    // 2 bends: H-V-H and V-H-V.
    for (int64_t y1 : yc)
        for (int64_t y2 : yc) {
            if (y1 == y2) continue;
            for (int64_t x2 : xc)
                for (int64_t x1 : xc) {
                    if (x1 == x2) continue;
                    for (int64_t x3 : xc) {
                        if (x3 == x2) continue;
                        if (auto hit = try_route(
                                {{x1, y1}, {x2, y1}, {x2, y2}, {x3, y2}}, 2))
                            return hit;
                    }
                }
        }
    for (int64_t x1 : xc)
        for (int64_t x2 : xc) {
            if (x1 == x2) continue;
            for (int64_t y2 : yc)
                for (int64_t y1 : yc) {
                    if (y1 == y2) continue;
                    for (int64_t y3 : yc) {
                        if (y3 == y2) continue;
                        if (auto hit = try_route(
                                {{x1, y1}, {x1, y2}, {x2, y2}, {x2, y3}}, 2))
                            return hit;
                    }
                }
        }
    return std::nullopt;
}

}  // namespace owrp
