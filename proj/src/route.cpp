#include "owrp/route.hpp"

#include <cassert>
#include <cstdlib>

namespace owrp {

std::vector<int64_t> select_aligns(const Partition& part) {
    const int k = part.k();
    assert(k >= 1);
    std::vector<int64_t> y(static_cast<size_t>(k));
    if (k == 1) {
        y[0] = part.subs[0].M;
        return y;
    }
    y[0] = relation(part, 0) == Relation::Above ? part.subs[0].M : part.subs[0].m_low;
    for (int i = 1; i + 1 < k; ++i) {
        const Relation before = relation(part, i - 1);
        const Relation after = relation(part, i);
        const BalancedSubPolygon& s = part.subs[static_cast<size_t>(i)];
        if (before == Relation::Above && after == Relation::Below)
            y[static_cast<size_t>(i)] = s.m_low;  // peak
        else
            y[static_cast<size_t>(i)] = s.M;  // valley or pass-through
    }
    const BalancedSubPolygon& last = part.subs[static_cast<size_t>(k) - 1];
    y[static_cast<size_t>(k) - 1] =
        relation(part, k - 2) == Relation::Below ? last.M : last.m_low;
    return y;
}

OrthoRoute normalize_route(std::vector<Point> vertices) {
    std::vector<Point> out;
    out.reserve(vertices.size());
    for (const Point& v : vertices) {
        if (!out.empty() && v == out.back()) continue;
        if (out.size() >= 2) {
            const Point& u = out[out.size() - 2];
            const Point& w = out.back();
            const bool collinear_h = u.y == w.y && w.y == v.y;
            const bool collinear_v = u.x == w.x && w.x == v.x;
            if (collinear_h || collinear_v) {
                const int64_t d1 = collinear_h ? w.x - u.x : w.y - u.y;
                const int64_t d2 = collinear_h ? v.x - w.x : v.y - w.y;
                assert((d1 > 0) == (d2 > 0));  // no fold-backs
                out.back() = v;
                continue;
            }
        }
        out.push_back(v);
    }
    return OrthoRoute{std::move(out)};
}

OrthoRoute build_route(const Partition& part, const std::vector<int64_t>& aligns) {
    assert(aligns.size() == static_cast<size_t>(part.k()));
    std::vector<Point> verts;
    verts.reserve(2 * aligns.size());
    for (int i = 0; i < part.k(); ++i) {
        const BalancedSubPolygon& s = part.subs[static_cast<size_t>(i)];
        verts.push_back({s.x_left, aligns[static_cast<size_t>(i)]});
        verts.push_back({s.x_right, aligns[static_cast<size_t>(i)]});
    }
    return normalize_route(std::move(verts));
}

OrthoRoute trim_route_ends(const OrthoRoute& route, const Decomposition& d,
                           const Partition& part, const std::vector<int64_t>& aligns,
                           bool trim_left, bool trim_right) {
    (void)route;
    const int k = part.k();
    const int m = d.m();
    assert(k >= 1 && m >= 1);

    auto extremal = [&d](int rect) {
        return d.eu[static_cast<size_t>(d.rect_top_group[static_cast<size_t>(rect)])].extremal ||
               d.el[static_cast<size_t>(d.rect_bottom_group[static_cast<size_t>(rect)])].extremal;
    };

    int64_t a = part.subs.front().x_left;
    if (trim_left) {
        for (int i = 0; i < m; ++i) {
            if (extremal(i)) {
                a = d.rects[static_cast<size_t>(i)].x_right;
                break;
            }
        }
        a = std::min(a, part.subs.front().x_right);  // scan stays within rho_1
    }
    int64_t b = part.subs.back().x_right;
    if (trim_right) {
        for (int i = m - 1; i >= 0; --i) {
            if (extremal(i)) {
                b = d.rects[static_cast<size_t>(i)].x_left;
                break;
            }
        }
        b = std::max(b, part.subs.back().x_left);
    }

    if (k == 1) {
        const int64_t y = aligns[0];
        if (a < b) return normalize_route({{a, y}, {b, y}});
        if (a == b) return OrthoRoute{{{a, y}}};
        // Scans crossed: any point between the two frontiers covers the
        // whole sub-polygon.
        return OrthoRoute{{{(a + b) / 2, y}}};
    }

    std::vector<Point> verts;
    verts.push_back({a, aligns[0]});
    verts.push_back({part.subs.front().x_right, aligns[0]});
    for (int i = 1; i + 1 < k; ++i) {
        const BalancedSubPolygon& s = part.subs[static_cast<size_t>(i)];
        verts.push_back({s.x_left, aligns[static_cast<size_t>(i)]});
        verts.push_back({s.x_right, aligns[static_cast<size_t>(i)]});
    }
    verts.push_back({part.subs.back().x_left, aligns[static_cast<size_t>(k) - 1]});
    verts.push_back({b, aligns[static_cast<size_t>(k) - 1]});
    return normalize_route(std::move(verts));
}

OrthoRoute trim_route(const OrthoRoute& route, const Decomposition& d,
                      const Partition& part, const std::vector<int64_t>& aligns) {
    return trim_route_ends(route, d, part, aligns, true, true);
}

RouteMetrics route_metrics(const OrthoRoute& route) {
    RouteMetrics mtr;
    mtr.vertices = static_cast<int>(route.vertices.size());
    assert(mtr.vertices >= 1);
    if (route.is_point()) return mtr;
    for (size_t i = 0; i + 1 < route.vertices.size(); ++i) {
        const Point& a = route.vertices[i];
        const Point& b = route.vertices[i + 1];
        assert((a.x == b.x) != (a.y == b.y));
        if (i + 2 < route.vertices.size()) {
            const Point& c = route.vertices[i + 2];
            assert((a.x == b.x) != (b.x == c.x));  // strict alternation
        }
        mtr.length_doubled += std::llabs(b.x - a.x) + std::llabs(b.y - a.y);
    }
    mtr.bends = mtr.vertices - 2;
    return mtr;
}

int64_t route_length_units(const OrthoRoute& route) {
    const int64_t len = route_metrics(route).length_doubled;
    assert(len % kCoordScale == 0);
    return len / kCoordScale;
}

OrthoRoute route_monotone(const OrthoPolygon& p, bool trim) {
    Decomposition d = decompose(p);
    if (d.cls != DualClass::Monotone)
        throw Error(ErrorCode::UnsupportedClass, "polygon is not x-monotone");
    Partition part = partition_balanced(d);
    std::vector<int64_t> aligns = select_aligns(part);
    OrthoRoute route = build_route(part, aligns);
    if (trim) route = trim_route(route, d, part, aligns);
    return route;
}

}  // namespace owrp
