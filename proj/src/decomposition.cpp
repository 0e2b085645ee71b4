#include "owrp/decomposition.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>

namespace owrp {

int64_t Decomposition::area_units() const {
    int64_t sum = 0;
    for (const Rect& r : rects) sum += (r.x_right - r.x_left) * (r.top - r.bottom);
    return sum / (kCoordScale * kCoordScale);
}

void build_monotone_groups(Decomposition& d) {
    d.eu.clear();
    d.el.clear();
    const int m = d.m();
    d.rect_top_group.assign(static_cast<size_t>(m), -1);
    d.rect_bottom_group.assign(static_cast<size_t>(m), -1);

    for (int i = 0; i < m; ++i) {
        const Rect& r = d.rects[static_cast<size_t>(i)];
        if (d.eu.empty() || d.eu.back().edge_id != r.top_edge_id)
            d.eu.push_back({r.top_edge_id, r.top, i, i, false});
        else
            d.eu.back().last_rect = i;
        d.rect_top_group[static_cast<size_t>(i)] = static_cast<int>(d.eu.size()) - 1;

        if (d.el.empty() || d.el.back().edge_id != r.bottom_edge_id)
            d.el.push_back({r.bottom_edge_id, r.bottom, i, i, false});
        else
            d.el.back().last_rect = i;
        d.rect_bottom_group[static_cast<size_t>(i)] = static_cast<int>(d.el.size()) - 1;
    }

    // Missing neighbors pad with -inf for top groups, +inf for bottom groups.
    const int gu = static_cast<int>(d.eu.size());
    for (int g = 0; g < gu; ++g) {
        const bool ge_prev = g == 0 || d.eu[static_cast<size_t>(g)].y >= d.eu[static_cast<size_t>(g - 1)].y;
        const bool ge_next = g == gu - 1 || d.eu[static_cast<size_t>(g)].y >= d.eu[static_cast<size_t>(g + 1)].y;
        d.eu[static_cast<size_t>(g)].extremal = ge_prev && ge_next;
    }
    const int gl = static_cast<int>(d.el.size());
    for (int g = 0; g < gl; ++g) {
        const bool le_prev = g == 0 || d.el[static_cast<size_t>(g)].y <= d.el[static_cast<size_t>(g - 1)].y;
        const bool le_next = g == gl - 1 || d.el[static_cast<size_t>(g)].y <= d.el[static_cast<size_t>(g + 1)].y;
        d.el[static_cast<size_t>(g)].extremal = le_prev && le_next;
    }
}

namespace {

struct ChainEdge {
    int64_t xmin, xmax, y;
    int edge_id;
};

Decomposition decompose_monotone(const OrthoPolygon& p) {
    std::vector<ChainEdge> bottoms, tops;
    std::vector<int64_t> xs;
    for (int i = 0; i < p.n(); ++i) {
        Segment e = p.edge(i);
        if (e.horizontal()) {
            ChainEdge ce{std::min(e.a.x, e.b.x), std::max(e.a.x, e.b.x), e.a.y, i};
            (e.b.x > e.a.x ? bottoms : tops).push_back(ce);  // ccw: bottom chain runs left to right
        } else {
            xs.push_back(e.a.x);
        }
    }
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
    auto by_x = [](const ChainEdge& a, const ChainEdge& b) { return a.xmin < b.xmin; };
    std::sort(bottoms.begin(), bottoms.end(), by_x);
    std::sort(tops.begin(), tops.end(), by_x);

    Decomposition d;
    d.cls = DualClass::Monotone;
    size_t bi = 0, ti = 0;
    for (size_t s = 0; s + 1 < xs.size(); ++s) {
        const int64_t xlo = xs[s], xhi = xs[s + 1];
        while (bi + 1 < bottoms.size() && bottoms[bi].xmax <= xlo) ++bi;
        while (ti + 1 < tops.size() && tops[ti].xmax <= xlo) ++ti;
        assert(bottoms[bi].xmin <= xlo && bottoms[bi].xmax >= xhi);
        assert(tops[ti].xmin <= xlo && tops[ti].xmax >= xhi);
        d.rects.push_back({xlo, xhi, bottoms[bi].y, tops[ti].y,
                           tops[ti].edge_id, bottoms[bi].edge_id});
    }
    const int m = d.m();
    d.dual.assign(static_cast<size_t>(m), {});
    for (int i = 0; i + 1 < m; ++i) {
        d.dual[static_cast<size_t>(i)].push_back(i + 1);
        d.dual[static_cast<size_t>(i + 1)].push_back(i);
    }
    build_monotone_groups(d);
    return d;
}

struct Cell {
    int64_t bottom, top;
    int bottom_id, top_id;
    int rect = -1;
};

Decomposition decompose_general(const OrthoPolygon& p) {
    std::vector<int64_t> xs;
    for (int i = 0; i < p.n(); ++i)
        if (p.edge(i).vertical()) xs.push_back(p.edge(i).a.x);
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
    const int slabs = static_cast<int>(xs.size()) - 1;

    // Interior intervals of each slab, read off at the slab midpoint.
    std::vector<std::vector<Cell>> cells(static_cast<size_t>(slabs));
    for (int s = 0; s < slabs; ++s) {
        const int64_t midx = (xs[static_cast<size_t>(s)] + xs[static_cast<size_t>(s) + 1]) / 2;
        struct Hit { int64_t y; bool is_bottom; int id; };
        std::vector<Hit> hits;
        for (int i = 0; i < p.n(); ++i) {
            Segment e = p.edge(i);
            if (!e.horizontal()) continue;
            if (std::min(e.a.x, e.b.x) < midx && midx < std::max(e.a.x, e.b.x))
                hits.push_back({e.a.y, e.b.x > e.a.x, i});
        }
        std::sort(hits.begin(), hits.end(),
                  [](const Hit& a, const Hit& b) { return a.y < b.y; });
        assert(hits.size() % 2 == 0);
        for (size_t h = 0; h < hits.size(); h += 2) {
            assert(hits[h].is_bottom && !hits[h + 1].is_bottom);
            cells[static_cast<size_t>(s)].push_back(
                {hits[h].y, hits[h + 1].y, hits[h].id, hits[h + 1].id, -1});
        }
    }

    // Vertical polygon edges grouped by x, to detect blocked cell contacts.
    auto edge_blocks = [&p](int64_t x, int64_t y) {
        for (int i = 0; i < p.n(); ++i) {
            Segment e = p.edge(i);
            if (e.vertical() && e.a.x == x &&
                std::min(e.a.y, e.b.y) <= y && y <= std::max(e.a.y, e.b.y))
                return true;
        }
        return false;
    };

    Decomposition d;
    std::vector<std::pair<int, int>> dual_edges;
    for (int s = 0; s < slabs; ++s) {
        for (Cell& c : cells[static_cast<size_t>(s)]) {
            // Merge with an identical-interval neighbor cell on the left;
            // otherwise this cell starts a new rect.
            int merged = -1;
            if (s > 0) {
                for (Cell& l : cells[static_cast<size_t>(s) - 1]) {
                    const int64_t lo = std::max(l.bottom, c.bottom);
                    const int64_t hi = std::min(l.top, c.top);
                    if (lo >= hi) continue;
                    if (edge_blocks(xs[static_cast<size_t>(s)], (lo + hi) / 2)) continue;
                    if (l.bottom == c.bottom && l.top == c.top) {
                        merged = l.rect;
                    } else {
                        dual_edges.emplace_back(l.rect, -static_cast<int>(
                            &c - cells[static_cast<size_t>(s)].data()) - 1);
                    }
                }
            }
            if (merged >= 0) {
                c.rect = merged;
                d.rects[static_cast<size_t>(merged)].x_right = xs[static_cast<size_t>(s) + 1];
            } else {
                c.rect = d.m();
                d.rects.push_back({xs[static_cast<size_t>(s)], xs[static_cast<size_t>(s) + 1],
                                   c.bottom, c.top, c.top_id, c.bottom_id});
            }
        }
        // Resolve dual edges recorded against this slab's cells (negative
        // placeholder encodes the cell index before its rect id existed).
        for (auto& [a, b] : dual_edges)
            if (b < 0) b = cells[static_cast<size_t>(s)][static_cast<size_t>(-b - 1)].rect;
    }

    const int m = d.m();
    d.dual.assign(static_cast<size_t>(m), {});
    std::sort(dual_edges.begin(), dual_edges.end());
    dual_edges.erase(std::unique(dual_edges.begin(), dual_edges.end()), dual_edges.end());
    for (auto [a, b] : dual_edges) {
        if (a == b) continue;
        d.dual[static_cast<size_t>(a)].push_back(b);
        d.dual[static_cast<size_t>(b)].push_back(a);
    }
    for (auto& adj : d.dual) {
        std::sort(adj.begin(), adj.end());
        adj.erase(std::unique(adj.begin(), adj.end()), adj.end());
    }
    return d;
}

// Side on which neighbor `nb` attaches to `r`: -1 left, +1 right.
int attach_side(const Rect& r, const Rect& nb) {
    if (nb.x_right == r.x_left) return -1;
    assert(nb.x_left == r.x_right);
    return 1;
}

void classify_path(Decomposition& d) {
    const int m = d.m();
    size_t edge_count = 0;
    int deg1 = 0;
    for (const auto& adj : d.dual) {
        edge_count += adj.size();
        if (adj.size() == 1) ++deg1;
        if (adj.size() > 2) { d.cls = DualClass::Unsupported; return; }
    }
    edge_count /= 2;
    const bool path_shape = (m == 1 && edge_count == 0) ||
                            (m > 1 && edge_count == static_cast<size_t>(m) - 1 && deg1 == 2);
    if (!path_shape) { d.cls = DualClass::Unsupported; return; }

    // Order along the path, starting from the degree-1 rect with the
    // lexicographically smallest (x_left, bottom) corner.
    int start = 0;
    for (int i = 1; i < m; ++i) {
        if (d.dual[static_cast<size_t>(i)].size() > 1) continue;
        if (d.dual[static_cast<size_t>(start)].size() > 1) { start = i; continue; }
        const Rect& a = d.rects[static_cast<size_t>(i)];
        const Rect& b = d.rects[static_cast<size_t>(start)];
        if (a.x_left != b.x_left ? a.x_left < b.x_left : a.bottom < b.bottom) start = i;
    }
    std::vector<int> order;
    order.reserve(static_cast<size_t>(m));
    int prev = -1, cur = start;
    while (true) {
        order.push_back(cur);
        int next = -1;
        for (int nb : d.dual[static_cast<size_t>(cur)])
            if (nb != prev) next = nb;
        if (next < 0) break;
        prev = cur;
        cur = next;
    }
    if (order.size() != static_cast<size_t>(m)) { d.cls = DualClass::Unsupported; return; }

    std::vector<Rect> reordered;
    reordered.reserve(static_cast<size_t>(m));
    for (int i : order) reordered.push_back(d.rects[static_cast<size_t>(i)]);
    d.rects = std::move(reordered);
    d.dual.assign(static_cast<size_t>(m), {});
    for (int i = 0; i + 1 < m; ++i) {
        d.dual[static_cast<size_t>(i)].push_back(i + 1);
        d.dual[static_cast<size_t>(i + 1)].push_back(i);
    }

    d.reflex_rects.clear();
    for (int i = 1; i + 1 < m; ++i) {
        const Rect& r = d.rects[static_cast<size_t>(i)];
        if (attach_side(r, d.rects[static_cast<size_t>(i - 1)]) ==
            attach_side(r, d.rects[static_cast<size_t>(i + 1)]))
            d.reflex_rects.push_back(i);
    }
    d.cls = DualClass::PathPolygon;
}

}  // namespace

Decomposition decompose(const OrthoPolygon& p) {
    if (is_x_monotone(p)) return decompose_monotone(p);
    Decomposition d = decompose_general(p);
    classify_path(d);
    return d;
}

Decomposition vertical_decompose(const OrthoPolygon& p) {
    Decomposition d = decompose(p);
    if (d.cls == DualClass::Unsupported)
        throw Error(ErrorCode::UnsupportedClass, "dual graph is not a path");
    return d;
}

DualClass dual_path_class(const OrthoPolygon& p) { return decompose(p).cls; }

}  // namespace owrp
