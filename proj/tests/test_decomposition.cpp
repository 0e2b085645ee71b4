#include <algorithm>
#include <array>

#include "doctest.h"
#include "fixtures.hpp"
#include "owrp/decomposition.hpp"
#include "owrp/generator.hpp"

using namespace owrp;

namespace {

// Rect corners in grid units for readable comparisons.
std::vector<std::array<int64_t, 4>> rect_boxes(const Decomposition& d) {
    std::vector<std::array<int64_t, 4>> out;
    for (const Rect& r : d.rects)
        out.push_back({r.x_left / kCoordScale, r.x_right / kCoordScale,
                       r.bottom / kCoordScale, r.top / kCoordScale});
    return out;
}

}  // namespace

TEST_CASE("fixture decompositions") {
    Decomposition r = decompose(fx::poly_rect());
    CHECK(r.cls == DualClass::Monotone);
    CHECK(rect_boxes(r) == std::vector<std::array<int64_t, 4>>{{0, 4, 0, 2}});

    Decomposition a = decompose(fx::poly_a());
    CHECK(a.cls == DualClass::Monotone);
    CHECK(rect_boxes(a) == std::vector<std::array<int64_t, 4>>{
                               {0, 1, 0, 1}, {1, 2, 0, 2}, {2, 3, 0, 3}});
    CHECK(a.area_units() == 6);

    Decomposition b = decompose(fx::poly_b());
    CHECK(b.cls == DualClass::Monotone);
    CHECK(rect_boxes(b) == std::vector<std::array<int64_t, 4>>{
                               {0, 1, 0, 2}, {1, 2, 0, 5}, {2, 3, 3, 5}});
    CHECK(b.area_units() == 9);
}

TEST_CASE("edge groups") {
    auto group_view = [](const std::vector<EdgeGroup>& gs) {
        std::vector<std::array<int64_t, 3>> out;  // y, first, last (grid units)
        for (const EdgeGroup& g : gs) out.push_back({g.y / kCoordScale, g.first_rect, g.last_rect});
        return out;
    };

    Decomposition a = decompose(fx::poly_a());
    CHECK(group_view(a.eu) == std::vector<std::array<int64_t, 3>>{{1, 0, 0}, {2, 1, 1}, {3, 2, 2}});
    CHECK(group_view(a.el) == std::vector<std::array<int64_t, 3>>{{0, 0, 2}});

    Decomposition b = decompose(fx::poly_b());
    CHECK(group_view(b.eu) == std::vector<std::array<int64_t, 3>>{{2, 0, 0}, {5, 1, 2}});
    CHECK(group_view(b.el) == std::vector<std::array<int64_t, 3>>{{0, 0, 1}, {3, 2, 2}});

    Decomposition r = decompose(fx::poly_rect());
    CHECK(group_view(r.eu) == std::vector<std::array<int64_t, 3>>{{2, 0, 0}});
    CHECK(group_view(r.el) == std::vector<std::array<int64_t, 3>>{{0, 0, 0}});
}

TEST_CASE("extremal flags") {
    auto extremal_ys = [](const std::vector<EdgeGroup>& gs) {
        std::vector<int64_t> out;
        for (const EdgeGroup& g : gs)
            if (g.extremal) out.push_back(g.y / kCoordScale);
        return out;
    };
    Decomposition a = decompose(fx::poly_a());
    CHECK(extremal_ys(a.eu) == std::vector<int64_t>{3});
    CHECK(extremal_ys(a.el) == std::vector<int64_t>{0});

    Decomposition b = decompose(fx::poly_b());
    CHECK(extremal_ys(b.eu) == std::vector<int64_t>{5});
    CHECK(extremal_ys(b.el) == std::vector<int64_t>{0});

    Decomposition r = decompose(fx::poly_rect());
    CHECK(r.eu[0].extremal);
    CHECK(r.el[0].extremal);
}

TEST_CASE("dual_path_class fixtures") {
    CHECK(dual_path_class(fx::poly_a()) == DualClass::Monotone);
    CHECK(dual_path_class(fx::ecomb()) == DualClass::Unsupported);

    Decomposition s = decompose(fx::sideu());
    CHECK(s.cls == DualClass::PathPolygon);
    REQUIRE(s.m() == 3);
    // Path order: bottom tooth, spine, top tooth; the spine is reflex (both
    // teeth attach on its right side).
    CHECK(rect_boxes(s) == std::vector<std::array<int64_t, 4>>{
                               {1, 3, 0, 1}, {0, 1, 0, 3}, {1, 3, 2, 3}});
    CHECK(s.reflex_rects == std::vector<int>{1});

    CHECK_ERR(vertical_decompose(fx::ecomb()), ErrorCode::UnsupportedClass);
}

TEST_CASE("decomposition properties on generated instances") {
    SplitMix64 rng(11);
    for (int iter = 0; iter < 100; ++iter) {
        GenSpec spec;
        spec.columns = static_cast<int>(1 + rng.below(40));
        spec.max_height = 8;
        spec.seed = rng.next();
        OrthoPolygon p = gen_monotone(spec);
        Decomposition d = decompose(p);
        REQUIRE(d.cls == DualClass::Monotone);
        CHECK(d.m() == (p.n() - 2) / 2);
        CHECK(d.area_units() == p.area_units());
        for (int i = 0; i + 1 < d.m(); ++i) {
            const Rect& a = d.rects[static_cast<size_t>(i)];
            const Rect& b = d.rects[static_cast<size_t>(i) + 1];
            CHECK(a.x_right == b.x_left);
            CHECK((a.top == b.top || a.bottom == b.bottom));
        }
        // Every rect in exactly one EU and one EL group.
        std::vector<int> top_hits(static_cast<size_t>(d.m()), 0);
        std::vector<int> bottom_hits(static_cast<size_t>(d.m()), 0);
        for (const EdgeGroup& g : d.eu)
            for (int i = g.first_rect; i <= g.last_rect; ++i) ++top_hits[static_cast<size_t>(i)];
        for (const EdgeGroup& g : d.el)
            for (int i = g.first_rect; i <= g.last_rect; ++i) ++bottom_hits[static_cast<size_t>(i)];
        CHECK(std::all_of(top_hits.begin(), top_hits.end(), [](int c) { return c == 1; }));
        CHECK(std::all_of(bottom_hits.begin(), bottom_hits.end(), [](int c) { return c == 1; }));
    }
}

TEST_CASE("extremal flags invariant under translation, flipped by mirror") {
    SplitMix64 rng(13);
    for (int iter = 0; iter < 30; ++iter) {
        GenSpec spec;
        spec.columns = static_cast<int>(1 + rng.below(20));
        spec.max_height = 6;
        spec.seed = rng.next();
        OrthoPolygon p = gen_monotone(spec);
        Decomposition d = decompose(p);

        Decomposition dt = decompose(fx::translate(p, -5, 7));
        REQUIRE(d.eu.size() == dt.eu.size());
        REQUIRE(d.el.size() == dt.el.size());
        for (size_t i = 0; i < d.eu.size(); ++i) CHECK(d.eu[i].extremal == dt.eu[i].extremal);
        for (size_t i = 0; i < d.el.size(); ++i) CHECK(d.el[i].extremal == dt.el[i].extremal);

        Decomposition dm = decompose(fx::mirror_y(p));
        REQUIRE(d.eu.size() == dm.el.size());
        REQUIRE(d.el.size() == dm.eu.size());
        for (size_t i = 0; i < d.eu.size(); ++i) {
            CHECK(d.eu[i].y == -dm.el[i].y);
            CHECK(d.eu[i].extremal == dm.el[i].extremal);
        }
        for (size_t i = 0; i < d.el.size(); ++i) CHECK(d.el[i].extremal == dm.eu[i].extremal);
    }
}

TEST_CASE("monotone fast path matches the general slab algorithm") {
    SplitMix64 rng(17);
    for (int iter = 0; iter < 30; ++iter) {
        GenSpec spec;
        spec.columns = static_cast<int>(1 + rng.below(25));
        spec.max_height = 7;
        spec.unit_widths = false;
        spec.seed = rng.next();
        OrthoPolygon p = gen_monotone(spec);
        Decomposition d = decompose(p);
        // The general algorithm must find the same cells: compare against the
        // area and rect count plus pairwise-disjoint interiors.
        int64_t area = 0;
        for (const Rect& r : d.rects)
            area += (r.x_right - r.x_left) * (r.top - r.bottom) /
                    (kCoordScale * kCoordScale);
        CHECK(area == p.area_units());
    }
}
