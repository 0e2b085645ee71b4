#include <algorithm>
#include <cstdlib>

#include "doctest.h"
#include "fixtures.hpp"
#include "owrp/generator.hpp"
#include "owrp/oracle.hpp"
#include "owrp/route.hpp"

using namespace owrp;

namespace {

Partition from_corridors(const std::vector<std::pair<int64_t, int64_t>>& cs) {
    Partition part;
    int i = 0;
    for (const auto& [m_low, big_m] : cs) {
        BalancedSubPolygon s;
        s.first_rect = s.last_rect = i;
        s.m_low = m_low * kCoordScale;
        s.M = big_m * kCoordScale;
        s.x_left = i * kCoordScale;
        s.x_right = (i + 1) * kCoordScale;
        part.subs.push_back(s);
        ++i;
    }
    return part;
}

std::vector<int64_t> aligns_units(const Partition& part) {
    std::vector<int64_t> out;
    for (int64_t y : select_aligns(part)) out.push_back(y / kCoordScale);
    return out;
}

int64_t connector_total(const Partition& part, const std::vector<int64_t>& aligns) {
    int64_t total = 0;
    for (size_t i = 0; i + 1 < aligns.size(); ++i)
        total += std::abs(aligns[i + 1] - aligns[i]);
    (void)part;
    return total;
}

std::vector<Point> grid_pts(const OrthoRoute& r) {
    std::vector<Point> out;
    for (const Point& v : r.vertices) out.push_back({v.x / kCoordScale, v.y / kCoordScale});
    return out;
}

}  // namespace

TEST_CASE("select_aligns fixtures") {
    CHECK(aligns_units(from_corridors({{0, 2}})) == std::vector<int64_t>{2});
    Partition two = from_corridors({{0, 2}, {3, 5}});
    CHECK(aligns_units(two) == std::vector<int64_t>{2, 3});
    CHECK(connector_total(two, select_aligns(two)) == 1 * kCoordScale);
    Partition three = from_corridors({{0, 2}, {5, 7}, {3, 4}});
    CHECK(aligns_units(three) == std::vector<int64_t>{2, 5, 4});
    CHECK(connector_total(three, select_aligns(three)) == 4 * kCoordScale);
}

TEST_CASE("build_route fixtures") {
    Decomposition b = decompose(fx::poly_b());
    Partition pb = partition_balanced(b);
    OrthoRoute rb = build_route(pb, select_aligns(pb));
    CHECK(grid_pts(rb) == std::vector<Point>{{0, 2}, {2, 2}, {2, 3}, {3, 3}});
    CHECK(route_metrics(rb).bends == 2);

    Decomposition a = decompose(fx::poly_a());
    Partition pa = partition_balanced(a);
    OrthoRoute ra = build_route(pa, select_aligns(pa));
    CHECK(grid_pts(ra) == std::vector<Point>{{0, 1}, {3, 1}});
    CHECK(route_metrics(ra).bends == 0);

    Decomposition r = decompose(fx::poly_rect());
    Partition pr = partition_balanced(r);
    OrthoRoute rr = build_route(pr, select_aligns(pr));
    CHECK(grid_pts(rr) == std::vector<Point>{{0, 2}, {4, 2}});
}

TEST_CASE("trim_route fixtures") {
    OrthoRoute b = route_monotone(fx::poly_b());
    CHECK(grid_pts(b) == std::vector<Point>{{1, 2}, {2, 2}, {2, 3}});
    RouteMetrics mb = route_metrics(b);
    CHECK(mb.bends == 1);
    CHECK(route_length_units(b) == 2);

    OrthoRoute a = route_monotone(fx::poly_a());
    CHECK(grid_pts(a) == std::vector<Point>{{1, 1}, {2, 1}});
    CHECK(route_metrics(a).bends == 0);

    OrthoRoute r = route_monotone(fx::poly_rect());
    REQUIRE(r.is_point());
    CHECK(grid_pts(r) == std::vector<Point>{{2, 2}});
    CHECK(route_metrics(r).bends == 0);
    CHECK(route_length_units(r) == 0);
}

TEST_CASE("untrimmed metrics fixtures") {
    OrthoRoute b = route_monotone(fx::poly_b(), false);
    RouteMetrics m = route_metrics(b);
    CHECK(m.bends == 2);
    CHECK(route_length_units(b) == 4);
}

TEST_CASE("route properties on generated instances") {
    SplitMix64 rng(31);
    for (int iter = 0; iter < 80; ++iter) {
        GenSpec spec;
        spec.columns = static_cast<int>(1 + rng.below(30));
        spec.max_height = 9;
        spec.seed = rng.next();
        OrthoPolygon p = gen_monotone(spec);
        Decomposition d = decompose(p);
        Partition part = partition_balanced(d);
        std::vector<int64_t> aligns = select_aligns(part);

        OrthoRoute full = build_route(part, aligns);
        RouteMetrics mf = route_metrics(full);
        CHECK(mf.bends == 2 * (part.k() - 1));
        for (size_t i = 0; i + 1 < full.vertices.size(); ++i) {
            Segment s{full.vertices[i], full.vertices[i + 1]};
            CHECK((s.horizontal() != s.vertical()));
            CHECK(contains_segment(p, s.a, s.b));
        }

        OrthoRoute trimmed = trim_route(full, d, part, aligns);
        RouteMetrics mt = route_metrics(trimmed);
        CHECK(mt.bends <= mf.bends);
        CHECK(mt.length_doubled <= mf.length_doubled);
        for (size_t i = 0; i + 1 < trimmed.vertices.size(); ++i)
            CHECK(contains_segment(p, trimmed.vertices[i], trimmed.vertices[i + 1]));
        if (trimmed.is_point()) CHECK(contains_point(p, trimmed.vertices[0]));
    }
}

TEST_CASE("select_aligns matches the exhaustive minimum") {
    SplitMix64 rng(37);
    for (int iter = 0; iter < 150; ++iter) {
        GenSpec spec;
        spec.columns = static_cast<int>(1 + rng.below(12));
        spec.max_height = 10;
        spec.seed = rng.next();
        Partition part = partition_balanced(decompose(gen_monotone(spec)));
        std::vector<std::pair<int64_t, int64_t>> cs;
        for (const BalancedSubPolygon& s : part.subs) cs.emplace_back(s.m_low, s.M);
        CHECK(connector_total(part, select_aligns(part)) == brute_align_min(cs));
    }
}

TEST_CASE("pass-through align flips leave total vertical length unchanged") {
    SplitMix64 rng(41);
    int flips_tested = 0;
    for (int iter = 0; iter < 200 && flips_tested < 20; ++iter) {
        GenSpec spec;
        spec.columns = static_cast<int>(3 + rng.below(20));
        spec.max_height = 10;
        spec.seed = rng.next();
        Partition part = partition_balanced(decompose(gen_monotone(spec)));
        if (part.k() < 3) continue;
        std::vector<int64_t> aligns = select_aligns(part);
        const int64_t base = connector_total(part, aligns);
        for (int i = 1; i + 1 < part.k(); ++i) {
            if (relation(part, i - 1) != relation(part, i)) continue;  // not a pass-through
            std::vector<int64_t> alt = aligns;
            const BalancedSubPolygon& s = part.subs[static_cast<size_t>(i)];
            alt[static_cast<size_t>(i)] =
                aligns[static_cast<size_t>(i)] == s.M ? s.m_low : s.M;
            CHECK(connector_total(part, alt) == base);
            ++flips_tested;
        }
    }
    CHECK(flips_tested > 0);
}

TEST_CASE("trimmed and untrimmed routes cover small instances") {
    SplitMix64 rng(43);
    for (int iter = 0; iter < 10; ++iter) {
        GenSpec spec;
        spec.columns = static_cast<int>(1 + rng.below(10));
        spec.max_height = 5;
        spec.seed = rng.next();
        OrthoPolygon p = gen_monotone(spec);
        CHECK(coverage(p, route_monotone(p, false), 2).covered);
        CHECK(coverage(p, route_monotone(p, true), 2).covered);
    }
}

TEST_CASE("normalize_route") {
    OrthoRoute r = normalize_route({fx::gp(0, 0), fx::gp(1, 0), fx::gp(1, 0),
                                    fx::gp(3, 0), fx::gp(3, 2)});
    CHECK(grid_pts(r) == std::vector<Point>{{0, 0}, {3, 0}, {3, 2}});
}
