#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "owrp/geometry.hpp"

namespace fx {

using Raw = std::vector<std::pair<int64_t, int64_t>>;

inline owrp::OrthoPolygon make(const Raw& raw) { return owrp::OrthoPolygon::validate(raw); }

// Same polygon with every grid coordinate multiplied by `s` (for tests that
// need sub-half fractions expressed on a finer integer grid).
inline owrp::OrthoPolygon make_scaled(const Raw& raw, int64_t s) {
    Raw scaled;
    for (const auto& [x, y] : raw) scaled.emplace_back(x * s, y * s);
    return make(scaled);
}

inline const Raw kRect{{0, 0}, {4, 0}, {4, 2}, {0, 2}};
inline const Raw kA{{0, 0}, {3, 0}, {3, 3}, {2, 3}, {2, 2}, {1, 2}, {1, 1}, {0, 1}};
inline const Raw kB{{0, 0}, {2, 0}, {2, 3}, {3, 3}, {3, 5}, {1, 5}, {1, 2}, {0, 2}};
inline const Raw kSideU{{0, 0}, {3, 0}, {3, 1}, {1, 1}, {1, 2}, {3, 2}, {3, 3}, {0, 3}};
inline const Raw kEComb{{0, 0}, {3, 0}, {3, 1}, {1, 1}, {1, 2}, {3, 2}, {3, 3},
                        {1, 3}, {1, 4}, {3, 4}, {3, 5}, {0, 5}};
// Five-rect path polygon: two 2-rect monotone runs joined through one tall
// reflex rect on the right.
inline const Raw kZigzag{{0, 0}, {2, 0}, {2, 1}, {3, 1}, {3, 4}, {1, 4}, {1, 5},
                         {0, 5}, {0, 3}, {2, 3}, {2, 2}, {1, 2}, {1, 1}, {0, 1}};

inline owrp::OrthoPolygon poly_rect() { return make(kRect); }
inline owrp::OrthoPolygon poly_a() { return make(kA); }
inline owrp::OrthoPolygon poly_b() { return make(kB); }
inline owrp::OrthoPolygon sideu() { return make(kSideU); }
inline owrp::OrthoPolygon ecomb() { return make(kEComb); }
inline owrp::OrthoPolygon zigzag() { return make(kZigzag); }

// Grid-unit point in internal (doubled) coordinates.
inline owrp::Point gp(int64_t x, int64_t y) {
    return {x * owrp::kCoordScale, y * owrp::kCoordScale};
}

// Vertical mirror (y -> -y), revalidated.
inline owrp::OrthoPolygon mirror_y(const owrp::OrthoPolygon& p) {
    Raw raw;
    for (const owrp::Point& v : p.vertices())
        raw.emplace_back(v.x / owrp::kCoordScale, -v.y / owrp::kCoordScale);
    return make(raw);
}

inline owrp::OrthoPolygon translate(const owrp::OrthoPolygon& p, int64_t dx, int64_t dy) {
    Raw raw;
    for (const owrp::Point& v : p.vertices())
        raw.emplace_back(v.x / owrp::kCoordScale + dx, v.y / owrp::kCoordScale + dy);
    return make(raw);
}

}  // namespace fx

// Asserts that `expr` throws owrp::Error with the given code.
#define CHECK_ERR(expr, expected_code)                      \
    do {                                                    \
        bool caught_ = false;                               \
        try {                                               \
            (void)(expr);                                   \
        } catch (const owrp::Error& e_) {                   \
            caught_ = true;                                 \
            CHECK(e_.code() == (expected_code));            \
        }                                                   \
        CHECK_MESSAGE(caught_, "expected owrp::Error");     \
    } while (0)
