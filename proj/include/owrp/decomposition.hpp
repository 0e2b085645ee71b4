#pragma once

#include <cstdint>
#include <vector>

#include "owrp/geometry.hpp"

namespace owrp {

// One rectangle of the vertical decomposition. Indices are 0-based positions
// in Decomposition::rects; edge ids refer to OrthoPolygon::edge.
struct Rect {
    int64_t x_left = 0;
    int64_t x_right = 0;
    int64_t bottom = 0;
    int64_t top = 0;
    int top_edge_id = -1;
    int bottom_edge_id = -1;
};

// Maximal run of consecutive rects whose top (or bottom) lies on one polygon
// edge.
struct EdgeGroup {
    int edge_id = -1;
    int64_t y = 0;
    int first_rect = 0;  // inclusive
    int last_rect = 0;   // inclusive
    bool extremal = false;  // local max for top groups, local min for bottom
};

enum class DualClass { Monotone, PathPolygon, Unsupported };

struct Decomposition {
    std::vector<Rect> rects;   // Monotone: left to right; PathPolygon: along the dual path
    std::vector<std::vector<int>> dual;  // adjacency lists, indices into rects
    DualClass cls = DualClass::Unsupported;

    // Monotone only (empty otherwise):
    std::vector<EdgeGroup> eu;  // top groups, left to right
    std::vector<EdgeGroup> el;  // bottom groups, left to right
    std::vector<int> rect_top_group;
    std::vector<int> rect_bottom_group;

    // PathPolygon only: rects (in path order) whose two neighbors attach on
    // the same side.
    std::vector<int> reflex_rects;

    int m() const { return static_cast<int>(rects.size()); }
    // Sum of rect areas in grid units.
    int64_t area_units() const;
};

// Full analysis; never throws on classification (cls may be Unsupported, in
// which case rects/dual are still populated).
Decomposition decompose(const OrthoPolygon& p);

// Same, but throws Error(UnsupportedClass) when the dual graph is not a path.
Decomposition vertical_decompose(const OrthoPolygon& p);

DualClass dual_path_class(const OrthoPolygon& p);

// Rebuilds eu/el groups and extremal flags from rects + edge ids; used for
// monotone decompositions assembled from rect subsets.
void build_monotone_groups(Decomposition& d);

}  // namespace owrp
