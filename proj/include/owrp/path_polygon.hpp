#pragma once

#include <cstdint>
#include <vector>

#include "owrp/route.hpp"

namespace owrp {

// Path-polygon structure after removing reflex rectangles: monotone runs of
// rects interleaved with the reflex rects separating them. Indices refer to
// the path-ordered rects of the source Decomposition.
struct PathDecomposition {
    std::vector<std::vector<int>> pieces;
    std::vector<int> reflex_rects;
    // For reflex rect i (between pieces i and i+1): the x-coordinate of the
    // vertical boundary both neighbor pieces share with it.
    std::vector<int64_t> shared_boundary_x;
};

PathDecomposition split_at_reflex(const Decomposition& d);

// Builds a monotone decomposition from a rect subset (re-sorted left to
// right) so the monotone pipeline can run on a piece.
Decomposition piece_decomposition(const Decomposition& d, const std::vector<int>& piece);

// Routes a monotone or path polygon; throws Error(UnsupportedClass) for any
// other dual shape. Monotone inputs produce exactly the monotone pipeline
// output.
OrthoRoute route_path_polygon(const OrthoPolygon& p, bool trim = true);

}  // namespace owrp
