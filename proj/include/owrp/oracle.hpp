#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "owrp/route.hpp"

namespace owrp {

struct CoverageReport {
    bool covered = false;
    int resolution = 0;
    int64_t samples_total = 0;
    std::vector<std::pair<double, double>> uncovered;  // grid units
};

// Straight-line visibility inside the closed polygon; grazing allowed.
// Throws Error(PointOutside) if either point is outside the closed region.
bool visible(const OrthoPolygon& p, Point a, Point b);

// Brute-force coverage check: samples an r x r sub-grid of every unit cell
// plus inset points near polygon vertices and decomposition-rect corners,
// and requires each sample to see a finite witness set on the route (route
// vertices and the sample's axis-parallel projections onto each segment).
// Throws Error(RouteOutside) if the route leaves the closed region.
CoverageReport coverage(const OrthoPolygon& p, const OrthoRoute& route, int resolution);

// Exhaustive minimum over all 2^k corridor-endpoint assignments of the total
// vertical connector length. Throws Error(TooLarge) for k > 20.
int64_t brute_align_min(const std::vector<std::pair<int64_t, int64_t>>& corridors);

// Kernel of the polygon as the intersection of all inner edge half-planes;
// possibly degenerate (zero width/height), nullopt when empty. Edge ids of
// the returned Rect are unset.
std::optional<Rect> kernel_rect(const OrthoPolygon& p);

struct MinBendResult {
    int bends = 0;
    OrthoRoute witness;
};

// Exhaustive search for the smallest bend count (<= max_bends <= 2) over
// routes with coordinates on the half-grid spanned by the edge coordinates.
// Approximate-complete diagnostic. Throws Error(BudgetExceeded) when more
// than `budget` candidate routes would be examined.
std::optional<MinBendResult> brute_min_bend(const OrthoPolygon& p, int max_bends,
                                            int64_t budget);

}  // namespace owrp
