#pragma once

#include <cstdint>
#include <vector>

#include "owrp/partition.hpp"

namespace owrp {

// Alternating horizontal/vertical polyline; a single vertex is a valid
// degenerate (point) route.
struct OrthoRoute {
    std::vector<Point> vertices;

    bool is_point() const { return vertices.size() == 1; }
    int segments() const { return static_cast<int>(vertices.size()) - 1; }

    friend bool operator==(const OrthoRoute&, const OrthoRoute&) = default;
};

struct RouteMetrics {
    int bends = 0;
    int64_t length_doubled = 0;  // in doubled coordinates
    int vertices = 0;
};

// Align height per sub-polygon, each within its corridor.
std::vector<int64_t> select_aligns(const Partition& part);

// Concatenates the align segments with vertical connectors; 2(k-1) bends.
OrthoRoute build_route(const Partition& part, const std::vector<int64_t>& aligns);

// End-trimming; scans stop at the first extremal edge group from each side.
OrthoRoute trim_route(const OrthoRoute& route, const Decomposition& d,
                      const Partition& part, const std::vector<int64_t>& aligns);

// One-sided variant used for path-polygon pieces.
OrthoRoute trim_route_ends(const OrthoRoute& route, const Decomposition& d,
                           const Partition& part, const std::vector<int64_t>& aligns,
                           bool trim_left, bool trim_right);

RouteMetrics route_metrics(const OrthoRoute& route);

// Length in grid units (route vertices on the integer grid).
int64_t route_length_units(const OrthoRoute& route);

// Drops zero-length segments and merges collinear neighbors.
OrthoRoute normalize_route(std::vector<Point> vertices);

// Full monotone pipeline: decompose, partition, aligns, build, trim.
OrthoRoute route_monotone(const OrthoPolygon& p, bool trim = true);

}  // namespace owrp
