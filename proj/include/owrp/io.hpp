#pragma once

#include <optional>
#include <string>

#include "owrp/decomposition.hpp"
#include "owrp/oracle.hpp"
#include "owrp/route.hpp"

namespace owrp {

// {"vertices": [[x, y], ...]} with integer grid coordinates.
OrthoPolygon parse_polygon(const std::string& bytes);
std::string emit_polygon(const OrthoPolygon& p);

// {"vertices": ..., "bends": int, "length": int, "trimmed": bool, "k": int}.
// Route coordinates may be halves (x.5) and are stored doubled internally.
struct RouteFile {
    OrthoRoute route;
    int bends = 0;
    int64_t length = 0;  // grid units
    bool trimmed = false;
    int k = 0;
};
RouteFile parse_route(const std::string& bytes);
std::string emit_route(const RouteFile& rf);

std::string emit_coverage(const CoverageReport& report);

// Deterministic figure: outline, dashed decomposition rects, bold route with
// bend markers. Scale/padding rules are documented in the header comment of
// the output itself.
std::string render_svg(const OrthoPolygon& p, const Decomposition* d,
                       const OrthoRoute* route);

}  // namespace owrp
