#include "owrp/io.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "json.hpp"

namespace owrp {

using nlohmann::json;

namespace {

json parse_json(const std::string& bytes) {
    json j = json::parse(bytes, nullptr, false);
    if (j.is_discarded()) throw Error(ErrorCode::MalformedJson, "input is not valid JSON");
    return j;
}

// Reads one coordinate as a doubled integer; `allow_half` admits x.5 values.
int64_t read_coord(const json& v, bool allow_half, int64_t index) {
    if (v.is_number_integer())
        return v.get<int64_t>() * kCoordScale;
    if (allow_half && v.is_number_float()) {
        const double d = v.get<double>() * kCoordScale;
        const double r = std::round(d);
        if (std::abs(d - r) < 1e-9) return static_cast<int64_t>(r);
    }
    throw Error(ErrorCode::MalformedJson,
                allow_half ? "coordinate must be an integer or half-integer"
                           : "coordinate must be an integer",
                index);
}

std::vector<Point> read_vertices(const json& j, bool allow_half) {
    if (!j.is_object() || !j.contains("vertices") || !j["vertices"].is_array())
        throw Error(ErrorCode::MalformedJson, "expected an object with a \"vertices\" array");
    std::vector<Point> out;
    int64_t index = 0;
    for (const json& v : j["vertices"]) {
        if (!v.is_array() || v.size() != 2)
            throw Error(ErrorCode::MalformedJson, "vertex must be a [x, y] pair", index);
        out.push_back({read_coord(v[0], allow_half, index),
                       read_coord(v[1], allow_half, index)});
        ++index;
    }
    return out;
}

// Doubled coordinate as a JSON number (integer, or x.5 for odd values).
json coord_json(int64_t doubled) {
    if (doubled % kCoordScale == 0) return json(doubled / kCoordScale);
    return json(static_cast<double>(doubled) / kCoordScale);
}

}  // namespace

OrthoPolygon parse_polygon(const std::string& bytes) {
    const std::vector<Point> verts = read_vertices(parse_json(bytes), false);
    std::vector<std::pair<int64_t, int64_t>> raw;
    raw.reserve(verts.size());
    for (const Point& v : verts) raw.emplace_back(v.x / kCoordScale, v.y / kCoordScale);
    return OrthoPolygon::validate(raw);
}

std::string emit_polygon(const OrthoPolygon& p) {
    json verts = json::array();
    for (const Point& v : p.vertices())
        verts.push_back({v.x / kCoordScale, v.y / kCoordScale});
    return json{{"vertices", std::move(verts)}}.dump(2) + "\n";
}

RouteFile parse_route(const std::string& bytes) {
    const json j = parse_json(bytes);
    RouteFile rf;
    rf.route.vertices = read_vertices(j, true);
    if (rf.route.vertices.empty())
        throw Error(ErrorCode::MalformedJson, "route needs at least one vertex");
    auto get_int = [&j](const char* key) -> int64_t {
        if (!j.contains(key) || !j[key].is_number_integer())
            throw Error(ErrorCode::MalformedJson, std::string("missing integer field \"") + key + "\"");
        return j[key].get<int64_t>();
    };
    rf.bends = static_cast<int>(get_int("bends"));
    rf.length = get_int("length");
    rf.k = static_cast<int>(get_int("k"));
    if (!j.contains("trimmed") || !j["trimmed"].is_boolean())
        throw Error(ErrorCode::MalformedJson, "missing boolean field \"trimmed\"");
    rf.trimmed = j["trimmed"].get<bool>();
    return rf;
}

std::string emit_route(const RouteFile& rf) {
    json verts = json::array();
    for (const Point& v : rf.route.vertices)
        verts.push_back({coord_json(v.x), coord_json(v.y)});
    json j{{"vertices", std::move(verts)},
           {"bends", rf.bends},
           {"length", rf.length},
           {"trimmed", rf.trimmed},
           {"k", rf.k}};
    return j.dump(2) + "\n";
}

std::string emit_coverage(const CoverageReport& report) {
    json uncovered = json::array();
    for (const auto& [x, y] : report.uncovered) uncovered.push_back({x, y});
    json j{{"covered", report.covered},
           {"resolution", report.resolution},
           {"samples_total", report.samples_total},
           {"uncovered", std::move(uncovered)}};
    return j.dump(2) + "\n";
}

namespace {

// 16 px per doubled unit (32 px per grid unit), 16 px padding, y flipped.
constexpr int64_t kPx = 16;
constexpr int64_t kPad = 16;

struct SvgFrame {
    int64_t xmin, ymax, width, height;
    int64_t x(int64_t doubled) const { return (doubled - xmin) * kPx + kPad; }
    int64_t y(int64_t doubled) const { return (ymax - doubled) * kPx + kPad; }
};

}  // namespace

std::string render_svg(const OrthoPolygon& p, const Decomposition* d,
                       const OrthoRoute* route) {
    int64_t xmin = p.vertices()[0].x, xmax = xmin;
    int64_t ymin = p.vertices()[0].y, ymax = ymin;
    for (const Point& v : p.vertices()) {
        xmin = std::min(xmin, v.x); xmax = std::max(xmax, v.x);
        ymin = std::min(ymin, v.y); ymax = std::max(ymax, v.y);
    }
    const SvgFrame f{xmin, ymax, (xmax - xmin) * kPx + 2 * kPad,
                     (ymax - ymin) * kPx + 2 * kPad};

    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << f.width
        << "\" height=\"" << f.height << "\" viewBox=\"0 0 " << f.width << ' '
        << f.height << "\">\n";
    out << "<!-- scale: 16 px per half-unit (32 px per grid unit); padding: 16 px;"
           " y axis flipped for screen coordinates -->\n";

    out << "<path d=\"";
    for (size_t i = 0; i < p.vertices().size(); ++i) {
        const Point& v = p.vertices()[i];
        out << (i == 0 ? 'M' : 'L') << f.x(v.x) << ' ' << f.y(v.y) << ' ';
    }
    out << "Z\" fill=\"#f4f4f4\" stroke=\"#222222\" stroke-width=\"2\"/>\n";

    if (d != nullptr) {
        for (const Rect& r : d->rects) {
            out << "<rect x=\"" << f.x(r.x_left) << "\" y=\"" << f.y(r.top)
                << "\" width=\"" << (r.x_right - r.x_left) * kPx << "\" height=\""
                << (r.top - r.bottom) * kPx
                << "\" fill=\"none\" stroke=\"#888888\" stroke-width=\"1\""
                   " stroke-dasharray=\"4 3\"/>\n";
        }
    }

    if (route != nullptr) {
        if (route->is_point()) {
            const Point& v = route->vertices[0];
            out << "<circle cx=\"" << f.x(v.x) << "\" cy=\"" << f.y(v.y)
                << "\" r=\"5\" fill=\"#c02020\"/>\n";
        } else {
            out << "<polyline points=\"";
            for (const Point& v : route->vertices)
                out << f.x(v.x) << ',' << f.y(v.y) << ' ';
            out << "\" fill=\"none\" stroke=\"#c02020\" stroke-width=\"4\"/>\n";
            for (size_t i = 1; i + 1 < route->vertices.size(); ++i) {
                const Point& v = route->vertices[i];
                out << "<circle cx=\"" << f.x(v.x) << "\" cy=\"" << f.y(v.y)
                    << "\" r=\"4\" fill=\"#c02020\"/>\n";
            }
        }
    }

    out << "</svg>\n";
    return out.str();
}

}  // namespace owrp
