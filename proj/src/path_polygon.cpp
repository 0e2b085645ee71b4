#include "owrp/path_polygon.hpp"

#include <algorithm>
#include <cassert>

namespace owrp {

PathDecomposition split_at_reflex(const Decomposition& d) {
    if (d.cls == DualClass::Unsupported)
        throw Error(ErrorCode::UnsupportedClass, "dual graph is not a path");
    PathDecomposition pd;
    std::vector<bool> is_reflex(static_cast<size_t>(d.m()), false);
    for (int r : d.reflex_rects) is_reflex[static_cast<size_t>(r)] = true;

    std::vector<int> run;
    for (int i = 0; i < d.m(); ++i) {
        if (is_reflex[static_cast<size_t>(i)]) {
            assert(!run.empty());  // a path cannot start with a reflex rect
            pd.pieces.push_back(run);
            run.clear();
            pd.reflex_rects.push_back(i);
            const Rect& r = d.rects[static_cast<size_t>(i)];
            const Rect& prev = d.rects[static_cast<size_t>(i) - 1];
            pd.shared_boundary_x.push_back(
                prev.x_right == r.x_left ? r.x_left : r.x_right);
        } else {
            run.push_back(i);
        }
    }
    assert(!run.empty());
    pd.pieces.push_back(run);
    return pd;
}

Decomposition piece_decomposition(const Decomposition& d, const std::vector<int>& piece) {
    Decomposition out;
    out.cls = DualClass::Monotone;
    for (int i : piece) out.rects.push_back(d.rects[static_cast<size_t>(i)]);
    std::sort(out.rects.begin(), out.rects.end(),
              [](const Rect& a, const Rect& b) { return a.x_left < b.x_left; });
    const int m = out.m();
    out.dual.assign(static_cast<size_t>(m), {});
    for (int i = 0; i + 1 < m; ++i) {
        assert(out.rects[static_cast<size_t>(i)].x_right ==
               out.rects[static_cast<size_t>(i) + 1].x_left);
        out.dual[static_cast<size_t>(i)].push_back(i + 1);
        out.dual[static_cast<size_t>(i + 1)].push_back(i);
    }
    build_monotone_groups(out);
    return out;
}

namespace {

OrthoRoute monotone_pipeline(const Decomposition& d, bool trim,
                             bool trim_left, bool trim_right) {
    Partition part = partition_balanced(d);
    std::vector<int64_t> aligns = select_aligns(part);
    OrthoRoute route = build_route(part, aligns);
    if (trim) route = trim_route_ends(route, d, part, aligns, trim_left, trim_right);
    return route;
}

void reverse_route(OrthoRoute& r) {
    std::reverse(r.vertices.begin(), r.vertices.end());
}

}  // namespace

OrthoRoute route_path_polygon(const OrthoPolygon& p, bool trim) {
    Decomposition d = decompose(p);
    if (d.cls == DualClass::Unsupported)
        throw Error(ErrorCode::UnsupportedClass, "dual graph is not a path");
    if (d.cls == DualClass::Monotone) return monotone_pipeline(d, trim, true, true);

    const PathDecomposition pd = split_at_reflex(d);
    const int q = static_cast<int>(pd.pieces.size());

    std::vector<Point> verts;
    for (int j = 0; j < q; ++j) {
        Decomposition pdc = piece_decomposition(d, pd.pieces[static_cast<size_t>(j)]);
        const int64_t xl = pdc.rects.front().x_left;
        const int64_t xr = pdc.rects.back().x_right;

        // Connector boundaries this piece participates in; each sits at one
        // of the piece's two x-extremes.
        const bool has_entry = j > 0;
        const bool has_exit = j < q - 1;
        const int64_t entry_x = has_entry ? pd.shared_boundary_x[static_cast<size_t>(j) - 1] : 0;
        const int64_t exit_x = has_exit ? pd.shared_boundary_x[static_cast<size_t>(j)] : 0;
        bool exit_on_left = has_exit && exit_x == xl;
        bool entry_on_left = has_entry && entry_x == xl;
        assert(!has_exit || exit_x == xl || exit_x == xr);
        assert(!has_entry || entry_x == xl || entry_x == xr);

        // Only the free ends of the overall route are trimmed; piece
        // endpoints adjacent to connectors stay put.
        bool trim_left = false, trim_right = false;
        if (trim && !has_entry) (exit_on_left ? trim_right : trim_left) = true;
        if (trim && !has_exit) (entry_on_left ? trim_right : trim_left) = true;

        OrthoRoute route = monotone_pipeline(pdc, trim, trim_left, trim_right);

        // Orient the piece so traversal enters at entry_x and leaves at
        // exit_x (left-to-right construction starts at the low-x end).
        const bool reverse = has_entry ? !entry_on_left : exit_on_left;
        if (reverse) reverse_route(route);
        if (has_entry && !route.is_point()) assert(route.vertices.front().x == entry_x);
        if (has_exit && !route.is_point()) assert(route.vertices.back().x == exit_x);

        // The vertical connector arises from the jump between the previous
        // endpoint and this piece's first vertex at the shared x.
        for (const Point& v : route.vertices) verts.push_back(v);
    }
    return normalize_route(std::move(verts));
}

}  // namespace owrp
