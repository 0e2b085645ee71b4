#include "owrp/generator.hpp"

#include <algorithm>
#include <cassert>
#include <map>

namespace owrp {

namespace {

// Value in [lo, hi] excluding `not_this`; requires at least one choice.
int64_t pick_excluding(SplitMix64& rng, int64_t lo, int64_t hi, int64_t not_this) {
    assert(hi - lo >= 1);
    int64_t v = lo + rng.below(hi - lo);
    if (v >= not_this) ++v;
    return v;
}

struct Band {
    int64_t lo, hi;  // inclusive y-range for rect corners
};

// Column heights for one monotone run: adjacent columns share exactly one of
// top/bottom and change the other.
void roll_heights(SplitMix64& rng, const Band& band, int64_t& b, int64_t& t) {
    bool change_bottom = (rng.next() & 1) != 0;
    if (change_bottom && t - band.lo < 2) change_bottom = false;   // bottom is pinned
    if (!change_bottom && band.hi - b < 2) change_bottom = true;   // top is pinned
    if (change_bottom)
        b = pick_excluding(rng, band.lo, t - 1, b);
    else
        t = pick_excluding(rng, b + 1, band.hi, t);
}

}  // namespace

OrthoPolygon gen_monotone(const GenSpec& spec) {
    const int cols = spec.columns;
    const int64_t h = spec.max_height;
    if (cols < 1 || h < 1 || (cols >= 2 && h < 2))
        throw Error(ErrorCode::InvalidArgument,
                    "gen_monotone needs columns >= 1 and max_height >= 2 for columns >= 2");
    SplitMix64 rng(spec.seed);

    std::vector<int64_t> xb(static_cast<size_t>(cols) + 1, 0);
    for (int i = 1; i <= cols; ++i)
        xb[static_cast<size_t>(i)] = xb[static_cast<size_t>(i) - 1] +
                                     (spec.unit_widths ? 1 : 1 + rng.below(3));

    std::vector<int64_t> bs(static_cast<size_t>(cols)), ts(static_cast<size_t>(cols));
    const Band band{0, h};
    int64_t b = rng.below(h);
    int64_t t = b + 1 + rng.below(h - b);
    bs[0] = b;
    ts[0] = t;
    for (int i = 1; i < cols; ++i) {
        roll_heights(rng, band, b, t);
        bs[static_cast<size_t>(i)] = b;
        ts[static_cast<size_t>(i)] = t;
    }

    std::vector<Point> v;
    v.reserve(2 * static_cast<size_t>(cols) + 2);
    auto push = [&v](int64_t x, int64_t y) { v.push_back({x * kCoordScale, y * kCoordScale}); };
    push(xb[0], bs[0]);
    for (int i = 1; i < cols; ++i) {
        if (bs[static_cast<size_t>(i)] != bs[static_cast<size_t>(i) - 1]) {
            push(xb[static_cast<size_t>(i)], bs[static_cast<size_t>(i) - 1]);
            push(xb[static_cast<size_t>(i)], bs[static_cast<size_t>(i)]);
        }
    }
    push(xb[static_cast<size_t>(cols)], bs[static_cast<size_t>(cols) - 1]);
    push(xb[static_cast<size_t>(cols)], ts[static_cast<size_t>(cols) - 1]);
    for (int i = cols - 1; i >= 1; --i) {
        if (ts[static_cast<size_t>(i)] != ts[static_cast<size_t>(i) - 1]) {
            push(xb[static_cast<size_t>(i)], ts[static_cast<size_t>(i)]);
            push(xb[static_cast<size_t>(i)], ts[static_cast<size_t>(i) - 1]);
        }
    }
    push(xb[0], ts[0]);
    return OrthoPolygon::from_doubled_unchecked(std::move(v));
}

namespace {

struct GenRect {
    int64_t xl, xr, b, t;
};

// Traces the single boundary loop of a union of unit cells (grid units) and
// validates it into a polygon.
OrthoPolygon polygon_from_cells(const std::vector<GenRect>& rects) {
    std::map<std::pair<int64_t, int64_t>, bool> cells;
    for (const GenRect& r : rects)
        for (int64_t x = r.xl; x < r.xr; ++x)
            for (int64_t y = r.b; y < r.t; ++y) cells[{x, y}] = true;

    auto filled = [&cells](int64_t x, int64_t y) { return cells.count({x, y}) > 0; };

    // Boundary unit segments oriented with the interior on the left.
    std::map<std::pair<int64_t, int64_t>, std::pair<int64_t, int64_t>> next_of;
    auto add = [&next_of](int64_t ax, int64_t ay, int64_t bx, int64_t by) {
        auto inserted = next_of.emplace(std::make_pair(ax, ay), std::make_pair(bx, by));
        assert(inserted.second && "pinched boundary");
        (void)inserted;
    };
    for (const auto& [cell, unused] : cells) {
        (void)unused;
        const auto [x, y] = cell;
        if (!filled(x, y - 1)) add(x, y, x + 1, y);
        if (!filled(x, y + 1)) add(x + 1, y + 1, x, y + 1);
        if (!filled(x - 1, y)) add(x, y + 1, x, y);
        if (!filled(x + 1, y)) add(x + 1, y, x + 1, y + 1);
    }

    std::vector<std::pair<int64_t, int64_t>> loop;
    auto start = next_of.begin()->first;
    auto cur = start;
    do {
        loop.push_back(cur);
        auto it = next_of.find(cur);
        assert(it != next_of.end());
        cur = it->second;
        next_of.erase(it);
    } while (cur != start);
    if (!next_of.empty())
        throw Error(ErrorCode::GenerationFailed, "cell union traced to multiple loops");
    return OrthoPolygon::validate(loop);
}

}  // namespace

OrthoPolygon gen_path(const GenSpec& spec) {
    const int n = spec.rects;
    const int64_t h = spec.max_height;
    if (n < 1 || h < 1 || (n >= 2 && h < 2))
        throw Error(ErrorCode::InvalidArgument,
                    "gen_path needs rects >= 1 and max_height >= 2 for rects >= 2");
    SplitMix64 rng(spec.seed);

    std::vector<GenRect> rects;
    rects.reserve(static_cast<size_t>(n));

    int remaining = n;
    int band_index = 0;
    int64_t base = 0;
    int64_t cur_x = 0;
    int dir = 1;
    int64_t prev_b = 0;  // bottom of the rect feeding the pending fold
    int64_t fold_x = 0;

    while (remaining > 0) {
        int len = static_cast<int>(1 + rng.below(4));
        if (band_index == 0 && n >= 3) len = std::min(len, n - 2);
        if (remaining - len < 2) len = remaining;
        len = std::min(len, remaining);

        const Band band{base, base + h};
        int64_t b = base + rng.below(h);
        int64_t t = b + 1 + rng.below(base + h - b);
        for (int i = 0; i < len; ++i) {
            if (i > 0) roll_heights(rng, band, b, t);
            const int64_t xl = dir > 0 ? cur_x : cur_x - 1;
            rects.push_back({xl, xl + 1, b, t});
            if (i == 0 && band_index > 0) {
                // Close the pending fold: it spans from the previous row's
                // end rect up to this row's first rect.
                rects.push_back({fold_x, fold_x + 1, prev_b, t});
            }
            cur_x += dir;
        }
        remaining -= len;
        if (remaining > 0) {
            --remaining;  // the fold rect itself
            fold_x = dir > 0 ? cur_x : cur_x - 1;
            prev_b = b;
            dir = -dir;
            base += h + 1;
            ++band_index;
            // The next row starts on the fold's far side, heading back.
        }
    }
    return polygon_from_cells(rects);
}

OrthoPolygon generate(const GenSpec& spec) {
    return spec.mode == GenMode::Monotone ? gen_monotone(spec) : gen_path(spec);
}

}  // namespace owrp
