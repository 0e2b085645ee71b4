#pragma once

#include <cstdint>

#include "owrp/geometry.hpp"

namespace owrp {

// Deterministic 64-bit mixing PRNG (splitmix64); same seed, same sequence,
// on every platform.
class SplitMix64 {
public:
    explicit SplitMix64(uint64_t seed) : state_(seed) {}

    uint64_t next() {
        uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform-enough value in [0, n); n must be positive.
    int64_t below(int64_t n) { return static_cast<int64_t>(next() % static_cast<uint64_t>(n)); }

private:
    uint64_t state_;
};

enum class GenMode { Monotone, Path };

struct GenSpec {
    GenMode mode = GenMode::Monotone;
    int columns = 1;        // monotone: number of decomposition rects
    int rects = 1;          // path: number of chain rects
    int64_t max_height = 1; // heights drawn from [1, max_height]
    uint64_t seed = 0;
    bool unit_widths = true;  // monotone slabs of width 1 (widths 1..3 otherwise)
};

// x-monotone polygon with exactly `columns` slabs; adjacent slabs share
// either their top or their bottom y. Requires max_height >= 2 when
// columns >= 2.
OrthoPolygon gen_monotone(const GenSpec& spec);

// Orthogonal polygon whose decomposition dual is a path, built as a
// serpentine chain of rows joined by tall fold (reflex) rects. rects >= 3
// guarantees at least one reflex rect. Requires max_height >= 2 when
// rects >= 2.
OrthoPolygon gen_path(const GenSpec& spec);

OrthoPolygon generate(const GenSpec& spec);

}  // namespace owrp
