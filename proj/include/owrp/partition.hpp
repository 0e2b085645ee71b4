#pragma once

#include <cstdint>
#include <vector>

#include "owrp/decomposition.hpp"

namespace owrp {

// Contiguous rect range forming a balanced sub-polygon, with its corridor
// [m_low, M] (max of bottoms, min of tops).
struct BalancedSubPolygon {
    int first_rect = 0;  // inclusive
    int last_rect = 0;   // inclusive
    int64_t m_low = 0;
    int64_t M = 0;
    int64_t x_left = 0;
    int64_t x_right = 0;
};

struct Partition {
    std::vector<BalancedSubPolygon> subs;
    int k() const { return static_cast<int>(subs.size()); }
};

enum class Relation { Above, Below };

// Greedy left-to-right maximal balanced partition of a monotone
// decomposition.
Partition partition_balanced(const Decomposition& d);

// Relation between sub-polygon i and i+1 (0-based, 0 <= i < k-1): Above iff
// the next corridor lies strictly above this one.
Relation relation(const Partition& part, int i);

}  // namespace owrp
