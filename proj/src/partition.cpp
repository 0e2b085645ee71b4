#include "owrp/partition.hpp"

#include <cassert>

namespace owrp {

Partition partition_balanced(const Decomposition& d) {
    if (d.cls != DualClass::Monotone)
        throw Error(ErrorCode::InvalidArgument, "partition requires a monotone decomposition");
    Partition part;
    const int m = d.m();
    assert(m > 0);

    int start = 0;
    int64_t min_u = d.rects[0].top;
    int64_t max_l = d.rects[0].bottom;
    auto close = [&](int last) {
        part.subs.push_back({start, last, max_l, min_u,
                             d.rects[static_cast<size_t>(start)].x_left,
                             d.rects[static_cast<size_t>(last)].x_right});
    };
    for (int i = 1; i < m; ++i) {
        const Rect& r = d.rects[static_cast<size_t>(i)];
        // Split exactly when adding this rect would break balancedness;
        // ties keep the sub-polygon growing.
        if (r.bottom > min_u || r.top < max_l) {
            close(i - 1);
            start = i;
            min_u = r.top;
            max_l = r.bottom;
        } else {
            min_u = std::min(min_u, r.top);
            max_l = std::max(max_l, r.bottom);
        }
    }
    close(m - 1);
    return part;
}

Relation relation(const Partition& part, int i) {
    assert(i >= 0 && i + 1 < part.k());
    const BalancedSubPolygon& a = part.subs[static_cast<size_t>(i)];
    const BalancedSubPolygon& b = part.subs[static_cast<size_t>(i) + 1];
    if (b.m_low > a.M) return Relation::Above;
    assert(b.M < a.m_low);
    return Relation::Below;
}

}  // namespace owrp
