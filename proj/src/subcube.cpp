// Copyright cubetree authors. Licensed under the Apache 2.0 license. See LICENSE in the project root.
#include "cubetree/subcube.hpp"

#include <algorithm>
#include <numeric>

namespace cubetree {

bool Subcube::contains(BitView x) const {
    return distance_to_subcube(x, *this) == 0;
}

uint64_t distance_to_subcube(BitView x, const Subcube& cube) {
    if (x.d != cube.d) throw DimensionError("distance_to_subcube: length mismatch");
    return hamming_distance_masked(x, cube.center.view(), cube.restricted);
}

CoordinateStats coordinate_stats(const BinaryMatrix& x, std::span<const uint32_t> members,
                                 const CoordSet& active) {
    if (members.empty()) throw EmptyInputError("coordinate_stats: empty point set");
    if (active.universe() != x.rows())
        throw DimensionError("coordinate_stats: mask universe mismatch");

    const uint32_t d = x.rows();
    const uint32_t m = static_cast<uint32_t>(members.size());
    std::vector<uint32_t> plus(d, 0);  // count of +1 entries per coordinate
    for (uint32_t j : members) {
        BitView v = x.col(j);
        for (size_t w = 0; w < v.word_count(); ++w) {
            uint64_t bits = v.words[w];
            while (bits) {
                plus[w * kWordBits + std::countr_zero(bits)]++;
                bits &= bits - 1;
            }
        }
    }

    CoordinateStats st;
    st.mode = BitVector(d);
    st.disagree.assign(d, 0);
    st.support = m;
    st.active = active;
    for (uint32_t s : active.indices()) {
        // Tie (equal counts) breaks to +1, keeping discrepancy <= 1/2.
        bool plus_mode = 2 * plus[s] >= m;
        st.mode.set(s, plus_mode ? +1 : -1);
        st.disagree[s] = plus_mode ? m - plus[s] : plus[s];
    }
    return st;
}

namespace {

// Active coordinates ordered by (disagreement count, index) ascending.
std::vector<uint32_t> rank_by_discrepancy(const CoordinateStats& st) {
    std::vector<uint32_t> order = st.active.indices();
    std::stable_sort(order.begin(), order.end(), [&](uint32_t a, uint32_t b) {
        return st.disagree[a] < st.disagree[b];
    });
    return order;
}

Subcube cube_from_stats(const BinaryMatrix& x, const CoordinateStats& st,
                        std::span<const uint32_t> restrict_idx) {
    Subcube cube;
    cube.d = x.rows();
    cube.center = st.mode;
    cube.restricted = CoordSet::of(cube.d, restrict_idx);
    return cube;
}

}  // namespace

Subcube best_fit_subcube(const BinaryMatrix& x, std::span<const uint32_t> members,
                         const CoordSet& active, uint32_t r) {
    if (r > active.count())
        throw ParameterError("best_fit_subcube: r exceeds number of active coordinates");
    CoordinateStats st = coordinate_stats(x, members, active);
    std::vector<uint32_t> order = rank_by_discrepancy(st);
    return cube_from_stats(x, st, std::span(order).first(r));
}

Subcube adaptive_restriction(const BinaryMatrix& x, std::span<const uint32_t> members,
                             const CoordSet& active, double keep_fraction) {
    if (!(keep_fraction >= 0.0 && keep_fraction <= 1.0))
        throw ParameterError("adaptive_restriction: keep_fraction must be in [0,1]");
    CoordinateStats st = coordinate_stats(x, members, active);
    std::vector<uint32_t> order = rank_by_discrepancy(st);

    // Walk coordinates by decreasing discrepancy, freeing them until the
    // kept mass reaches keep_fraction of the total; everything after that
    // point is restricted. All mass bookkeeping is in integer counts.
    uint64_t total = 0;
    for (uint32_t s : order) total += st.disagree[s];
    const double target = keep_fraction * static_cast<double>(total);

    // order is ascending, so freeing walks back from the tail; on ties the
    // lower index stays restricted.
    uint64_t kept = 0;
    size_t i = order.size();
    while (i > 0 && static_cast<double>(kept) < target) {
        --i;
        kept += st.disagree[order[i]];
    }
    return cube_from_stats(x, st, std::span(order).first(i));
}

uint64_t fit_error(const BinaryMatrix& x, std::span<const uint32_t> members, const Subcube& cube) {
    uint64_t total = 0;
    for (uint32_t j : members) total += distance_to_subcube(x.col(j), cube);
    return total;
}

std::vector<uint32_t> all_points(const BinaryMatrix& x) {
    std::vector<uint32_t> idx(x.cols());
    std::iota(idx.begin(), idx.end(), 0u);
    return idx;
}

}  // namespace cubetree
