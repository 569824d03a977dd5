// Copyright cubetree authors. Licensed under the Apache 2.0 license. See LICENSE in the project root.
#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "cubetree/bitmatrix.hpp"

namespace cubetree {

/// Axis-aligned subcube of {-1,+1}^d: the points agreeing with `center` on
/// every coordinate in `restricted`. Center bits on free coordinates are
/// kept (set to the fitted mode) but do not affect membership.
struct Subcube {
    uint32_t d = 0;
    BitVector center;
    CoordSet restricted;

    uint32_t dim() const { return d - restricted.count(); }
    bool contains(BitView x) const;
};

/// Number of restricted coordinates where x disagrees with the center.
/// Zero iff x is a member of the cube.
uint64_t distance_to_subcube(BitView x, const Subcube& cube);

/// Per-coordinate majority summary of a point set. Counts are exact; the
/// discrepancy fraction is derived. Coordinates outside `active` are
/// excluded and must not be read.
struct CoordinateStats {
    BitVector mode;                  // majority value per active coordinate (tie -> +1)
    std::vector<uint32_t> disagree;  // points differing from the mode, per coordinate
    uint32_t support = 0;
    CoordSet active;

    bool excluded(uint32_t s) const { return !active.contains(s); }
    double discrepancy(uint32_t s) const {
        return static_cast<double>(disagree[s]) / static_cast<double>(support);
    }
};

CoordinateStats coordinate_stats(const BinaryMatrix& x, std::span<const uint32_t> members,
                                 const CoordSet& active);

/// Best-fit subcube restricting exactly r active coordinates: the r with the
/// smallest discrepancy (ties to the lower index), centered on the mode.
/// Minimizes total mismatch count over all such subcubes.
Subcube best_fit_subcube(const BinaryMatrix& x, std::span<const uint32_t> members,
                         const CoordSet& active, uint32_t r);

/// Chooses the restriction size from the data instead of a fixed r: keeps
/// free the smallest prefix of coordinates (by decreasing discrepancy)
/// holding at least keep_fraction of the total discrepancy mass, restricts
/// the rest. keep_fraction 0 restricts everything active; 1 restricts only
/// zero-discrepancy coordinates.
Subcube adaptive_restriction(const BinaryMatrix& x, std::span<const uint32_t> members,
                             const CoordSet& active, double keep_fraction);

/// Sum of distance_to_subcube over the members.
uint64_t fit_error(const BinaryMatrix& x, std::span<const uint32_t> members, const Subcube& cube);

/// Convenience: indices 0..n-1 for whole-matrix calls.
std::vector<uint32_t> all_points(const BinaryMatrix& x);

}  // namespace cubetree
