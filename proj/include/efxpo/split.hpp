#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "efxpo/allocation.hpp"
#include "efxpo/instance.hpp"

namespace efxpo {

/// Identifies one split allocation: agent t (0-based pivot) holds k type-2
/// goods and is the only agent who may hold both good types. Valid indices:
///   v2[t] >= 1 and t < n-1 and 1 <= k and k*(n-t) <= m2,   or
///   t == n-1 and k == m2.
struct SplitIndex {
    std::size_t t = 0;
    BigInt k;
    bool operator==(const SplitIndex&) const = default;
};

/// t ascending, k descending within t.
bool split_precedes(const SplitIndex& a, const SplitIndex& b);

bool t_set_contains(const PreparedInstance& inst, std::size_t t, const BigInt& k);

/// Smallest valid index under the ordering: the first pivot t with v2[t] >= 1
/// and m2 >= n - t, paired with the largest k there; falls back to the
/// always-valid (n-1, m2).
SplitIndex minimum_split_index(const PreparedInstance& inst);

/// Largest valid index: (n-1, m2).
SplitIndex maximum_split_index(const PreparedInstance& inst);

/// Derived quantities of a split allocation. q2/r2 divide m2-k over the
/// agents after the pivot and are absent when t = n-1. p = ceil(k * v2[t]).
/// Case (b) applies when m1 >= p*t and lets the pivot hold type-1 goods too.
struct SplitDerived {
    BigInt p;
    bool has_tail = false;  // t < n-1
    BigInt q2;
    BigInt r2;
    bool case_b = false;
    BigInt q1;
    BigInt r1;
};
SplitDerived derive_split(const PreparedInstance& inst, const SplitIndex& idx);

/// One equitable share: positions [0, s-r) of the sequence receive q/s goods,
/// the last r = q mod s positions receive q/s + 1.
struct PeaPiece {
    std::size_t lo;  // agent range, inclusive
    std::size_t hi;
    BigInt amount;
};

/// Equitable division of q goods over the agent sequence formed by chaining
/// `ranges` (each inclusive, possibly out of index order). Later positions in
/// the chained sequence receive the larger share. Empty total is an error.
std::vector<PeaPiece> pea_over_ranges(const BigInt& q,
                                      const std::vector<std::pair<std::size_t, std::size_t>>& ranges);

/// Sums additive per-coordinate pieces into a run-length allocation over
/// agents [0, n). Adjacent equal bundles are merged.
SegmentedAllocation assemble_pieces(std::size_t n, const std::vector<PeaPiece>& x1_pieces,
                                    const std::vector<PeaPiece>& x2_pieces);

/// The split allocation in closed numerical form. Also rebuilds it as the
/// equitable-share sum and verifies the two agree, as a permanent self-check.
SegmentedAllocation build_split(const PreparedInstance& inst, const SplitIndex& idx);

/// The same allocation built only from the four equitable shares:
/// k type-2 goods to t; m2-k to t+1..n-1; min(m1, p*t) type-1 goods to
/// 0..t-1; the rest to 0..t.
SegmentedAllocation build_split_pea_sum(const PreparedInstance& inst, const SplitIndex& idx);

/// build_split + classify_segmented.
EnvyVerdict classify_split(const PreparedInstance& inst, const SplitIndex& idx);

}  // namespace efxpo
