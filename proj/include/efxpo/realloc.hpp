#pragma once

#include "efxpo/allocation.hpp"
#include "efxpo/instance.hpp"
#include "efxpo/split.hpp"

namespace efxpo {

/// Split index plus the derived quantities the reallocation needs:
/// d = floor((m2-k)/(n-t-1)), the type-2 count of the agent after the pivot;
/// p = ceil(k * v2[t]); ell = last agent (0-based) holding exactly d type-2
/// goods, in closed form n-1-r2. Requires t < n-1.
struct ReallocIndex {
    std::size_t t = 0;
    BigInt k;
    BigInt d;
    BigInt p;
    std::size_t ell = 0;
};

ReallocIndex make_realloc_index(const PreparedInstance& inst, const SplitIndex& idx);

/// Definition precondition: m1 >= ceil(d * v2[t]) * t - p (1-based t).
bool realloc_precondition_holds(const PreparedInstance& inst, const ReallocIndex& idx);

/// Lower half of the envy-flip sandwich: ceil(d*v)*t - ceil(k*v) + 1 <= m1.
bool realloc_lower_bound_holds(const PreparedInstance& inst, const ReallocIndex& idx);

/// Upper half: m1 <= ceil(d*v)*t - ceil((k-1)*v); at a flip index this makes
/// the reallocation EFX in addition to proper.
bool realloc_upper_bound_holds(const PreparedInstance& inst, const ReallocIndex& idx);

/// Keeps the split allocation's type-2 goods, then redistributes type 1:
/// ceil(d*v) to every agent before the pivot, ceil(d*v) - p to the pivot, and
/// the remaining m1 - ceil(d*v)*t + p equitably over agents 0..ell — with the
/// pivot moved to last priority unless ceil(d*v) - p > (d-k)*v holds exactly.
/// Throws InternalInvariantError when the precondition fails (the solver only
/// reaches this at an envy-direction flip, where it is guaranteed).
SegmentedAllocation build_realloc(const PreparedInstance& inst, const ReallocIndex& idx);

}  // namespace efxpo
