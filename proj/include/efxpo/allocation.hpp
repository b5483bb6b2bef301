#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "efxpo/instance.hpp"
#include "efxpo/rational.hpp"

namespace efxpo {

/// Run-length form of an allocation: consecutive agent ranges holding one
/// bundle each. Ranges are inclusive, 0-based, partition [0, n), and adjacent
/// segments carry distinct bundles. The split/reallocation constructors
/// produce at most 6 segments, which is what makes envy classification O(1).
struct Segment {
    std::size_t lo;
    std::size_t hi;
    Bundle bundle;
};

struct SegmentedAllocation {
    std::size_t n = 0;
    std::vector<Segment> segments;
};

enum class EnvyKind { Efx, LeftEnvious, RightEnvious };

/// (envier, envied) agent pair, prepared order, 0-based.
using EnvyWitness = std::pair<std::size_t, std::size_t>;

/// LeftEnvious carries a witness with envier > envied, RightEnvious one with
/// envier < envied; both are the lexicographically smallest found.
struct EnvyVerdict {
    EnvyKind kind = EnvyKind::Efx;
    std::optional<EnvyWitness> witness;
};

/// Exact utility x1 * 1 + x2 * v2[agent] of a bundle in agent's eyes.
Rational utility(const PreparedInstance& inst, std::size_t agent, const Bundle& bundle);

/// True iff agent i envies agent j even after the removal of the good i
/// values least among those present in j's bundle. An empty bundle is never
/// envied. Requires i != j.
bool envies_up_to_any(const PreparedInstance& inst, std::size_t i, std::size_t j,
                      const Allocation& alloc);

/// O(n^2) reference check over all ordered pairs.
bool is_efx_dense(const PreparedInstance& inst, const Allocation& alloc);

/// Full pairwise scan recording the first witness in each envy direction.
struct DenseEnvyScan {
    std::optional<EnvyWitness> left;   // envier > envied
    std::optional<EnvyWitness> right;  // envier < envied
    bool any() const { return left || right; }
};
DenseEnvyScan scan_envy_dense(const PreparedInstance& inst, const Allocation& alloc);

/// Verdict from scan_envy_dense; throws InternalInvariantError when envy
/// exists in both directions (impossible for constructor outputs).
EnvyVerdict classify_dense(const PreparedInstance& inst, const Allocation& alloc);

/// O(b^2) classification that only inspects the first and last agent of each
/// segment: if anyone envies, some segment-boundary agent envies, because an
/// interior agent's envy inequality transfers to a neighbor with the same
/// bundle. Agrees with classify_dense wherever both run.
EnvyVerdict classify_segmented(const PreparedInstance& inst, const SegmentedAllocation& seg);

/// Pivot witness t (0-based) such that agents before t hold no type-2 goods
/// and agents after t hold fewer type-1 goods than v2[t]; such an allocation
/// is Pareto-optimal. Scans every candidate pivot in O(n) via suffix maxima.
std::optional<std::size_t> is_proper(const PreparedInstance& inst, const Allocation& alloc);

Allocation to_dense(const SegmentedAllocation& seg);
SegmentedAllocation to_segmented(const Allocation& alloc);

}  // namespace efxpo
