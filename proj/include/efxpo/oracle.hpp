#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "efxpo/allocation.hpp"
#include "efxpo/instance.hpp"
#include "efxpo/split.hpp"

namespace efxpo {

/// Cap on C(m1+n-1, n-1) * C(m2+n-1, n-1); enumeration refuses to start
/// beyond it.
struct EnumBudget {
    std::uint64_t max_allocations = 2'000'000;
};

/// Number of complete allocations of the instance.
BigInt allocation_count(std::size_t n, const BigInt& m1, const BigInt& m2);

/// Calls fn once per complete allocation (every pair of weak compositions of
/// m1 and m2 over the agents). Throws BudgetExceededError if the count
/// exceeds the budget before generating anything.
void enumerate_allocations(std::size_t n, const BigInt& m1, const BigInt& m2,
                           const EnumBudget& budget,
                           const std::function<void(const Allocation&)>& fn);

/// Direct transcription of the envy-up-to-any-good definition over Rational
/// arithmetic. Deliberately shares no helper with the segment-based path.
struct OracleEfxResult {
    bool efx = true;
    std::optional<EnvyWitness> witness;
};
OracleEfxResult oracle_efx(const PreparedInstance& inst, const Allocation& alloc);

enum class ParetoStatus { Optimal, Dominated, BudgetExceeded };
struct OracleParetoResult {
    ParetoStatus status = ParetoStatus::Optimal;
    std::optional<Allocation> dominator;
};

/// Exhaustive Pareto-dominance test: scans every complete allocation for one
/// that weakly improves all agents and strictly improves some agent.
OracleParetoResult oracle_pareto(const PreparedInstance& inst, const Allocation& alloc,
                                 const EnumBudget& budget = {});

struct TheoremCheck {
    enum class Status { Pass, Fail, Skipped };
    std::string name;
    Status status = Status::Pass;
    std::string detail;
    bool budget_limited = false;  // skipped or degraded by the allocation cap
};

struct TheoremReport {
    std::vector<TheoremCheck> checks;
    std::size_t violations() const;
    bool clean() const { return violations() == 0; }
};

/// Empirically checks the structural guarantees on one instance:
///   proper-implies-po     every enumerable proper allocation is undominated
///   single-envy-direction no split allocation is envious both ways
///   extremal-directions   first index is EFX/left-envious, last EFX/right-
///                         envious, and no left-envious entry follows a
///                         right-envious one
///   flip-reallocation     at each adjacent LE->RE pair the integer sandwich
///                         holds and the reallocation is EFX, proper, and
///                         undominated (budget permitting)
/// Oversized sweeps are reported as Skipped, never as violations.
TheoremReport validate_theorems(const RawInstance& raw, const EnumBudget& budget = {});

/// The flip-reallocation check against a caller-supplied allocation, exposed
/// so tests can feed deliberately corrupted reallocations.
TheoremCheck check_reallocation_at_flip(const PreparedInstance& inst, const SplitIndex& flip,
                                        const Allocation& candidate,
                                        const EnumBudget& budget = {});

}  // namespace efxpo
