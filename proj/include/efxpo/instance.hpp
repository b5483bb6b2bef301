#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "efxpo/rational.hpp"

namespace efxpo {

struct Bundle {
    BigInt x1;
    BigInt x2;
    bool operator==(const Bundle&) const = default;
    bool empty() const { return x1.is_zero() && x2.is_zero(); }
};

/// Per-agent good counts, complete over the instance: sums equal (m1, m2).
struct Allocation {
    std::vector<Bundle> bundles;
    std::size_t agent_count() const { return bundles.size(); }
};

/// User-facing problem statement: good multiplicities and one (v1, v2)
/// valuation pair per agent, all strictly positive.
struct RawInstance {
    BigInt m1;
    BigInt m2;
    std::vector<std::pair<Rational, Rational>> valuations;
    std::size_t agent_count() const { return valuations.size(); }
};

/// Throws ValidationError unless there is at least one agent, every valuation
/// is strictly positive, both good counts are nonnegative, and m1 + m2 >= 1.
void validate(const RawInstance& raw);

/// Normalized, sorted view the solver works on. Agents are reindexed so the
/// normalized type-2 value v2[i] (= v_{i,2}/v_{i,1}, possibly after a good-type
/// swap) is non-decreasing. perm[prepared] = raw index; map_back undoes both
/// the reindexing and the swap.
///
/// On the solve path all of the restrictions hold:
///   v2 non-decreasing and positive; n1 + n2 = n with v2[n1-1] <= 1 <= v2[n1];
///   m1*n2 >= m2*n1; m2 > 0; n2 > 0; m1 + m2 >= n.
/// (Indices here are 0-based; the boundary checks are skipped when out of range.)
struct PreparedInstance {
    std::size_t n = 0;
    BigInt m1;
    BigInt m2;
    std::vector<Rational> v2;
    std::size_t n1 = 0;
    std::size_t n2 = 0;
    bool swapped = false;
    std::vector<std::size_t> perm;

    /// Throws InternalInvariantError if any restriction fails.
    void assert_restrictions() const;
};

enum class SolvePath {
    General,      // full split-allocation machinery applies
    OneType,      // m1 == 0 or m2 == 0; equitable single-type division
    TooFewItems,  // m1 + m2 <= n; one good per agent from the two ends
};

struct Preprocessed {
    SolvePath path = SolvePath::General;
    PreparedInstance inst;
};

/// Normalizes per-agent values to (1, v2/v1), picks the good-type orientation
/// and the tie split between the two agent groups (largest feasible group-1
/// first, as-given orientation tried before the swap), and stable-sorts agents
/// by the oriented ratio. Trivial inputs short-circuit to the matching path.
Preprocessed preprocess(const RawInstance& raw);

/// Reindexes a prepared-order allocation back to raw agent order and undoes
/// the good-type swap. Throws ValidationError on an agent-count mismatch.
Allocation map_back(const PreparedInstance& prepared, const Allocation& alloc);

/// Inverse of map_back: raw-order allocation into prepared order, swap applied.
Allocation map_to_prepared(const PreparedInstance& prepared, const Allocation& alloc);

/// Allocation for the trivial paths, in prepared order.
/// TooFewItems: agents 0..m1-1 get one type-1 good, the last m2 agents one
/// type-2 good. OneType: all goods sit in the type-2 coordinate of the
/// prepared view and are divided equitably with higher-ratio agents favored.
Allocation solve_trivial(const Preprocessed& pre);

}  // namespace efxpo
