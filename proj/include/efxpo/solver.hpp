#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "efxpo/allocation.hpp"
#include "efxpo/instance.hpp"
#include "efxpo/split.hpp"

namespace efxpo {

enum class CertificateKind { TrivialFewItems, TrivialOneType, Split, Realloc };

/// How the returned allocation was produced and why it is EFX+PO. The split
/// index (t, k) and the proper-allocation pivot are reported 0-based against
/// the prepared agent order.
struct Certificate {
    CertificateKind kind = CertificateKind::Split;
    std::optional<std::size_t> t;
    std::optional<BigInt> k;
    std::optional<std::size_t> proper_witness;
};

struct SolveStats {
    std::uint64_t split_builds = 0;
    std::uint64_t classifier_calls = 0;
    std::uint64_t preprocess_ns = 0;
    std::uint64_t search_ns = 0;
    std::uint64_t elapsed_ns = 0;
};

struct SolveResult {
    Allocation allocation;  // raw agent order, original good types
    Certificate certificate;
    bool efx_checked = false;  // the O(n^2) check actually ran
    SolveStats stats;
};

struct SolveOptions {
    /// Run the O(n^2) envy check and the dense/segmented classifier
    /// comparison on every probe. Defaults to the EFXPO_DEBUG_ASSERTS
    /// environment variable. Cheap O(1) structural checks always run.
    std::optional<bool> debug_asserts;
};

/// Validates, preprocesses, and runs the extremal checks, the pivot binary
/// search, the within-pivot binary search, and the flip-point reallocation,
/// returning an EFX and Pareto-optimal allocation in raw agent order.
SolveResult solve(const RawInstance& raw, const SolveOptions& options = {});

/// solve() after preprocessing; exposed so callers can time the two phases.
SolveResult solve_prepared(const Preprocessed& pre, const SolveOptions& options = {});

/// Test-scale linear walk of every valid split index in search order.
struct ScanEntry {
    SplitIndex index;
    EnvyVerdict verdict;
};
struct ScanResult {
    std::vector<ScanEntry> entries;
    /// Position i such that entries[i] is left-envious and entries[i+1]
    /// right-envious; at most one exists when the structure below holds.
    std::vector<std::size_t> flips;
    /// Set when a left-envious entry appears after a right-envious one,
    /// which the binary search relies on never happening.
    std::optional<std::string> structure_violation;
};

/// Throws BudgetExceededError when the index set is larger than max_entries.
ScanResult scan_T(const PreparedInstance& inst, std::uint64_t max_entries = 100000);

}  // namespace efxpo
