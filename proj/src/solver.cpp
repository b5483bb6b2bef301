#include "efxpo/solver.hpp"

#include <chrono>
#include <cstdlib>

#include "efxpo/errors.hpp"
#include "efxpo/realloc.hpp"

namespace efxpo {

namespace {

using Clock = std::chrono::steady_clock;

std::uint64_t ns_since(Clock::time_point start) {
    return static_cast<std::uint64_t>(
        std::chrono::duration_cast<std::chrono::nanoseconds>(Clock::now() - start).count());
}

bool debug_asserts_enabled(const SolveOptions& options) {
    if (options.debug_asserts) return *options.debug_asserts;
    static const bool from_env = [] {
        const char* v = std::getenv("EFXPO_DEBUG_ASSERTS");
        return v != nullptr && v[0] != '\0' && v[0] != '0';
    }();
    return from_env;
}

struct Search {
    const PreparedInstance& inst;
    SolveStats& stats;
    bool debug;

    EnvyVerdict classify(const SplitIndex& idx, SegmentedAllocation& out) const {
        out = build_split(inst, idx);
        ++stats.split_builds;
        ++stats.classifier_calls;
        EnvyVerdict verdict = classify_segmented(inst, out);
        if (debug) {
            EnvyVerdict dense = classify_dense(inst, to_dense(out));
            if (dense.kind != verdict.kind) {
                throw InternalInvariantError("segmented and dense classifiers disagree");
            }
        }
        return verdict;
    }
};

}  // namespace

SolveResult solve_prepared(const Preprocessed& pre, const SolveOptions& options) {
    const bool debug = debug_asserts_enabled(options);
    const PreparedInstance& inst = pre.inst;
    auto start = Clock::now();

    SolveResult result;
    Certificate& cert = result.certificate;
    Allocation prepared_alloc;

    if (pre.path != SolvePath::General) {
        prepared_alloc = solve_trivial(pre);
        cert.kind = pre.path == SolvePath::OneType ? CertificateKind::TrivialOneType
                                                   : CertificateKind::TrivialFewItems;
    } else {
        Search search{inst, result.stats, debug};
        SegmentedAllocation seg;
        SegmentedAllocation chosen_seg;
        std::optional<SplitIndex> chosen_split;
        std::optional<SplitIndex> flip;
        auto choose = [&](const SplitIndex& idx) {
            chosen_split = idx;
            chosen_seg = seg;
        };

        const SplitIndex lo_idx = minimum_split_index(inst);
        const SplitIndex hi_idx = maximum_split_index(inst);

        EnvyVerdict lo_verdict = search.classify(lo_idx, seg);
        if (lo_verdict.kind == EnvyKind::Efx) {
            choose(lo_idx);
        } else if (lo_idx == hi_idx) {
            // a single valid index cannot be envious in either direction
            throw InternalInvariantError("sole split index is not EFX");
        } else {
            if (lo_verdict.kind != EnvyKind::LeftEnvious) {
                throw InternalInvariantError("minimum split index is right-envious");
            }
            EnvyVerdict hi_verdict = search.classify(hi_idx, seg);
            if (hi_verdict.kind == EnvyKind::Efx) {
                choose(hi_idx);
            } else if (hi_verdict.kind != EnvyKind::RightEnvious) {
                throw InternalInvariantError("maximum split index is left-envious");
            } else {
                // pivot search: left probe stays LE, right probe stays RE
                std::size_t tl = lo_idx.t;
                std::size_t tr = hi_idx.t;
                while (tr - tl > 1 && !chosen_split) {
                    std::size_t tm = tl + (tr - tl) / 2;
                    SplitIndex probe{tm, inst.m2 / BigInt(inst.n - tm)};
                    EnvyVerdict verdict = search.classify(probe, seg);
                    if (verdict.kind == EnvyKind::Efx) choose(probe);
                    else if (verdict.kind == EnvyKind::LeftEnvious) tl = tm;
                    else tr = tm;
                }
                if (!chosen_split) {
                    // within the found pivot, walk k down from its maximum
                    std::size_t t = tl;
                    BigInt kl = inst.m2 / BigInt(inst.n - t);
                    BigInt kr = 1;
                    SplitIndex bottom{t, kr};
                    EnvyVerdict bottom_verdict = search.classify(bottom, seg);
                    if (bottom_verdict.kind == EnvyKind::Efx) {
                        choose(bottom);
                    } else if (bottom_verdict.kind == EnvyKind::RightEnvious) {
                        while (kl - kr > 1 && !chosen_split) {
                            BigInt km = (kl + kr) / 2;
                            SplitIndex probe{t, km};
                            EnvyVerdict verdict = search.classify(probe, seg);
                            if (verdict.kind == EnvyKind::Efx) choose(probe);
                            else if (verdict.kind == EnvyKind::LeftEnvious) kl = km;
                            else kr = km;
                        }
                        if (!chosen_split) flip = SplitIndex{t, kl};
                    } else {
                        // (t, 1) still left-envious: its successor is the
                        // right-envious probe at the next pivot
                        flip = bottom;
                    }
                }
            }
        }

        if (chosen_split) {
            seg = chosen_seg;
            cert.kind = CertificateKind::Split;
            cert.t = chosen_split->t;
            cert.k = chosen_split->k;
        } else {
            ReallocIndex ridx = make_realloc_index(inst, *flip);
            if (!realloc_lower_bound_holds(inst, ridx) ||
                !realloc_upper_bound_holds(inst, ridx)) {
                throw InternalInvariantError("flip index violates the envy-flip sandwich");
            }
            seg = build_realloc(inst, ridx);
            cert.kind = CertificateKind::Realloc;
            cert.t = ridx.t;
            cert.k = ridx.k;
        }
        prepared_alloc = to_dense(seg);
    }

    cert.proper_witness = is_proper(inst, prepared_alloc);
    if (!cert.proper_witness) {
        throw InternalInvariantError("result is not a proper allocation");
    }
    if (debug) {
        if (!is_efx_dense(inst, prepared_alloc)) {
            throw InternalInvariantError("result failed the dense envy check");
        }
        result.efx_checked = true;
    }

    result.allocation = map_back(inst, prepared_alloc);
    result.stats.search_ns = ns_since(start);
    result.stats.elapsed_ns = result.stats.preprocess_ns + result.stats.search_ns;
    return result;
}

SolveResult solve(const RawInstance& raw, const SolveOptions& options) {
    auto start = Clock::now();
    Preprocessed pre = preprocess(raw);
    std::uint64_t prep_ns = ns_since(start);
    SolveResult result = solve_prepared(pre, options);
    result.stats.preprocess_ns = prep_ns;
    result.stats.elapsed_ns = prep_ns + result.stats.search_ns;
    return result;
}

ScanResult scan_T(const PreparedInstance& inst, std::uint64_t max_entries) {
    // count |T| first: sum over valid pivots of floor(m2 / (n - t)), plus one
    BigInt size = 1;
    std::size_t first_valid = minimum_split_index(inst).t;
    for (std::size_t t = first_valid; t + 1 < inst.n; ++t) {
        if (compare(inst.v2[t], Rational(1)) < 0) continue;
        size += inst.m2 / BigInt(inst.n - t);
        if (size > max_entries) {
            throw BudgetExceededError("split index set larger than the scan budget");
        }
    }

    ScanResult scan;
    auto visit = [&](const SplitIndex& idx) {
        scan.entries.push_back({idx, classify_split(inst, idx)});
    };
    for (std::size_t t = first_valid; t + 1 < inst.n; ++t) {
        if (compare(inst.v2[t], Rational(1)) < 0) continue;
        BigInt k_max = inst.m2 / BigInt(inst.n - t);
        for (BigInt k = k_max; k >= 1; --k) {
            visit({t, k});
        }
    }
    visit(maximum_split_index(inst));

    bool seen_right = false;
    for (std::size_t i = 0; i < scan.entries.size(); ++i) {
        EnvyKind kind = scan.entries[i].verdict.kind;
        if (kind == EnvyKind::RightEnvious) seen_right = true;
        if (kind == EnvyKind::LeftEnvious && seen_right) {
            scan.structure_violation = "left-envious index after a right-envious one";
        }
        if (i + 1 < scan.entries.size() && kind == EnvyKind::LeftEnvious &&
            scan.entries[i + 1].verdict.kind == EnvyKind::RightEnvious) {
            scan.flips.push_back(i);
        }
    }
    return scan;
}

}  // namespace efxpo
