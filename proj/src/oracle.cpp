#include "efxpo/oracle.hpp"

#include <algorithm>
#include <sstream>

#include "efxpo/errors.hpp"
#include "efxpo/realloc.hpp"
#include "efxpo/solver.hpp"

namespace efxpo {

BigInt allocation_count(std::size_t n, const BigInt& m1, const BigInt& m2) {
    auto weak_compositions = [n](const BigInt& m) {
        // C(m + n - 1, n - 1) via an exact running product
        BigInt r = 1;
        for (std::size_t i = 1; i < n; ++i) {
            r = r * (m + i) / BigInt(i);
        }
        return r;
    };
    return weak_compositions(m1) * weak_compositions(m2);
}

namespace {

void enum_compositions(const BigInt& m, std::size_t parts, std::vector<BigInt>& cur,
                       std::size_t pos, const std::function<void()>& visit) {
    if (pos + 1 == parts) {
        cur[pos] = m;
        visit();
        return;
    }
    for (BigInt v = 0; v <= m; ++v) {
        cur[pos] = v;
        enum_compositions(m - v, parts, cur, pos + 1, visit);
    }
}

}  // namespace

void enumerate_allocations(std::size_t n, const BigInt& m1, const BigInt& m2,
                           const EnumBudget& budget,
                           const std::function<void(const Allocation&)>& fn) {
    if (n == 0) throw ValidationError("no agents");
    if (allocation_count(n, m1, m2) > budget.max_allocations) {
        throw BudgetExceededError("allocation enumeration over budget");
    }
    std::vector<BigInt> c1(n), c2(n);
    Allocation alloc;
    alloc.bundles.resize(n);
    enum_compositions(m1, n, c1, 0, [&] {
        enum_compositions(m2, n, c2, 0, [&] {
            for (std::size_t i = 0; i < n; ++i) {
                alloc.bundles[i] = {c1[i], c2[i]};
            }
            fn(alloc);
        });
    });
}

OracleEfxResult oracle_efx(const PreparedInstance& inst, const Allocation& alloc) {
    // written straight from the definition, in Rational arithmetic
    const Rational one(1);
    for (std::size_t i = 0; i < inst.n; ++i) {
        Rational own = utility(inst, i, alloc.bundles[i]);
        for (std::size_t j = 0; j < inst.n; ++j) {
            if (i == j) continue;
            const Bundle& other = alloc.bundles[j];
            if (other.empty()) continue;
            std::optional<Rational> least;
            if (other.x1 > 0) least = one;
            if (other.x2 > 0 && (!least || compare(inst.v2[i], *least) < 0)) {
                least = inst.v2[i];
            }
            if (compare(own + *least, utility(inst, i, other)) < 0) {
                return {false, EnvyWitness{i, j}};
            }
        }
    }
    return {true, std::nullopt};
}

namespace {

// utilities scaled per agent by the denominator of v2[i]
std::vector<BigInt> scaled_utilities(const PreparedInstance& inst, const Allocation& alloc) {
    std::vector<BigInt> u(inst.n);
    for (std::size_t i = 0; i < inst.n; ++i) {
        const Rational& v = inst.v2[i];
        u[i] = alloc.bundles[i].x1 * v.den() + alloc.bundles[i].x2 * v.num();
    }
    return u;
}

bool dominates(const std::vector<BigInt>& candidate, const std::vector<BigInt>& base) {
    bool strict = false;
    for (std::size_t i = 0; i < base.size(); ++i) {
        if (candidate[i] < base[i]) return false;
        if (candidate[i] > base[i]) strict = true;
    }
    return strict;
}

std::string show(const Allocation& alloc) {
    std::ostringstream out;
    out << "[";
    for (std::size_t i = 0; i < alloc.agent_count(); ++i) {
        if (i) out << " ";
        out << alloc.bundles[i].x1 << "+" << alloc.bundles[i].x2;
    }
    out << "]";
    return out.str();
}

}  // namespace

OracleParetoResult oracle_pareto(const PreparedInstance& inst, const Allocation& alloc,
                                 const EnumBudget& budget) {
    if (allocation_count(inst.n, inst.m1, inst.m2) > budget.max_allocations) {
        return {ParetoStatus::BudgetExceeded, std::nullopt};
    }
    std::vector<BigInt> base = scaled_utilities(inst, alloc);
    OracleParetoResult result{ParetoStatus::Optimal, std::nullopt};
    std::vector<BigInt> candidate(inst.n);
    enumerate_allocations(inst.n, inst.m1, inst.m2, budget, [&](const Allocation& y) {
        if (result.status == ParetoStatus::Dominated) return;
        for (std::size_t i = 0; i < inst.n; ++i) {
            const Rational& v = inst.v2[i];
            candidate[i] = y.bundles[i].x1 * v.den() + y.bundles[i].x2 * v.num();
        }
        if (dominates(candidate, base)) {
            result.status = ParetoStatus::Dominated;
            result.dominator = y;
        }
    });
    return result;
}

std::size_t TheoremReport::violations() const {
    std::size_t count = 0;
    for (const TheoremCheck& c : checks) {
        if (c.status == TheoremCheck::Status::Fail) ++count;
    }
    return count;
}

TheoremCheck check_reallocation_at_flip(const PreparedInstance& inst, const SplitIndex& flip,
                                        const Allocation& candidate, const EnumBudget& budget) {
    TheoremCheck check{"flip-reallocation", TheoremCheck::Status::Pass, ""};
    auto fail = [&](const std::string& why) {
        check.status = TheoremCheck::Status::Fail;
        if (!check.detail.empty()) check.detail += "; ";
        check.detail += why;
    };

    ReallocIndex ridx = make_realloc_index(inst, flip);
    if (!realloc_lower_bound_holds(inst, ridx)) fail("lower sandwich bound violated");
    if (!realloc_upper_bound_holds(inst, ridx)) fail("upper sandwich bound violated");

    OracleEfxResult efx = oracle_efx(inst, candidate);
    if (!efx.efx) {
        fail("reallocation envied: agent " + std::to_string(efx.witness->first + 1) +
             " envies agent " + std::to_string(efx.witness->second + 1) + " in " +
             show(candidate));
    }
    if (!is_proper(inst, candidate)) fail("reallocation is not proper");

    OracleParetoResult po = oracle_pareto(inst, candidate, budget);
    if (po.status == ParetoStatus::Dominated) {
        fail("reallocation dominated by " + show(*po.dominator));
    } else if (po.status == ParetoStatus::BudgetExceeded && check.status == TheoremCheck::Status::Pass) {
        check.status = TheoremCheck::Status::Skipped;
        check.budget_limited = true;
        check.detail = "dominance sweep over budget; envy and properness checks passed";
    }
    return check;
}

TheoremReport validate_theorems(const RawInstance& raw, const EnumBudget& budget) {
    TheoremReport report;
    Preprocessed pre = preprocess(raw);
    const PreparedInstance& inst = pre.inst;

    // proper allocations are never dominated
    {
        TheoremCheck check{"proper-implies-po", TheoremCheck::Status::Pass, ""};
        BigInt count = allocation_count(inst.n, inst.m1, inst.m2);
        BigInt pair_work = count * count;
        if (pair_work > budget.max_allocations) {
            check.status = TheoremCheck::Status::Skipped;
            check.budget_limited = true;
            check.detail = "pairwise dominance sweep over budget (" + count.str() +
                           " allocations)";
        } else {
            std::vector<std::vector<BigInt>> profiles;
            std::vector<Allocation> proper_allocs;
            std::vector<std::vector<BigInt>> proper_profiles;
            enumerate_allocations(inst.n, inst.m1, inst.m2, budget, [&](const Allocation& a) {
                profiles.push_back(scaled_utilities(inst, a));
                if (is_proper(inst, a)) {
                    proper_allocs.push_back(a);
                    proper_profiles.push_back(profiles.back());
                }
            });
            for (std::size_t p = 0; p < proper_allocs.size() &&
                                    check.status == TheoremCheck::Status::Pass; ++p) {
                for (const auto& q : profiles) {
                    if (dominates(q, proper_profiles[p])) {
                        check.status = TheoremCheck::Status::Fail;
                        check.detail = "proper allocation " + show(proper_allocs[p]) +
                                       " is dominated";
                        break;
                    }
                }
            }
        }
        report.checks.push_back(check);
    }

    if (pre.path != SolvePath::General) {
        for (const char* name :
             {"single-envy-direction", "extremal-directions", "flip-reallocation"}) {
            report.checks.push_back({name, TheoremCheck::Status::Skipped,
                                     "no split structure on this instance"});
        }
        return report;
    }

    ScanResult scan;
    try {
        scan = scan_T(inst, budget.max_allocations);
    } catch (const BudgetExceededError&) {
        for (const char* name :
             {"single-envy-direction", "extremal-directions", "flip-reallocation"}) {
            report.checks.push_back({name, TheoremCheck::Status::Skipped,
                                     "split index set over budget", true});
        }
        return report;
    }

    {
        TheoremCheck check{"single-envy-direction", TheoremCheck::Status::Pass, ""};
        for (const ScanEntry& entry : scan.entries) {
            DenseEnvyScan dense =
                scan_envy_dense(inst, to_dense(build_split(inst, entry.index)));
            if (dense.left && dense.right) {
                check.status = TheoremCheck::Status::Fail;
                check.detail = "split (" + std::to_string(entry.index.t + 1) + ", " +
                               entry.index.k.str() + ") envious in both directions";
                break;
            }
        }
        report.checks.push_back(check);
    }

    {
        TheoremCheck check{"extremal-directions", TheoremCheck::Status::Pass, ""};
        if (scan.entries.front().verdict.kind == EnvyKind::RightEnvious) {
            check.status = TheoremCheck::Status::Fail;
            check.detail = "minimum split index is right-envious";
        }
        if (scan.entries.back().verdict.kind == EnvyKind::LeftEnvious) {
            check.status = TheoremCheck::Status::Fail;
            check.detail += std::string(check.detail.empty() ? "" : "; ") +
                            "maximum split index is left-envious";
        }
        if (scan.structure_violation) {
            check.status = TheoremCheck::Status::Fail;
            check.detail += std::string(check.detail.empty() ? "" : "; ") +
                            *scan.structure_violation;
        }
        report.checks.push_back(check);
    }

    if (scan.flips.empty()) {
        report.checks.push_back({"flip-reallocation", TheoremCheck::Status::Pass,
                                 "no envy-direction flip on this instance"});
    } else {
        for (std::size_t pos : scan.flips) {
            const SplitIndex flip = scan.entries[pos].index;
            Allocation realloc_alloc =
                to_dense(build_realloc(inst, make_realloc_index(inst, flip)));
            report.checks.push_back(
                check_reallocation_at_flip(inst, flip, realloc_alloc, budget));
        }
    }
    return report;
}

}  // namespace efxpo
