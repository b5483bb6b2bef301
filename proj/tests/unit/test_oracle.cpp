#include <doctest.h>

#include "efxpo/errors.hpp"
#include "efxpo/oracle.hpp"
#include "efxpo/realloc.hpp"
#include "efxpo/solver.hpp"
#include "helpers.hpp"

using namespace efxpo;
using namespace efxpo::test;

TEST_CASE("enumeration counts match the composition formula") {
    auto count_by_walk = [](std::size_t n, long long m1, long long m2) {
        std::size_t count = 0;
        enumerate_allocations(n, BigInt(m1), BigInt(m2), {},
                              [&](const Allocation&) { ++count; });
        return count;
    };
    CHECK(count_by_walk(2, 1, 1) == 4);
    CHECK(count_by_walk(2, 2, 2) == 9);
    CHECK(count_by_walk(3, 2, 1) == 18);
    CHECK(allocation_count(2, BigInt(1), BigInt(1)) == 4);
    CHECK(allocation_count(3, BigInt(2), BigInt(1)) == 18);

    Rng rng(71);
    for (int i = 0; i < 50; ++i) {
        std::size_t n = rng.one_to(4);
        long long m1 = static_cast<long long>(rng.one_to(5));
        long long m2 = static_cast<long long>(rng.one_to(5));
        CHECK(BigInt(count_by_walk(n, m1, m2)) == allocation_count(n, BigInt(m1), BigInt(m2)));
    }
}

TEST_CASE("enumeration respects its budget") {
    EnumBudget tiny{5};
    CHECK_THROWS_AS(
        enumerate_allocations(2, BigInt(2), BigInt(2), tiny, [](const Allocation&) {}),
        BudgetExceededError);
}

TEST_CASE("envy oracle on the intro allocations") {
    PreparedInstance inst = prepared_of({"9", "10"}, 2, 2);
    CHECK(oracle_efx(inst, alloc_of({{1, 1}, {1, 1}})).efx);
    OracleEfxResult hoarder = oracle_efx(inst, alloc_of({{2, 2}, {0, 0}}));
    CHECK_FALSE(hoarder.efx);
    CHECK(hoarder.witness == EnvyWitness{1, 0});
}

TEST_CASE("envy oracle agrees with the dense check on random allocations") {
    Rng rng(72);
    for (int i = 0; i < 5000; ++i) {
        std::size_t n = rng.one_to(6);
        std::vector<std::string> ratios;
        for (std::size_t a = 0; a < n; ++a) {
            ratios.push_back(std::to_string(rng.one_to(9)) + "/" +
                             std::to_string(rng.one_to(9)));
        }
        std::sort(ratios.begin(), ratios.end(), [](const auto& a, const auto& b) {
            return compare(parse_rational(a), parse_rational(b)) < 0;
        });
        PreparedInstance inst = prepared_of(ratios, 0, 0);
        Allocation alloc;
        alloc.bundles.resize(n);
        for (std::size_t a = 0; a < n; ++a) {
            alloc.bundles[a] = {BigInt(rng.one_to(5) - 1), BigInt(rng.one_to(5) - 1)};
            inst.m1 += alloc.bundles[a].x1;
            inst.m2 += alloc.bundles[a].x2;
        }
        CHECK(oracle_efx(inst, alloc).efx == is_efx_dense(inst, alloc));
    }
}

TEST_CASE("dominance oracle on the intro example and a twisted variant") {
    PreparedInstance intro = prepared_of({"9", "10"}, 2, 2);
    CHECK(oracle_pareto(intro, alloc_of({{1, 1}, {1, 1}})).status == ParetoStatus::Optimal);

    // when the coffee-lover stops caring (value 1), handing both coffees to
    // the other agent dominates the even split
    PreparedInstance twisted = prepared_of({"1", "9"}, 2, 2);
    OracleParetoResult dominated = oracle_pareto(twisted, alloc_of({{1, 1}, {1, 1}}));
    CHECK(dominated.status == ParetoStatus::Dominated);
    REQUIRE(dominated.dominator.has_value());
    CHECK(dominated.dominator->bundles == alloc_of({{2, 0}, {0, 2}}).bundles);

    PreparedInstance solo = prepared_of({"2"}, 3, 3);
    CHECK(oracle_pareto(solo, alloc_of({{3, 3}})).status == ParetoStatus::Optimal);

    EnumBudget tiny{3};
    CHECK(oracle_pareto(intro, alloc_of({{1, 1}, {1, 1}}), tiny).status ==
          ParetoStatus::BudgetExceeded);
}

TEST_CASE("every enumerable proper allocation is undominated") {
    Rng rng(73);
    for (int i = 0; i < 60; ++i) {
        Preprocessed pre = preprocess(random_instance(rng, 3, 4, 4));
        const PreparedInstance& inst = pre.inst;
        enumerate_allocations(inst.n, inst.m1, inst.m2, {}, [&](const Allocation& a) {
            if (is_proper(inst, a)) {
                CHECK(oracle_pareto(inst, a).status == ParetoStatus::Optimal);
            }
        });
    }
}

TEST_CASE("theorem sweep is clean on a small grid") {
    const std::vector<std::string> ratios = {"1/2", "1", "3"};
    for (const std::string& r1 : ratios) {
        for (const std::string& r2 : ratios) {
            for (long long m1 = 1; m1 <= 3; ++m1) {
                for (long long m2 = 1; m2 <= 3; ++m2) {
                    RawInstance raw = raw_of(m1, m2, {{"1", r1}, {"1", r2}});
                    TheoremReport report = validate_theorems(raw);
                    CHECK(report.violations() == 0);
                }
            }
        }
    }
    TheoremReport solo = validate_theorems(raw_of(2, 3, {{"1", "2"}}));
    CHECK(solo.violations() == 0);
}

TEST_CASE("oversized sweeps are skipped, not failed") {
    RawInstance big = raw_of(60, 60, {{"1", "1"}, {"1", "2"}, {"1", "3"}});
    EnumBudget small{1000};
    TheoremReport report = validate_theorems(big, small);
    CHECK(report.violations() == 0);
    bool skipped = false;
    for (const TheoremCheck& c : report.checks) {
        if (c.status == TheoremCheck::Status::Skipped) skipped = true;
    }
    CHECK(skipped);
}

TEST_CASE("a corrupted reallocation is flagged") {
    GenSpec spec;
    spec.n = 3;
    spec.m1 = 7;
    spec.m2 = 5;
    spec.seed = 9;
    spec.denom_bound = 5;
    spec.adversarial = true;
    Preprocessed pre = preprocess(generate_instance(spec));
    ScanResult scan = scan_T(pre.inst);
    REQUIRE(scan.flips.size() == 1);
    const SplitIndex flip = scan.entries[scan.flips.front()].index;
    Allocation good = to_dense(build_realloc(pre.inst, make_realloc_index(pre.inst, flip)));
    CHECK(check_reallocation_at_flip(pre.inst, flip, good).status ==
          TheoremCheck::Status::Pass);

    // move one type-1 good between two agents holding different counts
    Allocation bad = good;
    std::size_t rich = 0;
    for (std::size_t a = 1; a < bad.agent_count(); ++a) {
        if (bad.bundles[a].x1 > bad.bundles[rich].x1) rich = a;
    }
    std::size_t poor = rich == 0 ? 1 : 0;
    bad.bundles[rich].x1 += 1;
    bad.bundles[poor].x1 -= 1;
    if (bad.bundles[poor].x1 < 0) {
        bad.bundles[poor].x1 += 2;
        bad.bundles[rich].x1 -= 2;
    }
    CHECK(check_reallocation_at_flip(pre.inst, flip, bad).status ==
          TheoremCheck::Status::Fail);
}
