#include <doctest.h>

#include "efxpo/errors.hpp"
#include "efxpo/oracle.hpp"
#include "helpers.hpp"

using namespace efxpo;
using namespace efxpo::test;

TEST_CASE("validate accepts the croissant-and-coffee instance") {
    CHECK_NOTHROW(validate(intro_instance()));
}

TEST_CASE("validate rejects degenerate input") {
    RawInstance zero_val = raw_of(1, 1, {{"1", "1"}});
    zero_val.valuations[0].second = Rational(0);
    CHECK_THROWS_AS(validate(zero_val), ValidationError);

    RawInstance no_agents;
    no_agents.m1 = 1;
    no_agents.m2 = 1;
    CHECK_THROWS_AS(validate(no_agents), ValidationError);

    CHECK_THROWS_AS(validate(raw_of(0, 0, {{"1", "1"}})), ValidationError);

    RawInstance negative = raw_of(1, 1, {{"1", "1"}});
    negative.m1 = -1;
    CHECK_THROWS_AS(validate(negative), ValidationError);
}

TEST_CASE("preprocessing the intro instance keeps the given orientation") {
    // both ratios exceed 1, so group 1 is empty and no swap is needed:
    // n1 = 0 gives m1*n2 = 4 >= m2*n1 = 0
    Preprocessed pre = preprocess(intro_instance());
    CHECK(pre.path == SolvePath::General);
    CHECK_FALSE(pre.inst.swapped);
    CHECK(pre.inst.n1 == 0);
    CHECK(pre.inst.n2 == 2);
    CHECK(pre.inst.v2[0] == Rational(9));
    CHECK(pre.inst.v2[1] == Rational(10));
    CHECK(pre.inst.perm == std::vector<std::size_t>{1, 0});
}

TEST_CASE("tie agents split to the largest feasible first group") {
    RawInstance raw = raw_of(4, 2, {{"2", "2"}, {"5", "5"}, {"1", "1"}});
    Preprocessed pre = preprocess(raw);
    CHECK(pre.path == SolvePath::General);
    CHECK_FALSE(pre.inst.swapped);
    CHECK(pre.inst.n1 == 2);  // n1 = 3 leaves group 2 empty; 4*1 >= 2*2 holds
    CHECK(pre.inst.n2 == 1);
    // stable: equal ratios keep raw order
    CHECK(pre.inst.perm == std::vector<std::size_t>{0, 1, 2});
}

TEST_CASE("orientation swaps when the as-given split is infeasible") {
    RawInstance raw = raw_of(1, 5, {{"2", "1"}, {"3", "1"}});
    Preprocessed pre = preprocess(raw);
    CHECK(pre.path == SolvePath::General);
    CHECK(pre.inst.swapped);
    CHECK(pre.inst.m1 == 5);
    CHECK(pre.inst.m2 == 1);
    CHECK(pre.inst.v2[0] == Rational(2));
    CHECK(pre.inst.v2[1] == Rational(3));
}

TEST_CASE("trivial paths are detected") {
    CHECK(preprocess(raw_of(2, 2, {{"1", "1"}, {"1", "2"}, {"1", "3"}, {"1", "1"}, {"1", "2"}}))
              .path == SolvePath::TooFewItems);
    CHECK(preprocess(raw_of(0, 3, {{"1", "1"}, {"1", "2"}})).path == SolvePath::OneType);
    CHECK(preprocess(raw_of(3, 0, {{"1", "1"}, {"1", "2"}})).path == SolvePath::OneType);
}

TEST_CASE("prepared restrictions hold on random general instances") {
    Rng rng(21);
    int general = 0;
    for (int i = 0; i < 400; ++i) {
        RawInstance raw = random_instance(rng, 8, 12, 6);
        Preprocessed pre = preprocess(raw);
        if (pre.path != SolvePath::General) continue;
        ++general;
        CHECK_NOTHROW(pre.inst.assert_restrictions());
    }
    CHECK(general > 200);
}

TEST_CASE("map_back undoes permutation and swap") {
    PreparedInstance ident = prepared_of({"1", "2"}, 3, 1);
    Allocation alloc = alloc_of({{2, 0}, {1, 1}});
    CHECK(map_back(ident, alloc).bundles == alloc.bundles);

    PreparedInstance swapped = ident;
    swapped.swapped = true;
    Allocation unswapped = map_back(swapped, alloc);
    CHECK(unswapped.bundles[0] == Bundle{BigInt(0), BigInt(2)});
    CHECK(unswapped.bundles[1] == Bundle{BigInt(1), BigInt(1)});

    PreparedInstance permuted = ident;
    permuted.perm = {1, 0};
    Allocation exchanged = map_back(permuted, alloc);
    CHECK(exchanged.bundles[0] == alloc.bundles[1]);
    CHECK(exchanged.bundles[1] == alloc.bundles[0]);

    Allocation wrong = alloc_of({{1, 1}});
    CHECK_THROWS_AS(map_back(ident, wrong), ValidationError);
}

TEST_CASE("map_to_prepared inverts map_back") {
    Rng rng(22);
    for (int i = 0; i < 200; ++i) {
        RawInstance raw = random_instance(rng, 6, 8, 5);
        Preprocessed pre = preprocess(raw);
        Allocation alloc;
        BigInt left1 = pre.inst.m1, left2 = pre.inst.m2;
        for (std::size_t a = 0; a + 1 < pre.inst.n; ++a) {
            BigInt t1(rng.one_to(left1.convert_to<std::uint64_t>() + 1) - 1);
            BigInt t2(rng.one_to(left2.convert_to<std::uint64_t>() + 1) - 1);
            alloc.bundles.push_back({t1, t2});
            left1 -= t1;
            left2 -= t2;
        }
        alloc.bundles.push_back({left1, left2});
        Allocation raw_alloc = map_back(pre.inst, alloc);
        Allocation again = map_to_prepared(pre.inst, raw_alloc);
        CHECK(again.bundles == alloc.bundles);
    }
}

TEST_CASE("relabeling preserves utilities up to the v1 normalization") {
    Rng rng(23);
    for (int i = 0; i < 200; ++i) {
        GenSpec spec;
        spec.n = rng.one_to(6);
        spec.m1 = BigInt(rng.one_to(6));
        spec.m2 = BigInt(rng.one_to(6));
        spec.seed = rng.next();
        spec.denom_bound = 5;
        RawInstance raw = generate_instance(spec);
        // give every agent a non-unit v1 so the normalization is exercised
        for (auto& [v1, v2] : raw.valuations) {
            Rational scale(BigInt(rng.one_to(4)), BigInt(rng.one_to(4)));
            v1 = v1 * scale;
            v2 = v2 * scale;
        }
        Preprocessed pre = preprocess(raw);
        Allocation prep_alloc;
        prep_alloc.bundles.assign(pre.inst.n, Bundle{0, 0});
        prep_alloc.bundles[0] = {pre.inst.m1, pre.inst.m2};
        Allocation raw_alloc = map_back(pre.inst, prep_alloc);
        for (std::size_t p = 0; p < pre.inst.n; ++p) {
            std::size_t r = pre.inst.perm[p];
            const auto& [v1, v2] = raw.valuations[r];
            Rational raw_utility =
                Rational(raw_alloc.bundles[r].x1) * v1 + Rational(raw_alloc.bundles[r].x2) * v2;
            Rational normalized = utility(pre.inst, p, prep_alloc.bundles[p]);
            // the scale is the raw value of whichever good plays type 1 after
            // the orientation step
            const Rational& scale = pre.inst.swapped ? v2 : v1;
            CHECK(normalized * scale == raw_utility);
        }
    }
}

TEST_CASE("one good each from the two ends when goods are scarce") {
    RawInstance raw = raw_of(1, 1, {{"1", "2"}, {"1", "1"}, {"1", "3"}});
    Preprocessed pre = preprocess(raw);
    REQUIRE(pre.path == SolvePath::TooFewItems);
    Allocation alloc = solve_trivial(pre);  // sorted ratios: 1, 2, 3
    CHECK(alloc.bundles == alloc_of({{1, 0}, {0, 0}, {0, 1}}).bundles);
    CHECK(is_proper(pre.inst, alloc) == std::size_t{0});  // pivot = m1
    CHECK(oracle_efx(pre.inst, alloc).efx);
}

TEST_CASE("single good type divides equitably") {
    Preprocessed pre = preprocess(raw_of(0, 3, {{"1", "2"}, {"1", "3"}}));
    REQUIRE(pre.path == SolvePath::OneType);
    CHECK(solve_trivial(pre).bundles == alloc_of({{0, 1}, {0, 2}}).bundles);

    Preprocessed one_agent = preprocess(raw_of(0, 5, {{"1", "2"}}));
    CHECK(solve_trivial(one_agent).bundles == alloc_of({{0, 5}}).bundles);
}

TEST_CASE("scarce-goods allocation is envy-free and proper on random instances") {
    Rng rng(24);
    int hits = 0;
    for (int i = 0; i < 300; ++i) {
        std::size_t n = rng.one_to(8);
        GenSpec spec;
        spec.n = n;
        spec.m1 = BigInt(rng.one_to(n));
        spec.m2 = BigInt(rng.one_to(n));
        spec.seed = rng.next();
        spec.denom_bound = 5;
        if (spec.m1 + spec.m2 > BigInt(n)) continue;
        ++hits;
        Preprocessed pre = preprocess(generate_instance(spec));
        REQUIRE(pre.path == SolvePath::TooFewItems);
        Allocation alloc = solve_trivial(pre);
        CHECK(oracle_efx(pre.inst, alloc).efx);
        CHECK(is_proper(pre.inst, alloc) == naive_proper(pre.inst, alloc));
        REQUIRE(is_proper(pre.inst, alloc).has_value());
        // the pivot t = m1 always certifies this construction
        std::size_t t = pre.inst.m1.convert_to<std::size_t>() - 1;
        for (std::size_t a = 0; a < t; ++a) CHECK(alloc.bundles[a].x2.is_zero());
        for (std::size_t a = t + 1; a < pre.inst.n; ++a) {
            CHECK(compare(Rational(alloc.bundles[a].x1), pre.inst.v2[t]) < 0);
        }
        CHECK(oracle_pareto(pre.inst, alloc).status == ParetoStatus::Optimal);
    }
    CHECK(hits > 40);
}
