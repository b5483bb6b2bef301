#pragma once

#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "efxpo/allocation.hpp"
#include "efxpo/generator.hpp"
#include "efxpo/instance.hpp"
#include "efxpo/rational.hpp"

namespace efxpo::test {

inline RawInstance raw_of(long long m1, long long m2,
                          std::vector<std::pair<std::string, std::string>> vals) {
    RawInstance raw;
    raw.m1 = m1;
    raw.m2 = m2;
    for (auto& [v1, v2] : vals) {
        raw.valuations.emplace_back(parse_rational(v1), parse_rational(v2));
    }
    return raw;
}

inline RawInstance intro_instance() {
    return raw_of(2, 2, {{"1", "10"}, {"1", "9"}});
}

// Prepared view with the given sorted ratios, identity permutation, no swap.
// For unit-level operations; restrictions are not enforced here.
inline PreparedInstance prepared_of(std::vector<std::string> v2, long long m1, long long m2) {
    PreparedInstance inst;
    inst.n = v2.size();
    inst.m1 = m1;
    inst.m2 = m2;
    for (const std::string& v : v2) inst.v2.push_back(parse_rational(v));
    const Rational one(1);
    for (const Rational& r : inst.v2) {
        if (compare(r, one) <= 0) ++inst.n1;
    }
    inst.n2 = inst.n - inst.n1;
    inst.perm.resize(inst.n);
    std::iota(inst.perm.begin(), inst.perm.end(), std::size_t{0});
    return inst;
}

inline Allocation alloc_of(std::vector<std::pair<long long, long long>> rows) {
    Allocation alloc;
    for (auto& [x1, x2] : rows) alloc.bundles.push_back({BigInt(x1), BigInt(x2)});
    return alloc;
}

// Second, independent coding of the proper-allocation definition: plain
// double loop with Rational comparisons.
inline std::optional<std::size_t> naive_proper(const PreparedInstance& inst,
                                               const Allocation& alloc) {
    for (std::size_t t = 0; t < inst.n; ++t) {
        bool ok = true;
        for (std::size_t i = 0; i < t && ok; ++i) {
            if (!alloc.bundles[i].x2.is_zero()) ok = false;
        }
        for (std::size_t i = t + 1; i < inst.n && ok; ++i) {
            if (compare(Rational(alloc.bundles[i].x1), inst.v2[t]) >= 0) ok = false;
        }
        if (ok) return t;
    }
    return std::nullopt;
}

// Random raw instance on a small box, uniform ratios a/b <= denom_bound.
inline RawInstance random_instance(Rng& rng, std::size_t max_n, std::uint64_t max_m,
                                   std::uint64_t denom_bound) {
    GenSpec spec;
    spec.n = rng.one_to(max_n);
    spec.m1 = BigInt(rng.one_to(max_m));
    spec.m2 = BigInt(rng.one_to(max_m));
    spec.seed = rng.next();
    spec.denom_bound = denom_bound;
    return generate_instance(spec);
}

}  // namespace efxpo::test
