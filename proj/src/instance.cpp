#include "efxpo/instance.hpp"

#include <algorithm>
#include <limits>

#include "efxpo/errors.hpp"

namespace efxpo {

void validate(const RawInstance& raw) {
    if (raw.agent_count() == 0) {
        throw ValidationError("instance has no agents");
    }
    if (raw.m1 < 0 || raw.m2 < 0) {
        throw ValidationError("negative good count");
    }
    if (raw.m1.is_zero() && raw.m2.is_zero()) {
        throw ValidationError("instance has no goods");
    }
    for (std::size_t i = 0; i < raw.agent_count(); ++i) {
        const auto& [v1, v2] = raw.valuations[i];
        if (!v1.is_positive() || !v2.is_positive()) {
            throw ValidationError("agent " + std::to_string(i + 1) +
                                  " has a nonpositive valuation");
        }
    }
}

void PreparedInstance::assert_restrictions() const {
    auto bad = [](const std::string& what) {
        throw InternalInvariantError("prepared-instance restriction failed: " + what);
    };
    if (n == 0 || v2.size() != n || perm.size() != n) bad("shape");
    for (std::size_t i = 0; i < n; ++i) {
        if (!v2[i].is_positive()) bad("v2 > 0");
        if (i + 1 < n && compare(v2[i], v2[i + 1]) > 0) bad("v2 sorted");
    }
    if (n1 + n2 != n) bad("n1 + n2 = n");
    const Rational one(1);
    if (n1 >= 1 && compare(v2[n1 - 1], one) > 0) bad("v2[n1] <= 1");
    if (n1 < n && compare(v2[n1], one) < 0) bad("v2[n1+1] >= 1");
    if (m1 * BigInt(n2) < m2 * BigInt(n1)) bad("m1/n1 >= m2/n2");
    if (!(m2 > 0)) bad("m2 > 0");
    if (n2 == 0) bad("n2 > 0");
    if (m1 + m2 < BigInt(n)) bad("m1 + m2 >= n");
}

namespace {

bool fits_int64(const BigInt& v) {
    static const BigInt lo = std::numeric_limits<long long>::min();
    static const BigInt hi = std::numeric_limits<long long>::max();
    return v >= lo && v <= hi;
}

struct SortKey {
    long long num = 0;
    long long den = 1;
    bool fits = false;
    std::size_t raw_index = 0;
};

// Exact comparator: int128 cross-multiplication when both ratios fit in
// int64, arbitrary-precision cross-multiplication otherwise.
struct RatioLess {
    const std::vector<Rational>* ratios;
    bool operator()(const SortKey& a, const SortKey& b) const {
        if (a.fits && b.fits) {
            return static_cast<__int128>(a.num) * b.den <
                   static_cast<__int128>(b.num) * a.den;
        }
        return compare((*ratios)[a.raw_index], (*ratios)[b.raw_index]) < 0;
    }
};

// Sorts agents by ratio ascending, stable in the raw order, and fills the
// prepared instance's v2/perm.
void sort_agents(PreparedInstance& out, const std::vector<Rational>& ratios) {
    std::size_t n = ratios.size();
    std::vector<SortKey> keys(n);
    for (std::size_t i = 0; i < n; ++i) {
        keys[i].raw_index = i;
        const Rational& r = ratios[i];
        if (fits_int64(r.num()) && fits_int64(r.den())) {
            keys[i].num = r.num().convert_to<long long>();
            keys[i].den = r.den().convert_to<long long>();
            keys[i].fits = true;
        }
    }
    std::stable_sort(keys.begin(), keys.end(), RatioLess{&ratios});
    out.v2.reserve(n);
    out.perm.reserve(n);
    for (const SortKey& k : keys) {
        out.v2.push_back(ratios[k.raw_index]);
        out.perm.push_back(k.raw_index);
    }
}

// Largest feasible group-1 size in [lo, hi], or n + 1 if none. Feasibility
// (n2 > 0 and m1*n2 >= m2*n1) only relaxes as n1 shrinks, so the first hit
// of a top-down scan is the largest.
std::size_t pick_group_split(std::size_t n, const BigInt& m1, const BigInt& m2,
                             std::size_t lo, std::size_t hi) {
    for (std::size_t n1 = hi + 1; n1-- > lo;) {
        std::size_t n2 = n - n1;
        if (n2 > 0 && m1 * BigInt(n2) >= m2 * BigInt(n1)) return n1;
    }
    return n + 1;
}

}  // namespace

Preprocessed preprocess(const RawInstance& raw) {
    validate(raw);
    const std::size_t n = raw.agent_count();

    std::vector<Rational> ratios;
    ratios.reserve(n);
    for (const auto& [v1, v2] : raw.valuations) {
        ratios.push_back(v2 / v1);
    }

    Preprocessed pre;
    PreparedInstance& inst = pre.inst;
    inst.n = n;

    if (raw.m1.is_zero() || raw.m2.is_zero()) {
        // single good type: orient it as type 2 so one PEA path serves both
        pre.path = SolvePath::OneType;
        inst.swapped = raw.m2.is_zero();
        if (inst.swapped) {
            for (Rational& r : ratios) r = Rational(1) / r;
            inst.m1 = raw.m2;
            inst.m2 = raw.m1;
        } else {
            inst.m1 = raw.m1;
            inst.m2 = raw.m2;
        }
        sort_agents(inst, ratios);
        inst.n1 = 0;
        inst.n2 = n;
        return pre;
    }

    if (raw.m1 + raw.m2 <= BigInt(n)) {
        pre.path = SolvePath::TooFewItems;
        inst.m1 = raw.m1;
        inst.m2 = raw.m2;
        inst.swapped = false;
        sort_agents(inst, ratios);
        const Rational one(1);
        inst.n1 = static_cast<std::size_t>(
            std::count_if(ratios.begin(), ratios.end(),
                          [&](const Rational& r) { return compare(r, one) <= 0; }));
        inst.n2 = n - inst.n1;
        return pre;
    }

    const Rational one(1);
    std::size_t below = 0, equal = 0;
    for (const Rational& r : ratios) {
        int c = compare(r, one);
        if (c < 0) ++below;
        else if (c == 0) ++equal;
    }
    std::size_t above = n - below - equal;

    std::size_t n1 = pick_group_split(n, raw.m1, raw.m2, below, below + equal);
    if (n1 <= n) {
        inst.swapped = false;
        inst.m1 = raw.m1;
        inst.m2 = raw.m2;
    } else {
        n1 = pick_group_split(n, raw.m2, raw.m1, above, above + equal);
        if (n1 > n) {
            throw InternalInvariantError("no feasible group split in either orientation");
        }
        inst.swapped = true;
        inst.m1 = raw.m2;
        inst.m2 = raw.m1;
        for (Rational& r : ratios) r = Rational(1) / r;
    }
    inst.n1 = n1;
    inst.n2 = n - n1;
    sort_agents(inst, ratios);
    inst.assert_restrictions();
    return pre;
}

Allocation map_back(const PreparedInstance& prepared, const Allocation& alloc) {
    if (alloc.agent_count() != prepared.n) {
        throw ValidationError("allocation does not match the instance's agent count");
    }
    Allocation raw;
    raw.bundles.resize(prepared.n);
    for (std::size_t p = 0; p < prepared.n; ++p) {
        const Bundle& b = alloc.bundles[p];
        raw.bundles[prepared.perm[p]] = prepared.swapped ? Bundle{b.x2, b.x1} : b;
    }
    return raw;
}

Allocation map_to_prepared(const PreparedInstance& prepared, const Allocation& alloc) {
    if (alloc.agent_count() != prepared.n) {
        throw ValidationError("allocation does not match the instance's agent count");
    }
    Allocation out;
    out.bundles.resize(prepared.n);
    for (std::size_t p = 0; p < prepared.n; ++p) {
        const Bundle& b = alloc.bundles[prepared.perm[p]];
        out.bundles[p] = prepared.swapped ? Bundle{b.x2, b.x1} : b;
    }
    return out;
}

Allocation solve_trivial(const Preprocessed& pre) {
    const PreparedInstance& inst = pre.inst;
    Allocation alloc;
    alloc.bundles.assign(inst.n, Bundle{0, 0});

    if (pre.path == SolvePath::OneType) {
        // equitable division of the oriented type-2 goods; remainder goes to
        // the agents with the highest ratios
        BigInt q = inst.m2 / BigInt(inst.n);
        BigInt r = inst.m2 % BigInt(inst.n);
        std::size_t cut = inst.n - r.convert_to<std::size_t>();
        for (std::size_t i = 0; i < inst.n; ++i) {
            alloc.bundles[i].x2 = i < cut ? q : q + 1;
        }
        return alloc;
    }

    if (pre.path == SolvePath::TooFewItems) {
        std::size_t take1 = inst.m1.convert_to<std::size_t>();
        std::size_t take2 = inst.m2.convert_to<std::size_t>();
        for (std::size_t i = 0; i < take1; ++i) alloc.bundles[i].x1 = 1;
        for (std::size_t i = inst.n - take2; i < inst.n; ++i) alloc.bundles[i].x2 = 1;
        return alloc;
    }

    throw InternalInvariantError("solve_trivial called on a general instance");
}

}  // namespace efxpo
