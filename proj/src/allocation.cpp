#include "efxpo/allocation.hpp"

#include <algorithm>

#include "efxpo/errors.hpp"

namespace efxpo {

Rational utility(const PreparedInstance& inst, std::size_t agent, const Bundle& bundle) {
    if (agent >= inst.n) {
        throw ValidationError("agent index out of range");
    }
    const Rational& v = inst.v2[agent];
    return Rational(bundle.x1 * v.den() + bundle.x2 * v.num(), v.den());
}

namespace {

// Envy test scaled by agent i's denominator so everything stays in integers:
// with v2[i] = a/b, agent i envies bundle `other` up to any good iff
//   own.x1*b + own.x2*a + min(present good values) < other.x1*b + other.x2*a.
bool envies_bundle(const Rational& v, const Bundle& own, const Bundle& other) {
    if (other.empty()) return false;
    const BigInt& a = v.num();
    const BigInt& b = v.den();
    BigInt lhs = own.x1 * b + own.x2 * a;
    if (!other.x1.is_zero() && !other.x2.is_zero()) {
        lhs += std::min(a, b);
    } else if (!other.x1.is_zero()) {
        lhs += b;
    } else {
        lhs += a;
    }
    return lhs < other.x1 * b + other.x2 * a;
}

}  // namespace

bool envies_up_to_any(const PreparedInstance& inst, std::size_t i, std::size_t j,
                      const Allocation& alloc) {
    if (i == j || i >= inst.n || j >= inst.n) {
        throw ValidationError("bad agent pair");
    }
    return envies_bundle(inst.v2[i], alloc.bundles[i], alloc.bundles[j]);
}

bool is_efx_dense(const PreparedInstance& inst, const Allocation& alloc) {
    for (std::size_t i = 0; i < inst.n; ++i) {
        const Rational& v = inst.v2[i];
        const Bundle& own = alloc.bundles[i];
        for (std::size_t j = 0; j < inst.n; ++j) {
            if (i == j) continue;
            if (envies_bundle(v, own, alloc.bundles[j])) return false;
        }
    }
    return true;
}

DenseEnvyScan scan_envy_dense(const PreparedInstance& inst, const Allocation& alloc) {
    DenseEnvyScan scan;
    for (std::size_t i = 0; i < inst.n; ++i) {
        const Rational& v = inst.v2[i];
        const Bundle& own = alloc.bundles[i];
        for (std::size_t j = 0; j < inst.n; ++j) {
            if (i == j) continue;
            if (j > i && scan.right) continue;
            if (j < i && scan.left) continue;
            if (envies_bundle(v, own, alloc.bundles[j])) {
                auto& slot = j < i ? scan.left : scan.right;
                if (!slot) slot = EnvyWitness{i, j};
            }
        }
        if (scan.left && scan.right) break;
    }
    return scan;
}

namespace {

EnvyVerdict verdict_from(const std::optional<EnvyWitness>& left,
                         const std::optional<EnvyWitness>& right) {
    if (left && right) {
        throw InternalInvariantError("split allocation envious in both directions");
    }
    if (left) return {EnvyKind::LeftEnvious, left};
    if (right) return {EnvyKind::RightEnvious, right};
    return {EnvyKind::Efx, std::nullopt};
}

}  // namespace

EnvyVerdict classify_dense(const PreparedInstance& inst, const Allocation& alloc) {
    DenseEnvyScan scan = scan_envy_dense(inst, alloc);
    return verdict_from(scan.left, scan.right);
}

EnvyVerdict classify_segmented(const PreparedInstance& inst, const SegmentedAllocation& seg) {
    std::optional<EnvyWitness> left, right;
    auto note = [&](std::size_t i, std::size_t j) {
        auto& slot = j < i ? left : right;
        if (!slot || *slot > EnvyWitness{i, j}) slot = EnvyWitness{i, j};
    };
    for (const Segment& home : seg.segments) {
        for (std::size_t rep : {home.lo, home.hi}) {
            const Rational& v = inst.v2[rep];
            for (const Segment& target : seg.segments) {
                // a target segment is entirely on one side of rep; its lowest
                // index is the smallest witness it can contribute
                if (target.lo == home.lo) continue;
                if (envies_bundle(v, home.bundle, target.bundle)) {
                    note(rep, target.lo);
                }
            }
            if (home.lo == home.hi) break;
        }
    }
    return verdict_from(left, right);
}

std::optional<std::size_t> is_proper(const PreparedInstance& inst, const Allocation& alloc) {
    const std::size_t n = inst.n;
    if (alloc.agent_count() != n) {
        throw ValidationError("allocation does not match the instance's agent count");
    }
    // pivot t must satisfy: x_{i,2} == 0 for all i < t, so t cannot exceed the
    // first agent holding type-2 goods; and max_{i > t} x_{i,1} < v2[t]
    std::size_t first_x2 = n;
    for (std::size_t i = 0; i < n; ++i) {
        if (!alloc.bundles[i].x2.is_zero()) {
            first_x2 = i;
            break;
        }
    }
    std::vector<const BigInt*> suffix_max(n + 1, nullptr);
    for (std::size_t i = n; i-- > 0;) {
        const BigInt* below = suffix_max[i + 1];
        const BigInt& here = alloc.bundles[i].x1;
        suffix_max[i] = (below == nullptr || here > *below) ? &here : below;
    }
    std::size_t last_candidate = std::min(first_x2, n - 1);
    for (std::size_t t = 0; t <= last_candidate; ++t) {
        const BigInt* tail = suffix_max[t + 1];
        const Rational& v = inst.v2[t];
        if (tail == nullptr || *tail * v.den() < v.num()) {
            return t;
        }
    }
    return std::nullopt;
}

Allocation to_dense(const SegmentedAllocation& seg) {
    Allocation alloc;
    alloc.bundles.resize(seg.n);
    for (const Segment& s : seg.segments) {
        for (std::size_t i = s.lo; i <= s.hi; ++i) {
            alloc.bundles[i] = s.bundle;
        }
    }
    return alloc;
}

SegmentedAllocation to_segmented(const Allocation& alloc) {
    SegmentedAllocation seg;
    seg.n = alloc.agent_count();
    for (std::size_t i = 0; i < seg.n; ++i) {
        if (!seg.segments.empty() && seg.segments.back().bundle == alloc.bundles[i]) {
            seg.segments.back().hi = i;
        } else {
            seg.segments.push_back({i, i, alloc.bundles[i]});
        }
    }
    return seg;
}

}  // namespace efxpo
