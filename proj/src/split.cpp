#include "efxpo/split.hpp"

#include <algorithm>

#include "efxpo/errors.hpp"

namespace efxpo {

bool split_precedes(const SplitIndex& a, const SplitIndex& b) {
    if (a.t != b.t) return a.t < b.t;
    return a.k > b.k;
}

bool t_set_contains(const PreparedInstance& inst, std::size_t t, const BigInt& k) {
    if (t >= inst.n) return false;
    if (t == inst.n - 1) return k == inst.m2;
    if (k < 1) return false;
    if (compare(inst.v2[t], Rational(1)) < 0) return false;
    return k * BigInt(inst.n - t) <= inst.m2;  // k <= m2 / (n - t + 1), 1-based
}

SplitIndex minimum_split_index(const PreparedInstance& inst) {
    const Rational one(1);
    auto it = std::lower_bound(inst.v2.begin(), inst.v2.end(), one,
                               [](const Rational& x, const Rational& v) {
                                   return compare(x, v) < 0;
                               });
    std::size_t t = static_cast<std::size_t>(it - inst.v2.begin());
    if (inst.m2 < BigInt(inst.n)) {
        // 1-based floor n - m2 + 1: pivots below it leave too few type-2 goods
        std::size_t floor_t = inst.n - inst.m2.convert_to<std::size_t>();
        t = std::max(t, floor_t);
    }
    if (t + 1 < inst.n) {
        BigInt k = inst.m2 / BigInt(inst.n - t);
        if (t_set_contains(inst, t, k)) {
            return {t, k};
        }
    }
    return maximum_split_index(inst);
}

SplitIndex maximum_split_index(const PreparedInstance& inst) {
    return {inst.n - 1, inst.m2};
}

SplitDerived derive_split(const PreparedInstance& inst, const SplitIndex& idx) {
    if (!t_set_contains(inst, idx.t, idx.k)) {
        throw ValidationError("split index outside the valid set");
    }
    SplitDerived d;
    d.p = ceil_mul(idx.k, inst.v2[idx.t]);
    if (idx.t + 1 < inst.n) {
        d.has_tail = true;
        BigInt tail_agents(inst.n - 1 - idx.t);
        d.q2 = (inst.m2 - idx.k) / tail_agents;
        d.r2 = (inst.m2 - idx.k) % tail_agents;
    }
    BigInt head(idx.t);
    d.case_b = inst.m1 >= d.p * head;
    if (d.case_b) {
        BigInt rest = inst.m1 - d.p * head;
        d.q1 = rest / BigInt(idx.t + 1);
        d.r1 = rest % BigInt(idx.t + 1);
    } else {
        d.q1 = inst.m1 / head;
        d.r1 = inst.m1 % head;
    }
    return d;
}

std::vector<PeaPiece> pea_over_ranges(
    const BigInt& q, const std::vector<std::pair<std::size_t, std::size_t>>& ranges) {
    std::size_t total = 0;
    for (const auto& [lo, hi] : ranges) {
        if (hi < lo) throw ValidationError("bad agent range");
        total += hi - lo + 1;
    }
    if (total == 0) throw ValidationError("equitable share over an empty agent sequence");
    if (q < 0) throw ValidationError("negative good count");

    BigInt base = q / BigInt(total);
    std::size_t remainder = BigInt(q % BigInt(total)).convert_to<std::size_t>();
    std::size_t ceil_from = total - remainder;  // sequence position of the first +1 share

    std::vector<PeaPiece> pieces;
    std::size_t pos = 0;
    for (const auto& [lo, hi] : ranges) {
        std::size_t len = hi - lo + 1;
        if (pos + len <= ceil_from) {
            pieces.push_back({lo, hi, base});
        } else if (pos >= ceil_from) {
            pieces.push_back({lo, hi, base + 1});
        } else {
            std::size_t split_at = lo + (ceil_from - pos);  // first index with the larger share
            pieces.push_back({lo, split_at - 1, base});
            pieces.push_back({split_at, hi, base + 1});
        }
        pos += len;
    }
    return pieces;
}

SegmentedAllocation assemble_pieces(std::size_t n, const std::vector<PeaPiece>& x1_pieces,
                                    const std::vector<PeaPiece>& x2_pieces) {
    std::vector<std::size_t> cuts;
    cuts.push_back(0);
    cuts.push_back(n);
    for (const auto* pieces : {&x1_pieces, &x2_pieces}) {
        for (const PeaPiece& p : *pieces) {
            cuts.push_back(p.lo);
            cuts.push_back(p.hi + 1);
        }
    }
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

    SegmentedAllocation seg;
    seg.n = n;
    for (std::size_t c = 0; c + 1 < cuts.size(); ++c) {
        std::size_t lo = cuts[c];
        std::size_t hi = cuts[c + 1] - 1;
        Bundle b{0, 0};
        for (const PeaPiece& p : x1_pieces) {
            if (p.lo <= lo && lo <= p.hi) b.x1 += p.amount;
        }
        for (const PeaPiece& p : x2_pieces) {
            if (p.lo <= lo && lo <= p.hi) b.x2 += p.amount;
        }
        if (!seg.segments.empty() && seg.segments.back().bundle == b) {
            seg.segments.back().hi = hi;
        } else {
            seg.segments.push_back({lo, hi, b});
        }
    }
    return seg;
}

namespace {

void check_split_invariants(const PreparedInstance& inst, const SplitIndex& idx,
                            const SplitDerived& d, const SegmentedAllocation& seg) {
    auto bad = [](const std::string& what) {
        throw InternalInvariantError("split construction invariant failed: " + what);
    };
    if (seg.segments.size() > 5) bad("more than 5 segments");
    BigInt sum1 = 0, sum2 = 0;
    for (const Segment& s : seg.segments) {
        BigInt len(s.hi - s.lo + 1);
        sum1 += s.bundle.x1 * len;
        sum2 += s.bundle.x2 * len;
        if (s.hi < idx.t && !s.bundle.x2.is_zero()) bad("type-2 goods before the pivot");
        if (s.lo > idx.t && !s.bundle.x1.is_zero()) bad("type-1 goods after the pivot");
    }
    if (sum1 != inst.m1 || sum2 != inst.m2) bad("good counts not conserved");
    if (d.has_tail && d.q2 < idx.k) bad("tail agents hold fewer type-2 goods than the pivot");
}

}  // namespace

SegmentedAllocation build_split(const PreparedInstance& inst, const SplitIndex& idx) {
    SplitDerived d = derive_split(inst, idx);
    const std::size_t t = idx.t;
    const std::size_t n = inst.n;

    std::vector<PeaPiece> x2;
    x2.push_back({t, t, idx.k});
    if (d.has_tail) {
        std::size_t r2 = d.r2.convert_to<std::size_t>();
        if (r2 == 0) {
            x2.push_back({t + 1, n - 1, d.q2});
        } else {
            if (t + 1 <= n - 1 - r2) x2.push_back({t + 1, n - 1 - r2, d.q2});
            x2.push_back({n - r2, n - 1, d.q2 + 1});
        }
    }

    std::vector<PeaPiece> x1;
    std::size_t r1 = d.r1.convert_to<std::size_t>();
    if (d.case_b) {
        if (t >= 1) {
            std::size_t head_ceiling = std::min(t - r1, t - 1);  // last plain p+q1 index
            x1.push_back({0, head_ceiling, d.p + d.q1});
            if (r1 >= 2) x1.push_back({t - r1 + 1, t - 1, d.p + d.q1 + 1});
        }
        x1.push_back({t, t, r1 > 0 ? d.q1 + 1 : d.q1});
    } else {
        // case (a): every type-1 good sits strictly before the pivot
        if (r1 < t) x1.push_back({0, t - 1 - r1, d.q1});
        if (r1 > 0) x1.push_back({t - r1, t - 1, d.q1 + 1});
    }

    SegmentedAllocation seg = assemble_pieces(n, x1, x2);

    SegmentedAllocation via_pea = build_split_pea_sum(inst, idx);
    if (seg.segments.size() != via_pea.segments.size() ||
        !std::equal(seg.segments.begin(), seg.segments.end(), via_pea.segments.begin(),
                    [](const Segment& a, const Segment& b) {
                        return a.lo == b.lo && a.hi == b.hi && a.bundle == b.bundle;
                    })) {
        throw InternalInvariantError("numerical and equitable-share split forms disagree");
    }
    check_split_invariants(inst, idx, d, seg);
    return seg;
}

SegmentedAllocation build_split_pea_sum(const PreparedInstance& inst, const SplitIndex& idx) {
    if (!t_set_contains(inst, idx.t, idx.k)) {
        throw ValidationError("split index outside the valid set");
    }
    const std::size_t t = idx.t;
    const std::size_t n = inst.n;
    const BigInt p = ceil_mul(idx.k, inst.v2[t]);
    const BigInt head_cap = p * BigInt(t);

    std::vector<PeaPiece> x2;
    x2.push_back({t, t, idx.k});
    if (t + 1 < n) {
        auto tail = pea_over_ranges(inst.m2 - idx.k, {{t + 1, n - 1}});
        x2.insert(x2.end(), tail.begin(), tail.end());
    }

    std::vector<PeaPiece> x1;
    if (t >= 1) {
        auto head = pea_over_ranges(std::min(inst.m1, head_cap), {{0, t - 1}});
        x1.insert(x1.end(), head.begin(), head.end());
    }
    if (inst.m1 > head_cap) {
        auto rest = pea_over_ranges(inst.m1 - head_cap, {{0, t}});
        x1.insert(x1.end(), rest.begin(), rest.end());
    }
    return assemble_pieces(n, x1, x2);
}

EnvyVerdict classify_split(const PreparedInstance& inst, const SplitIndex& idx) {
    return classify_segmented(inst, build_split(inst, idx));
}

}  // namespace efxpo
