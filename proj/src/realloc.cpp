#include "efxpo/realloc.hpp"

#include "efxpo/errors.hpp"

namespace efxpo {

ReallocIndex make_realloc_index(const PreparedInstance& inst, const SplitIndex& idx) {
    if (idx.t + 1 >= inst.n) {
        throw ValidationError("reallocation needs a pivot before the last agent");
    }
    SplitDerived d = derive_split(inst, idx);
    ReallocIndex r;
    r.t = idx.t;
    r.k = idx.k;
    r.d = d.q2;
    r.p = d.p;
    r.ell = inst.n - 1 - d.r2.convert_to<std::size_t>();
    return r;
}

namespace {

BigInt head_share(const PreparedInstance& inst, const ReallocIndex& idx) {
    return ceil_mul(idx.d, inst.v2[idx.t]);  // type-1 goods per agent before the pivot
}

}  // namespace

bool realloc_precondition_holds(const PreparedInstance& inst, const ReallocIndex& idx) {
    return inst.m1 >= head_share(inst, idx) * BigInt(idx.t + 1) - idx.p;
}

bool realloc_lower_bound_holds(const PreparedInstance& inst, const ReallocIndex& idx) {
    return head_share(inst, idx) * BigInt(idx.t + 1) - idx.p + 1 <= inst.m1;
}

bool realloc_upper_bound_holds(const PreparedInstance& inst, const ReallocIndex& idx) {
    BigInt cap = head_share(inst, idx) * BigInt(idx.t + 1) - ceil_mul(idx.k - 1, inst.v2[idx.t]);
    return inst.m1 <= cap;
}

SegmentedAllocation build_realloc(const PreparedInstance& inst, const ReallocIndex& idx) {
    if (!realloc_precondition_holds(inst, idx)) {
        throw InternalInvariantError("reallocation built outside its precondition");
    }
    const std::size_t t = idx.t;
    const std::size_t n = inst.n;
    const Rational& v = inst.v2[t];
    const BigInt share = head_share(inst, idx);
    if (share < idx.p) {
        // impossible while d >= k, which every valid split index guarantees
        throw InternalInvariantError("reallocation pivot share negative");
    }

    // type-2 goods exactly as in the underlying split allocation
    std::vector<PeaPiece> x2;
    x2.push_back({t, t, idx.k});
    {
        std::size_t r2 = n - 1 - idx.ell;
        if (r2 == 0) {
            x2.push_back({t + 1, n - 1, idx.d});
        } else {
            x2.push_back({t + 1, n - 1 - r2, idx.d});
            x2.push_back({n - r2, n - 1, idx.d + 1});
        }
    }

    std::vector<PeaPiece> x1;
    if (t >= 1) x1.push_back({0, t - 1, share});
    if (share != idx.p) x1.push_back({t, t, share - idx.p});

    BigInt rest = inst.m1 - share * BigInt(t + 1) + idx.p;
    if (rest > 0) {
        // the pivot joins the remainder round in index order only when
        // share - p strictly exceeds (d - k) * v; ties send it to the back
        bool pivot_in_place = (share - idx.p) * v.den() > (idx.d - idx.k) * v.num();
        std::vector<std::pair<std::size_t, std::size_t>> order;
        if (pivot_in_place) {
            order.push_back({0, idx.ell});
        } else {
            if (t >= 1) order.push_back({0, t - 1});
            order.push_back({t + 1, idx.ell});
            order.push_back({t, t});
        }
        auto extra = pea_over_ranges(rest, order);
        x1.insert(x1.end(), extra.begin(), extra.end());
    }

    SegmentedAllocation seg = assemble_pieces(n, x1, x2);

    auto bad = [](const std::string& what) {
        throw InternalInvariantError("reallocation invariant failed: " + what);
    };
    if (seg.segments.size() > 6) bad("more than 6 segments");
    BigInt sum1 = 0, sum2 = 0;
    for (const Segment& s : seg.segments) {
        BigInt len(s.hi - s.lo + 1);
        sum1 += s.bundle.x1 * len;
        sum2 += s.bundle.x2 * len;
    }
    if (sum1 != inst.m1 || sum2 != inst.m2) bad("good counts not conserved");
    return seg;
}

}  // namespace efxpo
