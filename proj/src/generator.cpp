#include "efxpo/generator.hpp"

#include "efxpo/errors.hpp"
#include "efxpo/solver.hpp"

namespace efxpo {

std::uint64_t Rng::next() {
    state_ += 0x9E3779B97F4A7C15ull;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

std::uint64_t Rng::one_to(std::uint64_t bound) {
    if (bound == 0) throw ValidationError("empty draw range");
    std::uint64_t threshold = (0 - bound) % bound;  // 2^64 mod bound
    for (;;) {
        std::uint64_t r = next();
        if (r >= threshold) return 1 + r % bound;
    }
}

namespace {

RawInstance draw(const GenSpec& spec, Rng& rng) {
    RawInstance raw;
    raw.m1 = spec.m1;
    raw.m2 = spec.m2;
    raw.valuations.reserve(spec.n);
    for (std::size_t i = 0; i < spec.n; ++i) {
        BigInt a(rng.one_to(spec.denom_bound));
        BigInt b(rng.one_to(spec.denom_bound));
        raw.valuations.emplace_back(Rational(1), Rational(a, b));
    }
    return raw;
}

bool forces_reallocation(const RawInstance& raw) {
    Preprocessed pre = preprocess(raw);
    if (pre.path != SolvePath::General) return false;
    ScanResult scan = scan_T(pre.inst, 50000);
    for (const ScanEntry& entry : scan.entries) {
        if (entry.verdict.kind == EnvyKind::Efx) return false;
    }
    return !scan.flips.empty();
}

}  // namespace

RawInstance generate_instance(const GenSpec& spec) {
    if (spec.n == 0) throw ValidationError("generator needs at least one agent");
    if (spec.denom_bound == 0) throw ValidationError("denominator bound must be positive");
    if (spec.m1 < 0 || spec.m2 < 0 || (spec.m1.is_zero() && spec.m2.is_zero())) {
        throw ValidationError("generator needs nonnegative good counts, at least one positive");
    }
    Rng rng(spec.seed);
    if (!spec.adversarial) {
        return draw(spec, rng);
    }
    constexpr int kMaxAttempts = 200000;
    for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
        RawInstance raw = draw(spec, rng);
        if (forces_reallocation(raw)) return raw;
    }
    throw ValidationError("no adversarial instance found for these parameters");
}

std::vector<RawInstance> generate_grid(std::size_t n, const BigInt& m1, const BigInt& m2,
                                       const std::vector<Rational>& ratios) {
    if (n == 0 || ratios.empty()) throw ValidationError("empty grid");
    std::vector<RawInstance> out;
    std::vector<std::size_t> pick(n, 0);
    for (;;) {
        RawInstance raw;
        raw.m1 = m1;
        raw.m2 = m2;
        for (std::size_t i = 0; i < n; ++i) {
            raw.valuations.emplace_back(Rational(1), ratios[pick[i]]);
        }
        out.push_back(std::move(raw));
        std::size_t pos = 0;
        while (pos < n && ++pick[pos] == ratios.size()) {
            pick[pos] = 0;
            ++pos;
        }
        if (pos == n) break;
    }
    return out;
}

const std::vector<Rational>& default_grid_ratios() {
    static const std::vector<Rational> ratios = {
        Rational(1, 3), Rational(1, 2), Rational(1), Rational(2), Rational(3)};
    return ratios;
}

}  // namespace efxpo
