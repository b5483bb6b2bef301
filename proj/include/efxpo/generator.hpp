#pragma once

#include <cstdint>
#include <vector>

#include "efxpo/instance.hpp"

namespace efxpo {

/// Deterministic 64-bit generator (splitmix64). Drawing is done with
/// rejection sampling so the stream is identical on every platform.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}
    std::uint64_t next();
    /// Uniform in [1, bound].
    std::uint64_t one_to(std::uint64_t bound);

private:
    std::uint64_t state_;
};

struct GenSpec {
    std::size_t n = 2;
    BigInt m1 = 1;
    BigInt m2 = 1;
    std::uint64_t seed = 1;
    std::uint64_t denom_bound = 10;
    /// Reject instances until one has no envy-free split allocation, so the
    /// reallocation endgame is exercised. Needs a small n to stay cheap.
    bool adversarial = false;
};

/// v1 = 1 and v2 = a/b with a, b uniform in [1, denom_bound]. Byte-identical
/// output for identical parameters.
RawInstance generate_instance(const GenSpec& spec);

/// Every combination of per-agent ratios from `ratios` (n-fold product),
/// paired with the given good counts.
std::vector<RawInstance> generate_grid(std::size_t n, const BigInt& m1, const BigInt& m2,
                                       const std::vector<Rational>& ratios);

/// The default 5-point ratio set used by grid generation.
const std::vector<Rational>& default_grid_ratios();

}  // namespace efxpo
