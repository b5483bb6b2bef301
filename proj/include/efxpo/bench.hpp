#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "efxpo/instance.hpp"

namespace efxpo {

struct BenchSize {
    std::size_t n;
    BigInt m1;
    BigInt m2;
};

struct BenchRow {
    BenchSize size;
    std::uint64_t reps = 0;
    std::uint64_t preprocess_ns_median = 0;  // sort-dominated phase
    std::uint64_t search_ns_median = 0;      // logarithmic phase
    std::uint64_t split_builds = 0;
    std::uint64_t classifier_calls = 0;
};

/// Times the two solve phases separately on generated instances; one
/// instance per (size, rep), seeds derived from `seed`.
std::vector<BenchRow> run_bench(const std::vector<BenchSize>& sizes, std::uint64_t reps,
                                std::uint64_t seed, std::uint64_t denom_bound);

/// Header line plus one line per row.
std::string bench_csv(const std::vector<BenchRow>& rows);

/// "n:m1:m2[,n:m1:m2...]" -> sizes. Throws ParseError on malformed text.
std::vector<BenchSize> parse_bench_sizes(const std::string& text);

}  // namespace efxpo
