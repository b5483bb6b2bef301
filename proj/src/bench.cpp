#include "efxpo/bench.hpp"

#include <algorithm>
#include <sstream>

#include "efxpo/errors.hpp"
#include "efxpo/generator.hpp"
#include "efxpo/solver.hpp"

namespace efxpo {

namespace {

std::uint64_t median(std::vector<std::uint64_t> xs) {
    std::sort(xs.begin(), xs.end());
    return xs[xs.size() / 2];
}

}  // namespace

std::vector<BenchRow> run_bench(const std::vector<BenchSize>& sizes, std::uint64_t reps,
                                std::uint64_t seed, std::uint64_t denom_bound) {
    if (reps == 0) throw ValidationError("reps must be positive");
    std::vector<BenchRow> rows;
    std::uint64_t draw = 0;
    for (const BenchSize& size : sizes) {
        BenchRow row;
        row.size = size;
        row.reps = reps;
        std::vector<std::uint64_t> prep_ns, search_ns;
        for (std::uint64_t rep = 0; rep < reps; ++rep) {
            GenSpec spec;
            spec.n = size.n;
            spec.m1 = size.m1;
            spec.m2 = size.m2;
            spec.seed = seed + ++draw;
            spec.denom_bound = denom_bound;
            RawInstance raw = generate_instance(spec);
            SolveResult result = solve(raw);
            prep_ns.push_back(result.stats.preprocess_ns);
            search_ns.push_back(result.stats.search_ns);
            row.split_builds = std::max(row.split_builds, result.stats.split_builds);
            row.classifier_calls =
                std::max(row.classifier_calls, result.stats.classifier_calls);
        }
        row.preprocess_ns_median = median(prep_ns);
        row.search_ns_median = median(search_ns);
        rows.push_back(row);
    }
    return rows;
}

std::string bench_csv(const std::vector<BenchRow>& rows) {
    std::ostringstream out;
    out << "n,m1,m2,reps,preprocess_ns_median,search_ns_median,"
           "split_builds_max,classifier_calls_max\n";
    for (const BenchRow& r : rows) {
        out << r.size.n << "," << r.size.m1 << "," << r.size.m2 << "," << r.reps << ","
            << r.preprocess_ns_median << "," << r.search_ns_median << ","
            << r.split_builds << "," << r.classifier_calls << "\n";
    }
    return out.str();
}

std::vector<BenchSize> parse_bench_sizes(const std::string& text) {
    std::vector<BenchSize> sizes;
    std::istringstream stream(text);
    std::string item;
    while (std::getline(stream, item, ',')) {
        std::istringstream fields(item);
        std::string n_str, m1_str, m2_str;
        if (!std::getline(fields, n_str, ':') || !std::getline(fields, m1_str, ':') ||
            !std::getline(fields, m2_str)) {
            throw ParseError("bench size must look like n:m1:m2, got '" + item + "'");
        }
        try {
            Rational n = parse_rational(n_str);
            Rational m1 = parse_rational(m1_str);
            Rational m2 = parse_rational(m2_str);
            if (!n.is_integer() || !m1.is_integer() || !m2.is_integer() || !n.is_positive()) {
                throw ParseError("bench sizes must be integers with n >= 1");
            }
            sizes.push_back({n.num().convert_to<std::size_t>(), m1.num(), m2.num()});
        } catch (const ParseError&) {
            throw;
        }
    }
    if (sizes.empty()) throw ParseError("no bench sizes given");
    return sizes;
}

}  // namespace efxpo
