#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include "efxpo/bench.hpp"
#include "efxpo/errors.hpp"
#include "efxpo/generator.hpp"
#include "efxpo/io.hpp"
#include "efxpo/oracle.hpp"
#include "efxpo/solver.hpp"

namespace {

using namespace efxpo;

constexpr int kExitOk = 0;
constexpr int kExitParse = 2;
constexpr int kExitValidation = 3;
constexpr int kExitInternal = 4;
constexpr int kExitBudget = 5;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot read '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw ParseError("cannot write '" + out_path + "'");
    out << text;
}

int run_solve(const std::string& path, const std::string& verify, const std::string& out_path,
              std::uint64_t budget) {
    RawInstance raw = parse_instance(read_file(path));

    auto t0 = std::chrono::steady_clock::now();
    Preprocessed pre = preprocess(raw);
    auto prep_ns = std::chrono::duration_cast<std::chrono::nanoseconds>(
                       std::chrono::steady_clock::now() - t0)
                       .count();
    SolveResult result = solve_prepared(pre);
    result.stats.preprocess_ns = static_cast<std::uint64_t>(prep_ns);
    result.stats.elapsed_ns = result.stats.preprocess_ns + result.stats.search_ns;

    VerificationInfo verification;
    bool budget_hit = false;
    if (verify != "none") {
        Allocation prepared_alloc = map_to_prepared(pre.inst, result.allocation);
        verification.efx = is_efx_dense(pre.inst, prepared_alloc);
        verification.proper = is_proper(pre.inst, prepared_alloc).has_value();
        if (verify == "full") {
            OracleEfxResult oefx = oracle_efx(pre.inst, prepared_alloc);
            if (oefx.efx != *verification.efx) {
                throw InternalInvariantError("envy oracle disagrees with the dense check");
            }
            OracleParetoResult po =
                oracle_pareto(pre.inst, prepared_alloc, EnumBudget{budget});
            switch (po.status) {
                case ParetoStatus::Optimal: verification.oracle_po = "optimal"; break;
                case ParetoStatus::Dominated: verification.oracle_po = "dominated"; break;
                case ParetoStatus::BudgetExceeded:
                    verification.oracle_po = "budget-exceeded";
                    budget_hit = true;
                    break;
            }
        }
        if (!*verification.efx || !*verification.proper ||
            (verification.oracle_po && *verification.oracle_po == "dominated")) {
            emit(serialize_result(make_result_doc(result, verification)), out_path);
            std::cerr << "verification failed on the produced allocation\n";
            return kExitInternal;
        }
    }
    emit(serialize_result(make_result_doc(result, verification)), out_path);
    return budget_hit ? kExitBudget : kExitOk;
}

int run_gen(const GenSpec& spec, bool grid, const std::string& out_path) {
    if (grid) {
        auto instances =
            generate_grid(spec.n, spec.m1, spec.m2, default_grid_ratios());
        std::string out = "[\n";
        for (std::size_t i = 0; i < instances.size(); ++i) {
            std::string doc = serialize_instance(instances[i]);
            if (!doc.empty() && doc.back() == '\n') doc.pop_back();
            out += doc;
            if (i + 1 < instances.size()) out += ",";
            out += "\n";
        }
        out += "]\n";
        emit(out, out_path);
        return kExitOk;
    }
    emit(serialize_instance(generate_instance(spec)), out_path);
    return kExitOk;
}

int run_bench_cmd(const std::string& sizes_text, std::uint64_t reps, std::uint64_t seed,
                  std::uint64_t denom_bound, const std::string& csv_path) {
    auto rows = run_bench(parse_bench_sizes(sizes_text), reps, seed, denom_bound);
    emit(bench_csv(rows), csv_path);
    return kExitOk;
}

int run_oracle(const std::string& path, const std::string& result_path, bool sweep,
               std::uint64_t budget) {
    RawInstance raw = parse_instance(read_file(path));
    Preprocessed pre = preprocess(raw);

    nlohmann::json report;
    bool failed = false;
    bool budget_hit = false;

    Allocation raw_alloc;
    if (result_path.empty()) {
        raw_alloc = solve_prepared(pre).allocation;
    } else {
        // replay a previously written result against this instance
        ResultDoc doc = parse_result(read_file(result_path));
        raw_alloc = doc.allocation;
        if (raw_alloc.agent_count() != raw.agent_count()) {
            throw ValidationError("replayed allocation has the wrong agent count");
        }
        BigInt sum1 = 0, sum2 = 0;
        for (const Bundle& b : raw_alloc.bundles) {
            if (b.x1 < 0 || b.x2 < 0) throw ValidationError("negative count in replay");
            sum1 += b.x1;
            sum2 += b.x2;
        }
        if (sum1 != raw.m1 || sum2 != raw.m2) {
            throw ValidationError("replayed allocation does not sum to the good counts");
        }
    }
    Allocation prepared_alloc = map_to_prepared(pre.inst, raw_alloc);

    OracleEfxResult oefx = oracle_efx(pre.inst, prepared_alloc);
    report["oracle_efx"] = oefx.efx;
    if (oefx.witness) {
        // report in input agent order, 1-based
        report["envy_witness"] = {pre.inst.perm[oefx.witness->first] + 1,
                                  pre.inst.perm[oefx.witness->second] + 1};
    }
    report["proper"] = is_proper(pre.inst, prepared_alloc).has_value();
    failed |= !oefx.efx;
    failed |= !report["proper"].get<bool>();

    OracleParetoResult po = oracle_pareto(pre.inst, prepared_alloc, EnumBudget{budget});
    switch (po.status) {
        case ParetoStatus::Optimal: report["oracle_po"] = "optimal"; break;
        case ParetoStatus::Dominated:
            report["oracle_po"] = "dominated";
            failed = true;
            break;
        case ParetoStatus::BudgetExceeded:
            report["oracle_po"] = "budget-exceeded";
            budget_hit = true;
            break;
    }

    if (sweep) {
        TheoremReport theorems = validate_theorems(raw, EnumBudget{budget});
        nlohmann::json list = nlohmann::json::array();
        for (const TheoremCheck& check : theorems.checks) {
            const char* status = check.status == TheoremCheck::Status::Pass ? "pass"
                                 : check.status == TheoremCheck::Status::Fail ? "fail"
                                                                              : "skipped";
            if (check.status == TheoremCheck::Status::Fail) failed = true;
            if (check.budget_limited) budget_hit = true;
            list.push_back({{"name", check.name},
                            {"status", status},
                            {"detail", check.detail}});
        }
        report["theorems"] = list;
    }

    std::cout << report.dump(2) << "\n";
    if (failed) {
        std::cerr << "oracle check failed\n";
        return kExitInternal;
    }
    return budget_hit ? kExitBudget : kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact EFX+PO allocation solver for two good types"};
    app.require_subcommand(1);

    std::string instance_path, out_path, verify = "fast";
    std::uint64_t budget = EnumBudget{}.max_allocations;

    CLI::App* solve_cmd = app.add_subcommand("solve", "solve an instance file");
    solve_cmd->add_option("file", instance_path, "instance JSON file")->required();
    solve_cmd->add_option("--verify", verify, "none | fast | full")
        ->check(CLI::IsMember({"none", "fast", "full"}));
    solve_cmd->add_option("--out", out_path, "write the result here instead of stdout");
    solve_cmd->add_option("--budget", budget, "allocation cap for --verify full");

    GenSpec spec;
    std::string dist = "uniform-rational";
    std::string m1_text = "1", m2_text = "1";
    CLI::App* gen_cmd = app.add_subcommand("gen", "generate an instance file");
    gen_cmd->add_option("--n", spec.n, "agents")->required();
    gen_cmd->add_option("--m1", m1_text, "type-1 goods")->required();
    gen_cmd->add_option("--m2", m2_text, "type-2 goods")->required();
    gen_cmd->add_option("--dist", dist, "uniform-rational | grid")
        ->check(CLI::IsMember({"uniform-rational", "grid"}));
    gen_cmd->add_option("--seed", spec.seed, "generator seed");
    gen_cmd->add_option("--denom-bound", spec.denom_bound,
                        "numerators and denominators drawn from [1, bound]");
    gen_cmd->add_flag("--adversarial", spec.adversarial,
                      "reject until no split allocation is envy-free");
    gen_cmd->add_option("--out", out_path, "write the instance here instead of stdout");

    std::string sizes_text, csv_path;
    std::uint64_t reps = 3, bench_seed = 1, bench_denom = 1000;
    CLI::App* bench_cmd = app.add_subcommand("bench", "time solve phases over generated sizes");
    bench_cmd->add_option("--sizes", sizes_text, "comma list of n:m1:m2")->required();
    bench_cmd->add_option("--reps", reps, "repetitions per size");
    bench_cmd->add_option("--csv", csv_path, "write CSV here instead of stdout");
    bench_cmd->add_option("--seed", bench_seed, "generator seed");
    bench_cmd->add_option("--denom-bound", bench_denom, "ratio denominator bound");

    bool sweep = false;
    std::string result_path;
    CLI::App* oracle_cmd =
        app.add_subcommand("oracle", "verify a solved instance with the brute-force oracles");
    oracle_cmd->add_option("file", instance_path, "instance JSON file")->required();
    oracle_cmd->add_flag("--sweep-theorems", sweep, "also run the structural property sweep");
    oracle_cmd->add_option("--result", result_path,
                           "verify this result document instead of solving afresh");
    oracle_cmd->add_option("--budget", budget, "allocation cap for exhaustive checks");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*solve_cmd) return run_solve(instance_path, verify, out_path, budget);
        if (*gen_cmd) {
            Rational m1 = parse_rational(m1_text);
            Rational m2 = parse_rational(m2_text);
            if (!m1.is_integer() || !m2.is_integer()) {
                throw ParseError("good counts must be integers");
            }
            spec.m1 = m1.num();
            spec.m2 = m2.num();
            return run_gen(spec, dist == "grid", out_path);
        }
        if (*bench_cmd) return run_bench_cmd(sizes_text, reps, bench_seed, bench_denom, csv_path);
        if (*oracle_cmd) return run_oracle(instance_path, result_path, sweep, budget);
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitParse;
    } catch (const ValidationError& e) {
        std::cerr << "invalid instance: " << e.what() << "\n";
        return kExitValidation;
    } catch (const BudgetExceededError& e) {
        std::cerr << "budget exceeded: " << e.what() << "\n";
        return kExitBudget;
    } catch (const InternalInvariantError& e) {
        std::cerr << "internal invariant failure: " << e.what() << "\n";
        return kExitInternal;
    } catch (const std::exception& e) {
        std::cerr << "unexpected failure: " << e.what() << "\n";
        return kExitInternal;
    }
    return kExitOk;
}
