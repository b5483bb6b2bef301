#include <pybind11/pybind11.h>

#include <json.hpp>

#include "efxpo/errors.hpp"
#include "efxpo/generator.hpp"
#include "efxpo/io.hpp"
#include "efxpo/oracle.hpp"
#include "efxpo/solver.hpp"

namespace py = pybind11;

namespace {

using namespace efxpo;

std::string solve_json(const std::string& instance_json, const std::string& verify,
                       std::uint64_t budget) {
    RawInstance raw = parse_instance(instance_json);
    Preprocessed pre = preprocess(raw);
    SolveResult result = solve_prepared(pre);

    VerificationInfo verification;
    if (verify != "none") {
        Allocation prepared_alloc = map_to_prepared(pre.inst, result.allocation);
        verification.efx = is_efx_dense(pre.inst, prepared_alloc);
        verification.proper = is_proper(pre.inst, prepared_alloc).has_value();
        if (verify == "full") {
            OracleParetoResult po =
                oracle_pareto(pre.inst, prepared_alloc, EnumBudget{budget});
            verification.oracle_po = po.status == ParetoStatus::Optimal    ? "optimal"
                                     : po.status == ParetoStatus::Dominated ? "dominated"
                                                                            : "budget-exceeded";
        }
    }
    return serialize_result(make_result_doc(result, verification));
}

std::string validate_theorems_json(const std::string& instance_json, std::uint64_t budget) {
    TheoremReport report = validate_theorems(parse_instance(instance_json), EnumBudget{budget});
    nlohmann::json list = nlohmann::json::array();
    for (const TheoremCheck& check : report.checks) {
        const char* status = check.status == TheoremCheck::Status::Pass ? "pass"
                             : check.status == TheoremCheck::Status::Fail ? "fail"
                                                                          : "skipped";
        list.push_back(
            {{"name", check.name}, {"status", status}, {"detail", check.detail}});
    }
    return nlohmann::json{{"theorems", list}, {"violations", report.violations()}}.dump();
}

std::string generate_json(std::size_t n, const std::string& m1, const std::string& m2,
                          std::uint64_t seed, std::uint64_t denom_bound, bool adversarial) {
    GenSpec spec;
    spec.n = n;
    spec.m1 = parse_rational(m1).num();
    spec.m2 = parse_rational(m2).num();
    spec.seed = seed;
    spec.denom_bound = denom_bound;
    spec.adversarial = adversarial;
    return serialize_instance(generate_instance(spec));
}

}  // namespace

PYBIND11_MODULE(_efxpo, m) {
    m.doc() = "exact EFX+PO allocation solver for two good types";
    m.attr("__version__") = "0.1.0";

    py::register_exception<BudgetExceededError>(m, "BudgetExceeded", PyExc_RuntimeError);

    m.def("solve_json", &solve_json, py::arg("instance_json"), py::arg("verify") = "fast",
          py::arg("budget") = EnumBudget{}.max_allocations,
          "Solve an instance document and return the result document.");
    m.def("validate_theorems_json", &validate_theorems_json, py::arg("instance_json"),
          py::arg("budget") = EnumBudget{}.max_allocations,
          "Run the structural property sweep on an instance document.");
    m.def("generate_json", &generate_json, py::arg("n"), py::arg("m1"), py::arg("m2"),
          py::arg("seed") = 1, py::arg("denom_bound") = 10, py::arg("adversarial") = false,
          "Generate an instance document with uniform rational ratios.");
}
