#pragma once

#include <optional>
#include <string>

#include "efxpo/instance.hpp"
#include "efxpo/solver.hpp"

namespace efxpo {

/// Instance document:
///   { "m1": <count>, "m2": <count>,
///     "agents": [ { "v1": <value>, "v2": <value> }, ... ] }
/// Values are integral JSON numbers or strings "a", "a/b", "a.b"; counts are
/// integral JSON numbers or digit strings. Non-integral JSON numbers are
/// rejected so no binary float ever enters the exact pipeline.
RawInstance parse_instance(const std::string& text);
std::string serialize_instance(const RawInstance& raw);

struct VerificationInfo {
    std::optional<bool> efx;
    std::optional<bool> proper;
    std::optional<std::string> oracle_po;  // "optimal" | "dominated" | "budget-exceeded"
};

/// Result document:
///   { "allocation": [ { "x1": <count>, "x2": <count> }, ... ],
///     "certificate": { "kind": "split" | "realloc" | "trivial-too-few-items"
///                            | "trivial-one-type",
///                      "t": <agent, 1-based> | null, "k": <count> | null,
///                      "proper_witness": <agent, 1-based> | null },
///     "verification": { "efx": bool | null, "proper": bool | null,
///                       "oracle_po": string | null },
///     "stats": { "split_builds": n, "classifier_calls": n, "elapsed_ns": n } }
struct ResultDoc {
    Allocation allocation;
    Certificate certificate;
    VerificationInfo verification;
    SolveStats stats;
};

std::string serialize_result(const ResultDoc& doc);
ResultDoc parse_result(const std::string& text);

ResultDoc make_result_doc(const SolveResult& result, const VerificationInfo& verification);

}  // namespace efxpo
