#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "lincnf/classify.hpp"
#include "lincnf/formula.hpp"
#include "lincnf/identities.hpp"
#include "lincnf/solve.hpp"

namespace lincnf {

nlohmann::json to_json(const FormulaStats& s);
nlohmann::json to_json(const ClassReport& r);
nlohmann::json to_json(const IdentityReport& r);
nlohmann::json to_json(const PrescreenResult& r);
nlohmann::json to_json(const SizeParameters& p);
nlohmann::json to_json(const XsatResult& r, const Formula& f);

struct AnalyzeOptions {
    std::optional<std::int64_t> max_disjointedness;
    std::optional<Rational> max_mean_disjointedness;
};

// The full analysis document: {"m","n","stats","classes","identities",
// "prescreen","bounds"}. Identity checks run only where their
// preconditions hold; skipped sections say why.
nlohmann::json analysis_report(const Formula& f, const AnalyzeOptions& options = {});

// True iff some identity check in the report ran and failed (which would
// be an implementation bug, never a property of valid input).
bool report_has_identity_violation(const nlohmann::json& report);

// DIMACS-style model line: "v 1 -2 3 0", every universe variable signed.
std::string model_v_line(const Formula& f, const Assignment& a);

}  // namespace lincnf
