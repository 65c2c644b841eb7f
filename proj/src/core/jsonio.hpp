#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "account.hpp"
#include "config.hpp"
#include "pipeline.hpp"
#include "verify.hpp"

namespace rs2 {

// JSON shapes are part of the tool's external contract; field names here are
// frozen. See the README for the schemas.

nlohmann::json phase_trace_to_json(const PhaseTrace& t);
nlohmann::json account_to_json(const AccountInfo& info);
nlohmann::json violation_to_json(const BudgetViolation& v);
nlohmann::json lemma_to_json(const LemmaReport& r);
nlohmann::json lemmas_to_json(const std::vector<LemmaReport>& rs);

// Full run result: {"schema": 1, "n", "ruling_size", "ruling", "witness",
// "trace", "budget_violations", "account", "reduction_steps"}.
nlohmann::json result_to_json(const RunResult& r);

}  // namespace rs2
