#include "jsonio.hpp"

namespace rs2 {

using nlohmann::json;

json phase_trace_to_json(const PhaseTrace& t) {
    return json{
        {"phase", t.phase},
        {"sub_nodes", t.sub_nodes},
        {"sub_edges", t.sub_edges},
        {"luby_iters", t.luby_iters},
        {"newly_covered", t.newly_covered},
        {"passes", t.passes},
        {"rounds", t.rounds},
        {"peak_words", t.peak_words},
    };
}

json account_to_json(const AccountInfo& info) {
    if (info.model == CostModel::none) return nullptr;
    json j;
    if (info.model == CostModel::stream) {
        j["model"] = "stream";
        j["passes"] = info.passes;
    } else {
        j["model"] = "clique";
        j["rounds"] = info.rounds;
        j["max_message_words"] = info.max_message_words;
    }
    j["peak_words"] = info.peak_words;
    j["labels"] = info.pass_labels;
    return j;
}

json violation_to_json(const BudgetViolation& v) {
    return json{
        {"phase", v.phase},
        {"kind", v.kind},
        {"observed", v.observed},
        {"budget", v.budget},
    };
}

json lemma_to_json(const LemmaReport& r) {
    json j{
        {"lemma", r.lemma},
        {"measured", r.measured},
        {"bound", r.bound},
        {"seed", r.seed},
    };
    j["d"] = r.d ? json(*r.d) : json(nullptr);
    switch (r.status) {
        case LemmaReport::Status::pass: j["status"] = "pass"; break;
        case LemmaReport::Status::fail: j["status"] = "fail"; break;
        case LemmaReport::Status::vacuous: j["status"] = "vacuous"; break;
    }
    return j;
}

json lemmas_to_json(const std::vector<LemmaReport>& rs) {
    json arr = json::array();
    for (const auto& r : rs) arr.push_back(lemma_to_json(r));
    return arr;
}

json result_to_json(const RunResult& r) {
    json trace = json::array();
    for (const auto& t : r.trace) trace.push_back(phase_trace_to_json(t));
    json violations = json::array();
    for (const auto& v : r.violations) violations.push_back(violation_to_json(v));
    json witness = json::array();
    for (const auto& w : r.witness) {
        witness.push_back(json{{"ruler", w.ruler}, {"dist", w.dist}});
    }
    return json{
        {"schema", 1},
        {"n", r.n},
        {"reduction_steps", r.reduction_steps},
        {"ruling_size", r.ruling.count()},
        {"ruling", r.ruling.members()},
        {"witness", witness},
        {"trace", trace},
        {"budget_violations", violations},
        {"account", account_to_json(r.account)},
    };
}

}  // namespace rs2
