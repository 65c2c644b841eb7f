#include "account.hpp"

#include <algorithm>
#include <cmath>

#include "error.hpp"

namespace rs2 {

namespace {

uint64_t ceil_div(uint64_t a, uint64_t b) { return b == 0 ? 0 : (a + b - 1) / b; }

uint64_t edge_budget_for(uint32_t n, double budget_k) {
    return static_cast<uint64_t>(std::ceil(budget_k * static_cast<double>(n)));
}

uint64_t slots_for(uint32_t n, uint64_t edge_budget) {
    if (n <= 1) return 1;
    return std::max<uint64_t>(1, ceil_div(edge_budget, n - 1));
}

}  // namespace

CostAccount::CostAccount(CostModel model, uint32_t n, double budget_k)
    : model_(model),
      n_(n),
      budget_k_(budget_k),
      edge_budget_(edge_budget_for(n, budget_k)),
      slots_(slots_for(n, edge_budget_)) {}

void CostAccount::begin_phase(const std::string& label) {
    if (in_phase_) throw_contract("phase already open");
    in_phase_ = true;
    phase_label_ = label;
    phase_pass_base_ = passes_;
    phase_round_base_ = rounds_;
    phase_peak_ = live_words_;
}

void CostAccount::end_phase(uint64_t sub_nodes, uint64_t sub_edges, uint32_t luby_iters,
                            uint64_t newly_covered) {
    if (!in_phase_) throw_contract("no open phase");
    PhaseTrace t;
    t.phase = phase_label_;
    t.sub_nodes = sub_nodes;
    t.sub_edges = sub_edges;
    t.luby_iters = luby_iters;
    t.newly_covered = newly_covered;
    t.passes = passes_ - phase_pass_base_;
    t.rounds = rounds_ - phase_round_base_;
    t.peak_words = phase_peak_;
    trace_.push_back(std::move(t));

    if (model_ == CostModel::stream && phase_peak_ > word_budget()) {
        violations_.push_back({phase_label_, "words", phase_peak_, word_budget()});
    }
    in_phase_ = false;
}

void CostAccount::note_pass(const char* what, uint64_t rounds_cost) {
    if (!in_phase_) throw_contract("pass outside phase");
    pass_labels_.push_back(phase_label_ + "/" + what);
    passes_ += 1;
    rounds_ += rounds_cost;
}

void CostAccount::scan_pass(const char* what) { note_pass(what, 1); }

void CostAccount::gather_pass(const char* what, uint64_t edges) {
    // One pass in the stream. In the clique the reservation is charged even
    // when the realized subgraph is smaller, keeping rounds input-oblivious.
    uint64_t rounds_cost = slots_ + 1;
    if (edges > edge_budget_) {
        violations_.push_back({phase_label_ + "/" + what, "edges", edges, edge_budget_});
        rounds_cost = std::max<uint64_t>(1, ceil_div(edges, n_ > 1 ? n_ - 1 : 1)) + 1;
    }
    note_pass(what, rounds_cost);
    max_message_words_ = std::max(max_message_words_, edges);
}

void CostAccount::broadcast(const char* what) {
    if (!in_phase_) throw_contract("broadcast outside phase");
    pass_labels_.push_back(phase_label_ + "/" + what + "!");
    rounds_ += 1;
}

void CostAccount::alloc_words(uint64_t words) {
    live_words_ += words;
    peak_words_ = std::max(peak_words_, live_words_);
    phase_peak_ = std::max(phase_peak_, live_words_);
}

void CostAccount::release_words(uint64_t words) {
    if (words > live_words_) throw_contract("releasing more words than live");
    live_words_ -= words;
}

uint64_t CostAccount::word_budget() const {
    return static_cast<uint64_t>(std::ceil((budget_k_ + 8.0) * static_cast<double>(n_)));
}

AccountInfo CostAccount::info() const {
    AccountInfo out;
    out.model = model_;
    out.passes = passes_;
    out.rounds = rounds_;
    out.peak_words = peak_words_;
    out.max_message_words = max_message_words_;
    out.pass_labels = pass_labels_;
    return out;
}

uint64_t planned_stream_passes(uint32_t reduction_steps) {
    // 1 degree pass, 2 per reduction step, 11 per main iteration (of 2),
    // 2 + 2 for the uncovered recomputations, 1 final gather, 2 witness.
    return 30 + 2ull * reduction_steps;
}

uint64_t planned_clique_rounds(uint32_t reduction_steps, double budget_k, uint32_t n) {
    uint64_t slots = slots_for(n, edge_budget_for(n, budget_k));
    // Non-gather scans become single rounds; each of the (steps + 5) gathers
    // costs slots + 1 plus one broadcast of the resulting independent set.
    return 25 + reduction_steps + (reduction_steps + 5ull) * (slots + 2);
}

}  // namespace rs2
