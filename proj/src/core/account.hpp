#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace rs2 {

enum class CostModel { none, stream, clique };

// Per-phase execution trace entry. passes/rounds/peak_words are the phase's
// own deltas (peak_words is the high-water mark while the phase ran).
struct PhaseTrace {
    std::string phase;
    uint64_t sub_nodes = 0;
    uint64_t sub_edges = 0;
    uint32_t luby_iters = 0;
    uint64_t newly_covered = 0;
    uint64_t passes = 0;
    uint64_t rounds = 0;
    uint64_t peak_words = 0;
};

// A phase that pulled in more data than its budget allows.
struct BudgetViolation {
    std::string phase;
    std::string kind;  // "edges" (gathered subgraph) or "words" (memory)
    uint64_t observed = 0;
    uint64_t budget = 0;
};

struct AccountInfo {
    CostModel model = CostModel::none;
    uint64_t passes = 0;
    uint64_t rounds = 0;
    uint64_t peak_words = 0;
    uint64_t max_message_words = 0;  // largest single gather (clique)
    std::vector<std::string> pass_labels;
};

// Cost meter for one pipeline run. The pipeline reports every edge scan,
// gather, broadcast, and working-memory allocation; the account translates
// them into the active model's currency.
//
// Semi-streaming: every scan or gather is one pass over the edge stream.
// Working memory is metered in words, one word per stored node scalar or per
// buffered edge.
//
// Congested clique: a scan or broadcast is one round (degree-style counters
// move over direct edges, then every node's value is known locally after the
// round). A gather routes the subgraph's edges to a coordinator through the
// full bipartite bandwidth: with budget K * n edges and n - 1 usable links
// per relay the schedule reserves ceil(ceil(K * n) / (n - 1)) delivery slots
// up front plus one announcement round, so the round count is a function of
// (K, n) alone and never of the realized subgraph. A gather that overflows
// the reservation is charged its actual ceil(edges / (n - 1)) + 1 rounds and
// recorded as a budget violation.
class CostAccount {
public:
    CostAccount(CostModel model, uint32_t n, double budget_k);

    void begin_phase(const std::string& label);
    void end_phase(uint64_t sub_nodes, uint64_t sub_edges, uint32_t luby_iters,
                   uint64_t newly_covered);

    void scan_pass(const char* what);
    void gather_pass(const char* what, uint64_t edges);
    void broadcast(const char* what);

    void alloc_words(uint64_t words);
    void release_words(uint64_t words);

    // Stream-model memory ceiling: (K + 8) words per node. Checked at every
    // end_phase; overruns are recorded, not fatal.
    uint64_t word_budget() const;
    uint64_t edge_budget() const { return edge_budget_; }
    uint64_t reserved_slots() const { return slots_; }

    uint64_t passes() const { return passes_; }
    uint64_t rounds() const { return rounds_; }
    uint64_t peak_words() const { return peak_words_; }
    uint64_t live_words() const { return live_words_; }

    AccountInfo info() const;
    const std::vector<PhaseTrace>& trace() const { return trace_; }
    const std::vector<BudgetViolation>& violations() const { return violations_; }

private:
    void note_pass(const char* what, uint64_t rounds_cost);

    CostModel model_;
    uint32_t n_;
    double budget_k_;
    uint64_t edge_budget_;
    uint64_t slots_;

    uint64_t passes_ = 0;
    uint64_t rounds_ = 0;
    uint64_t live_words_ = 0;
    uint64_t peak_words_ = 0;
    uint64_t max_message_words_ = 0;

    bool in_phase_ = false;
    std::string phase_label_;
    uint64_t phase_pass_base_ = 0;
    uint64_t phase_round_base_ = 0;
    uint64_t phase_peak_ = 0;

    std::vector<std::string> pass_labels_;
    std::vector<PhaseTrace> trace_;
    std::vector<BudgetViolation> violations_;
};

// Planned totals for one full pipeline run as a function of the reduction
// step count i (and for the clique, the budget K and node count n). These are
// audit constants: the accounted totals must land exactly on them for every
// input, which is what the fixed-schedule tests pin down.
uint64_t planned_stream_passes(uint32_t reduction_steps);
uint64_t planned_clique_rounds(uint32_t reduction_steps, double budget_k, uint32_t n);

}  // namespace rs2
