#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "classify.hpp"
#include "config.hpp"
#include "graph.hpp"
#include "nodeset.hpp"
#include "pipeline.hpp"

namespace rs2 {

// Outcome of checking a claimed ruling set. On failure exactly one of the two
// witness forms is filled: an edge inside the set, or a node too far from it.
struct RulingCheck {
    bool ok = false;
    bool independent = false;
    bool covered = false;
    std::optional<std::pair<uint32_t, uint32_t>> violating_edge;
    std::optional<uint32_t> uncovered_node;
};

// Verifies s is independent in g and every node is within beta hops of s.
RulingCheck verify_ruling_set(const Graph& g, const NodeSet& s, uint32_t beta);

// One measured structural bound. status "vacuous" marks a bound at or above
// the trivial ceiling; measured/bound semantics are per check, documented at
// each checker.
struct LemmaReport {
    std::string lemma;
    std::optional<int> d;
    double measured = 0.0;
    double bound = 0.0;
    enum class Status { pass, fail, vacuous } status = Status::pass;
    uint64_t seed = 0;

    static LemmaReport make(std::string name, std::optional<int> d, double measured,
                            double bound, uint64_t seed);
};

// Wilson score interval for a binomial proportion at z standard normal units.
std::pair<double, double> wilson_interval(uint64_t hits, uint64_t trials, double z);

// --- structural checks over one captured run -------------------------------
//
// Every checker recomputes what it needs from the graph and the captured node
// sets alone; none of them trusts pipeline bookkeeping beyond the sets
// themselves.

// Gathered sampled-subgraph size: edges of g[vsamp] vs budget_k * n.
LemmaReport check_sampled_subgraph_edges(const Graph& g, const NodeSet& sub,
                                         const NodeSet& vsamp, double budget_k,
                                         uint64_t seed);

// Set-aside subgraph size: edges of g[vstar] vs budget_k * n.
LemmaReport check_setaside_subgraph_edges(const Graph& g, const NodeSet& vstar,
                                          double budget_k, uint64_t seed);

// Final-stage subgraph size: edges among the still-uncovered nodes vs
// budget_k * n.
LemmaReport check_final_subgraph_edges(const Graph& g, const NodeSet& uncovered,
                                       double budget_k, uint64_t seed);

// Bad-bucket population: for each bucket b with members, |bucket| vs
// 2 * n * (log2 d)^5 / sqrt(d) at d = 2^b ("vacuous" once the bound reaches
// n). Operates on the subgraph g[sub].
std::vector<LemmaReport> check_bad_bucket_sizes(const Graph& g, const NodeSet& sub,
                                                double gamma, uint64_t seed);

// Heavy-neighbor floor: every bad node of degree d >= d_min must have at
// least ceil(d/2) neighbors of degree >= d^2 / (4 gamma^2 log2(d)^2), degrees
// inside g[sub]. measured = violating node count, bound = 0.
LemmaReport check_heavy_neighbor_floor(const Graph& g, const NodeSet& sub, double gamma,
                                       int32_t d_min, uint64_t seed);

// Residual purity of one main iteration: every node of the iteration graph
// left uncovered must be bad and not crowded enough for the set-aside.
// measured = offending node count, bound = 0.
LemmaReport check_residual_only_bad(const Graph& g, const MainIterationDetail& it,
                                    const AlgoConfig& cfg, uint64_t seed);

// Replay of the reduction promise: after step j the residual max degree must
// be at most 8 * log2(n) / rate_j. measured = max over steps of the realized
// ratio to its bound; bound = 1.
LemmaReport check_reduction_residual_degree(const Graph& g,
                                            const std::vector<ReductionStepDetail>& steps,
                                            uint64_t seed);

// Monte-Carlo rate at which good nodes miss having a sampled neighbor,
// grouped by exact degree: for degree d the rate must stay below
// 1/d^(gamma/2) plus Wilson slack at z = 1.96. One report per degree with at
// least min_nodes good nodes; measured is the observed rate.
std::vector<LemmaReport> check_good_missed_sample_rate(const Graph& g, double gamma,
                                                       uint32_t trials, uint64_t base_seed,
                                                       uint64_t min_nodes = 64);

// Runs a full pipeline with captured detail and every applicable check.
std::vector<LemmaReport> run_lemma_batch(const Graph& g, const AlgoConfig& cfg);

}  // namespace rs2
