#pragma once

#include <cstdint>
#include <optional>

#include "classify.hpp"
#include "config.hpp"
#include "graph.hpp"
#include "mis.hpp"
#include "nodeset.hpp"
#include "pipeline.hpp"
#include "rng.hpp"

namespace rs2 {

// Standalone adjacency-based forms of the pipeline's stages. Each operates on
// an explicit node subset of g (dead nodes simply do not exist for it), which
// is exactly how the pipeline treats the shrinking graph, so stage-for-stage
// replays against a pipeline run must agree set-for-set.

// Labels the nodes of `sub`, taking degrees inside g[sub]. Nodes outside sub
// come back good with degree 0.
Classification classify_subset(const Graph& g, const NodeSet& sub, double gamma);

// Degree-weighted sample: each node of sub enters with probability
// min(1, 1/sqrt(deg)), degree taken inside g[sub]; degree-0 nodes always
// enter. Draw for node u is rng.at(u).
NodeSet sample_support_set(const Graph& g, const NodeSet& sub, const RngStream& rng);

// Set-aside selection over g[sub]: good nodes with no sampled neighbor, plus
// uncovered bad nodes some neighbor of which sees at least the crowding
// threshold of same-bucket bad nodes.
NodeSet compute_set_aside(const Graph& g, const NodeSet& sub, const Classification& cls,
                          const NodeSet& vsamp, const NodeSet& covered,
                          const AlgoConfig& cfg);

struct MainIterationResult {
    NodeSet rulers;      // isolated pre-joins, the sampled-set MIS, the set-aside MIS
    NodeSet covered;     // two-hop coverage of rulers within g[sub]
    MainIterationDetail detail;
};

// One main iteration over g[sub]. `iteration` (1 or 2) addresses the
// randomness exactly like the pipeline's k-th main iteration.
MainIterationResult main_iteration(const Graph& g, const NodeSet& sub,
                                   const AlgoConfig& cfg, uint32_t iteration);

struct DegreeReductionResult {
    uint32_t steps = 0;
    NodeSet rulers;
    NodeSet alive;  // nodes remaining after the last step
    std::vector<ReductionStepDetail> step_detail;
};

// The full degree-reduction preamble over g (step count from g's max degree).
DegreeReductionResult degree_reduction(const Graph& g, const AlgoConfig& cfg);

// The complete algorithm over an in-memory graph, uncosted. Equivalent to
// running either harness; exists as the plain library entry point.
RunResult parallel_two_ruling_set(const Graph& g, const AlgoConfig& cfg,
                                  PipelineDetail* detail = nullptr);

}  // namespace rs2
