#pragma once

#include <cstdint>
#include <span>

#include "config.hpp"
#include "graph.hpp"
#include "pipeline.hpp"

namespace rs2 {

// Semi-streaming execution: the algorithm only ever reads the edge stream
// front to back, one pass at a time, holding O(n) words plus the budgeted
// gathered subgraphs. The stream must describe a simple graph (ids below n,
// no self-loops, no duplicates in either orientation); ids out of range or
// self-loops throw. Edge order and orientation are arbitrary and never
// influence the output.
RunResult run_streaming(uint32_t n, std::span<const uint64_t> edge_stream,
                        const AlgoConfig& cfg, PipelineDetail* detail = nullptr);

// Streams a graph's canonical edge list.
RunResult run_streaming(const Graph& g, const AlgoConfig& cfg,
                        PipelineDetail* detail = nullptr);

// Congested-clique execution: one node per graph node, counters move along
// direct links in single rounds, gathered subgraphs route to a coordinator
// through reserved delivery slots sized by the budget. Reports rounds instead
// of passes.
RunResult run_congested_clique(const Graph& g, const AlgoConfig& cfg,
                               PipelineDetail* detail = nullptr);

}  // namespace rs2
