#pragma once

#include <cstdint>
#include <span>

#include "graph.hpp"
#include "nodeset.hpp"
#include "rng.hpp"

namespace rs2 {

struct LubyRunRecord {
    uint32_t iterations = 0;
    NodeSet joined_first_round;  // nodes that entered the set in iteration 1
    NodeSet mis;
};

// Randomized maximal independent set over an explicit edge list, run in two
// stages: first restricted to the phase_one nodes, then over the remaining
// nodes not yet dominated. Each iteration every active node draws a priority
// (a pure function of the stream and the node's id, so replayable); a node
// joins when it beats all active neighbors, and joined nodes knock out their
// neighborhoods. The iteration counter is shared across both stages.
//
// edges may mention nodes outside `nodes`; such endpoints are ignored, so
// callers can pass a supergraph's gathered edges directly.
LubyRunRecord luby_over_edges(std::span<const uint64_t> edges, const NodeSet& nodes,
                              const NodeSet& phase_one, const RngStream& rng);

// Convenience wrapper running both stages over a whole graph.
LubyRunRecord luby_mis(const Graph& g, const NodeSet& phase_one, const RngStream& rng);

// Deterministic sequential maximal independent set over an edge list. Nodes
// are processed in ascending rank (rank[u] positions u in the scan order);
// a node joins unless a lower-ranked neighbor already joined. An empty rank
// span means identity, the classic lowest-id greedy.
NodeSet greedy_over_edges(std::span<const uint64_t> edges, const NodeSet& nodes,
                          std::span<const uint32_t> rank);

// Identity-rank greedy over an explicit node subset of g.
NodeSet greedy_mis(const Graph& g, const NodeSet& nodes);

// Greedy following an explicit processing order (a permutation of the node
// ids of g); nodes outside `nodes` are skipped.
NodeSet greedy_mis_ordered(const Graph& g, const NodeSet& nodes,
                           std::span<const uint32_t> order);

// True when s is independent in g and no node outside s could be added.
bool is_maximal_independent_set(const Graph& g, const NodeSet& s);

}  // namespace rs2
