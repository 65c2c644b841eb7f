#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "nodeset.hpp"

namespace rs2 {

// Packs an undirected edge as (min << 32) | max. The canonical edge list of a
// graph is the ascending sort of these packs; every module that materializes
// edges uses this encoding so edge vectors compare byte for byte.
inline uint64_t pack_edge(uint32_t u, uint32_t v) {
    uint32_t lo = u < v ? u : v;
    uint32_t hi = u < v ? v : u;
    return (static_cast<uint64_t>(lo) << 32) | hi;
}

inline uint32_t edge_lo(uint64_t e) { return static_cast<uint32_t>(e >> 32); }
inline uint32_t edge_hi(uint64_t e) { return static_cast<uint32_t>(e); }

// Immutable simple undirected graph in CSR form. Neighbor lists are sorted
// ascending. Construction collapses parallel edges and drops self-loops.
class Graph {
public:
    Graph() = default;

    // Builds from packed edges in any order or orientation mix. Ids must be
    // below n; violations throw.
    static Graph from_packed_edges(uint32_t n, std::span<const uint64_t> edges);

    // Convenience wrapper over flat (u0, v0, u1, v1, ...) pairs.
    static Graph from_edge_pairs(uint32_t n, std::span<const uint32_t> flat_pairs);

    uint32_t node_count() const { return n_; }
    uint64_t edge_count() const { return adj_.size() / 2; }

    uint32_t degree(uint32_t u) const {
        return static_cast<uint32_t>(offsets_[u + 1] - offsets_[u]);
    }

    uint32_t max_degree() const { return max_degree_; }

    std::span<const uint32_t> neighbors(uint32_t u) const {
        return {adj_.data() + offsets_[u], adj_.data() + offsets_[u + 1]};
    }

    bool has_edge(uint32_t u, uint32_t v) const;

    // Canonical packed edge list, ascending.
    std::vector<uint64_t> packed_edges() const;

    // Visits each undirected edge once as (u, v) with u < v, ascending.
    template <class F>
    void for_each_edge(F f) const {
        for (uint32_t u = 0; u < n_; ++u) {
            for (uint32_t v : neighbors(u)) {
                if (v > u) f(u, v);
            }
        }
    }

private:
    uint32_t n_ = 0;
    uint32_t max_degree_ = 0;
    std::vector<uint64_t> offsets_;
    std::vector<uint32_t> adj_;
};

// Induced subgraph with ids compacted to [0, |s|) in ascending original order.
struct SubgraphView {
    Graph graph;
    std::vector<uint32_t> to_parent;  // local id -> original id, ascending

    // Original id -> local id; the id must be a member.
    uint32_t local_of(uint32_t parent_id) const;
};

SubgraphView induced_subgraph(const Graph& g, const NodeSet& s);

inline constexpr uint32_t kUnreached = 0xFFFFFFFFu;

// Multi-source BFS distances, capped at radius (nodes farther than radius get
// kUnreached). radius = kUnreached means uncapped.
std::vector<uint32_t> bfs_distance(const Graph& g, const NodeSet& sources,
                                   uint32_t radius = kUnreached);

// Nodes within distance 2 of s, s included.
NodeSet two_hop_covered(const Graph& g, const NodeSet& s);

// Edge-list text format: '#' starts a comment, blank lines are skipped, an
// optional first line "n <count>" fixes the node count, every other line is
// "u v". Without a header the node count is max id + 1 (0 for no edges).
Graph load_edge_list(std::istream& in, const std::string& name);
Graph load_edge_list_file(const std::string& path);

void save_edge_list_file(const Graph& g, const std::string& path);

}  // namespace rs2
