#include "mis.hpp"

#include <algorithm>

#include "error.hpp"

namespace rs2 {

namespace {

// Lexicographic (draw, id) comparison; ids break ties so the relation is a
// strict total order and exactly one endpoint of every active edge loses.
inline bool beats(uint64_t draw_a, uint32_t a, uint64_t draw_b, uint32_t b) {
    return draw_a < draw_b || (draw_a == draw_b && a < b);
}

// One stage of the two-stage run; `iter` continues across stages.
void luby_stage(std::span<const uint64_t> edges, NodeSet& active, const RngStream& rng,
                uint32_t& iter, LubyRunRecord& rec) {
    uint32_t n = active.universe_size();
    while (!active.empty()) {
        ++iter;
        NodeSet beaten(n);
        for (uint64_t e : edges) {
            uint32_t u = edge_lo(e);
            uint32_t v = edge_hi(e);
            if (!active.test(u) || !active.test(v)) continue;
            uint64_t du = rng.at(iter, u);
            uint64_t dv = rng.at(iter, v);
            if (beats(du, u, dv, v)) {
                beaten.insert(v);
            } else {
                beaten.insert(u);
            }
        }
        NodeSet joined(n);
        active.for_each([&](uint32_t u) {
            if (!beaten.test(u)) {
                joined.insert(u);
                rec.mis.insert(u);
                if (iter == 1) rec.joined_first_round.insert(u);
            }
        });
        NodeSet knocked(n);
        for (uint64_t e : edges) {
            uint32_t u = edge_lo(e);
            uint32_t v = edge_hi(e);
            if (joined.test(u)) knocked.insert(v);
            if (joined.test(v)) knocked.insert(u);
        }
        active.subtract(joined);
        active.subtract(knocked);
    }
}

}  // namespace

LubyRunRecord luby_over_edges(std::span<const uint64_t> edges, const NodeSet& nodes,
                              const NodeSet& phase_one, const RngStream& rng) {
    uint32_t n = nodes.universe_size();
    LubyRunRecord rec;
    rec.joined_first_round = NodeSet(n);
    rec.mis = NodeSet(n);

    NodeSet active = phase_one;
    active &= nodes;
    uint32_t iter = 0;
    luby_stage(edges, active, rng, iter, rec);

    // Second stage: remaining nodes not dominated by the stage-one set.
    NodeSet dominated(n);
    for (uint64_t e : edges) {
        uint32_t u = edge_lo(e);
        uint32_t v = edge_hi(e);
        if (rec.mis.test(u)) dominated.insert(v);
        if (rec.mis.test(v)) dominated.insert(u);
    }
    NodeSet rest = nodes;
    rest.subtract(phase_one);
    rest.subtract(dominated);
    rest.subtract(rec.mis);
    luby_stage(edges, rest, rng, iter, rec);

    rec.iterations = iter;
    return rec;
}

LubyRunRecord luby_mis(const Graph& g, const NodeSet& phase_one, const RngStream& rng) {
    NodeSet all(g.node_count());
    all.insert_all();
    auto edges = g.packed_edges();
    return luby_over_edges(edges, all, phase_one, rng);
}

NodeSet greedy_over_edges(std::span<const uint64_t> edges, const NodeSet& nodes,
                          std::span<const uint32_t> rank) {
    uint32_t n = nodes.universe_size();
    if (!rank.empty() && rank.size() != n) throw_invalid("rank size mismatch");
    auto rank_of = [&](uint32_t u) { return rank.empty() ? u : rank[u]; };

    // Process edges by ascending max endpoint rank. When an edge is visited
    // its lower-ranked endpoint's status is already final, because every edge
    // that could veto that endpoint has a smaller max rank.
    std::vector<uint64_t> kept;
    kept.reserve(edges.size());
    for (uint64_t e : edges) {
        uint32_t u = edge_lo(e);
        uint32_t v = edge_hi(e);
        if (nodes.test(u) && nodes.test(v)) kept.push_back(e);
    }
    auto key = [&](uint64_t e) {
        uint32_t ru = rank_of(edge_lo(e));
        uint32_t rv = rank_of(edge_hi(e));
        uint32_t hi = std::max(ru, rv);
        uint32_t lo = std::min(ru, rv);
        return (static_cast<uint64_t>(hi) << 32) | lo;
    };
    std::sort(kept.begin(), kept.end(),
              [&](uint64_t a, uint64_t b) { return key(a) < key(b); });

    NodeSet out = nodes;
    for (uint64_t e : kept) {
        uint32_t u = edge_lo(e);
        uint32_t v = edge_hi(e);
        if (rank_of(u) > rank_of(v)) std::swap(u, v);
        if (out.test(u)) out.erase(v);
    }
    return out;
}

NodeSet greedy_mis(const Graph& g, const NodeSet& nodes) {
    auto edges = g.packed_edges();
    return greedy_over_edges(edges, nodes, {});
}

NodeSet greedy_mis_ordered(const Graph& g, const NodeSet& nodes,
                           std::span<const uint32_t> order) {
    if (order.size() != g.node_count()) throw_invalid("order must be a permutation");
    std::vector<uint32_t> rank(g.node_count(), kUnreached);
    for (uint32_t pos = 0; pos < order.size(); ++pos) {
        uint32_t u = order[pos];
        if (u >= g.node_count() || rank[u] != kUnreached) {
            throw_invalid("order must be a permutation");
        }
        rank[u] = pos;
    }
    auto edges = g.packed_edges();
    return greedy_over_edges(edges, nodes, rank);
}

bool is_maximal_independent_set(const Graph& g, const NodeSet& s) {
    if (s.universe_size() != g.node_count()) return false;
    bool ok = true;
    g.for_each_edge([&](uint32_t u, uint32_t v) {
        if (s.test(u) && s.test(v)) ok = false;
    });
    if (!ok) return false;
    for (uint32_t u = 0; u < g.node_count(); ++u) {
        if (s.test(u)) continue;
        bool dominated = false;
        for (uint32_t v : g.neighbors(u)) {
            if (s.test(v)) {
                dominated = true;
                break;
            }
        }
        if (!dominated) return false;
    }
    return true;
}

}  // namespace rs2
