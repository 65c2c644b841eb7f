#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "graph.hpp"
#include "rng.hpp"

namespace rs2 {

// Edge sources feed the pipeline one full-edge scan at a time. A source's
// only obligation is to visit every undirected edge exactly once per scan,
// in any order and either orientation; every pipeline stage folds scans with
// order-independent operations, so all sources yield identical results.

// Scans a CSR graph (ascending (u, v), u < v).
class GraphSource {
public:
    explicit GraphSource(const Graph& g) : g_(&g) {}

    uint32_t node_count() const { return g_->node_count(); }

    template <class F>
    void scan(F f) const {
        g_->for_each_edge(f);
    }

private:
    const Graph* g_;
};

// Scans a packed edge vector in its stored order, emitting endpoints exactly
// as packed. The vector must describe a simple graph (no self-loops or
// duplicates in either orientation); ids must be below node_count.
class VectorSource {
public:
    VectorSource(uint32_t n, std::span<const uint64_t> edges) : n_(n), edges_(edges) {}

    uint32_t node_count() const { return n_; }

    template <class F>
    void scan(F f) const {
        for (uint64_t e : edges_) f(edge_lo(e), edge_hi(e));
    }

private:
    uint32_t n_;
    std::span<const uint64_t> edges_;
};

// Scans a permuted copy of an edge vector with randomly flipped orientations.
// Exists to demonstrate order independence in tests.
class ShuffleSource {
public:
    ShuffleSource(uint32_t n, std::span<const uint64_t> edges, uint64_t shuffle_seed);

    uint32_t node_count() const { return n_; }

    template <class F>
    void scan(F f) const {
        for (uint64_t e : shuffled_) f(static_cast<uint32_t>(e >> 32), static_cast<uint32_t>(e));
    }

private:
    uint32_t n_;
    std::vector<uint64_t> shuffled_;
};

inline ShuffleSource::ShuffleSource(uint32_t n, std::span<const uint64_t> edges,
                                    uint64_t shuffle_seed)
    : n_(n), shuffled_(edges.begin(), edges.end()) {
    RngStream rng(shuffle_seed);
    for (size_t i = shuffled_.size(); i > 1; --i) {
        size_t j = static_cast<size_t>(rng.bounded_at(i, i));
        std::swap(shuffled_[i - 1], shuffled_[j]);
    }
    for (size_t i = 0; i < shuffled_.size(); ++i) {
        if (rng.at(0x466C6970ull, i) & 1) {
            uint64_t e = shuffled_[i];
            shuffled_[i] = (e << 32) | (e >> 32);
        }
    }
}

}  // namespace rs2
