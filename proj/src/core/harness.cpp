#include "harness.hpp"

#include "error.hpp"
#include "scan.hpp"

namespace rs2 {

RunResult run_streaming(uint32_t n, std::span<const uint64_t> edge_stream,
                        const AlgoConfig& cfg, PipelineDetail* detail) {
    for (uint64_t e : edge_stream) {
        uint32_t a = static_cast<uint32_t>(e >> 32);
        uint32_t b = static_cast<uint32_t>(e);
        if (a >= n || b >= n) throw_invalid("stream edge endpoint out of range");
        if (a == b) throw_invalid("stream contains a self-loop");
    }
    VectorSource src(n, edge_stream);
    return run_pipeline(src, cfg, CostModel::stream, detail);
}

RunResult run_streaming(const Graph& g, const AlgoConfig& cfg, PipelineDetail* detail) {
    auto edges = g.packed_edges();
    return run_streaming(g.node_count(), edges, cfg, detail);
}

RunResult run_congested_clique(const Graph& g, const AlgoConfig& cfg,
                               PipelineDetail* detail) {
    GraphSource src(g);
    return run_pipeline(src, cfg, CostModel::clique, detail);
}

}  // namespace rs2
