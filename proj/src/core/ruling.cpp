#include "ruling.hpp"

#include <algorithm>

#include "error.hpp"
#include "scan.hpp"

namespace rs2 {

namespace {

std::vector<uint32_t> subset_degrees(const Graph& g, const NodeSet& sub) {
    std::vector<uint32_t> deg(g.node_count(), 0);
    sub.for_each([&](uint32_t u) {
        uint32_t d = 0;
        for (uint32_t v : g.neighbors(u)) d += sub.test(v);
        deg[u] = d;
    });
    return deg;
}

}  // namespace

Classification classify_subset(const Graph& g, const NodeSet& sub, double gamma) {
    uint32_t n = g.node_count();
    if (sub.universe_size() != n) throw_invalid("subset universe mismatch");
    Classification cls;
    cls.gamma = gamma;
    cls.deg = subset_degrees(g, sub);
    cls.sum_fp.assign(n, 0);
    cls.code.assign(n, Classification::kGood);
    sub.for_each([&](uint32_t u) {
        for (uint32_t v : g.neighbors(u)) {
            if (sub.test(v)) cls.sum_fp[u] += Classification::term_fp(cls.deg[v]);
        }
        cls.code[u] = Classification::label_from(cls.deg[u], cls.sum_fp[u], gamma);
    });
    return cls;
}

NodeSet sample_support_set(const Graph& g, const NodeSet& sub, const RngStream& rng) {
    if (sub.universe_size() != g.node_count()) throw_invalid("subset universe mismatch");
    auto deg = subset_degrees(g, sub);
    NodeSet out(g.node_count());
    sub.for_each([&](uint32_t u) {
        double p = deg[u] == 0 ? 1.0 : 1.0 / std::sqrt(static_cast<double>(deg[u]));
        if (rng.accept(rng.at(u), p)) out.insert(u);
    });
    return out;
}

NodeSet compute_set_aside(const Graph& g, const NodeSet& sub, const Classification& cls,
                          const NodeSet& vsamp, const NodeSet& covered,
                          const AlgoConfig& cfg) {
    uint32_t n = g.node_count();
    if (sub.universe_size() != n) throw_invalid("subset universe mismatch");
    NodeSet vstar(n);

    sub.for_each([&](uint32_t u) {
        if (cls.code[u] != Classification::kGood) return;
        bool sampled_neighbor = false;
        for (uint32_t v : g.neighbors(u)) {
            if (sub.test(v) && vsamp.test(v)) {
                sampled_neighbor = true;
                break;
            }
        }
        if (!sampled_neighbor) vstar.insert(u);
    });

    // Census of bad-bucket neighbors, restricted to buckets that still hold
    // an uncovered bad node.
    int slot_of[32];
    std::fill(std::begin(slot_of), std::end(slot_of), -1);
    std::vector<int> occupied;
    sub.for_each([&](uint32_t u) {
        if (cls.code[u] >= 0 && !covered.test(u) && slot_of[cls.code[u]] < 0) {
            slot_of[cls.code[u]] = static_cast<int>(occupied.size());
            occupied.push_back(cls.code[u]);
        }
    });
    if (occupied.empty()) return vstar;
    std::vector<uint32_t> census(occupied.size() * static_cast<size_t>(n), 0);
    sub.for_each([&](uint32_t v) {
        for (uint32_t w : g.neighbors(v)) {
            if (!sub.test(w) || cls.code[w] < 0) continue;
            int s = slot_of[cls.code[w]];
            if (s >= 0) census[static_cast<size_t>(s) * n + v]++;
        }
    });
    sub.for_each([&](uint32_t u) {
        if (cls.code[u] < 0 || covered.test(u)) return;
        int s = slot_of[cls.code[u]];
        double thr = setaside_threshold(cls.code[u], cfg.c_setaside);
        for (uint32_t v : g.neighbors(u)) {
            if (!sub.test(v)) continue;
            if (static_cast<double>(census[static_cast<size_t>(s) * n + v]) >= thr) {
                vstar.insert(u);
                break;
            }
        }
    });
    return vstar;
}

MainIterationResult main_iteration(const Graph& g, const NodeSet& sub,
                                   const AlgoConfig& cfg, uint32_t iteration) {
    cfg.validate();
    uint32_t n = g.node_count();
    if (sub.universe_size() != n) throw_invalid("subset universe mismatch");
    RngStream root(cfg.seed);

    MainIterationResult out;
    out.rulers = NodeSet(n);
    out.detail.alive = sub;

    auto deg = subset_degrees(g, sub);
    NodeSet isolated(n);
    sub.for_each([&](uint32_t u) {
        if (deg[u] == 0) isolated.insert(u);
    });
    NodeSet aliveH = sub;
    aliveH.subtract(isolated);
    out.detail.isolated = isolated;
    out.rulers |= isolated;

    Classification cls = classify_subset(g, aliveH, cfg.gamma);
    out.detail.cls = cls;

    NodeSet vsamp =
        sample_support_set(g, aliveH, root.fork(kTagMainSample).fork(iteration));
    out.detail.vsamp = vsamp;

    // Luby over g[vsamp], bad nodes first.
    SubgraphView hs = induced_subgraph(g, vsamp);
    std::vector<uint64_t> edges;
    hs.graph.for_each_edge([&](uint32_t ul, uint32_t vl) {
        edges.push_back(pack_edge(hs.to_parent[ul], hs.to_parent[vl]));
    });
    std::sort(edges.begin(), edges.end());
    NodeSet sampled_bad(n);
    vsamp.for_each([&](uint32_t u) {
        if (cls.code[u] != Classification::kGood) sampled_bad.insert(u);
    });
    LubyRunRecord rec = luby_over_edges(edges, vsamp, sampled_bad,
                                        root.fork(kTagMainLuby).fork(iteration));
    out.detail.luby = rec;
    out.detail.mis_sampled = rec.mis;
    out.rulers |= rec.mis;

    // Coverage inside g[aliveH] before the set-aside.
    SubgraphView hv = induced_subgraph(g, aliveH);
    auto to_local_set = [&](const NodeSet& s) {
        NodeSet local(hv.graph.node_count());
        s.for_each([&](uint32_t u) { local.insert(hv.local_of(u)); });
        return local;
    };
    auto to_parent_set = [&](const NodeSet& local) {
        NodeSet s(n);
        local.for_each([&](uint32_t ul) { s.insert(hv.to_parent[ul]); });
        return s;
    };
    NodeSet covered_mid = to_parent_set(two_hop_covered(hv.graph, to_local_set(rec.mis)));
    out.detail.covered_mid = covered_mid;

    NodeSet vstar = compute_set_aside(g, aliveH, cls, vsamp, covered_mid, cfg);
    out.detail.vstar = vstar;
    SubgraphView sv = induced_subgraph(g, vstar);
    NodeSet mstar_local = greedy_mis(sv.graph, [&] {
        NodeSet allv(sv.graph.node_count());
        allv.insert_all();
        return allv;
    }());
    NodeSet mstar(n);
    mstar_local.for_each([&](uint32_t ul) { mstar.insert(sv.to_parent[ul]); });
    out.detail.mis_setaside = mstar;
    out.rulers |= mstar;

    NodeSet rulers_h = rec.mis;
    rulers_h |= mstar;
    NodeSet covered_h = to_parent_set(two_hop_covered(hv.graph, to_local_set(rulers_h)));
    covered_h |= isolated;
    out.detail.covered = covered_h;
    out.covered = covered_h;
    return out;
}

DegreeReductionResult degree_reduction(const Graph& g, const AlgoConfig& cfg) {
    cfg.validate();
    uint32_t n = g.node_count();
    RngStream root(cfg.seed);
    DegreeReductionResult out;
    out.rulers = NodeSet(n);
    out.alive = NodeSet(n);
    out.alive.insert_all();

    // Mirrors the pipeline: isolated nodes leave before the step count is
    // taken from the max degree.
    for (uint32_t u = 0; u < n; ++u) {
        if (g.degree(u) == 0) out.alive.erase(u);
    }
    if (out.alive.empty()) return out;
    out.steps = reduction_step_count(g.max_degree(), n, cfg.alpha);

    for (uint32_t j = 1; j <= out.steps; ++j) {
        double rate = reduction_sample_rate(g.max_degree(), j);
        RngStream srng = root.fork(kTagReduction).fork(j);
        NodeSet sampled(n);
        out.alive.for_each([&](uint32_t u) {
            if (srng.accept(srng.at(u), rate)) sampled.insert(u);
        });
        std::vector<uint64_t> edges;
        g.for_each_edge([&](uint32_t u, uint32_t v) {
            if (sampled.test(u) && sampled.test(v)) edges.push_back(pack_edge(u, v));
        });
        NodeSet mis = greedy_over_edges(edges, sampled, {});
        out.rulers |= mis;

        NodeSet removed = sampled;
        sampled.for_each([&](uint32_t u) {
            for (uint32_t v : g.neighbors(u)) {
                if (out.alive.test(v)) removed.insert(v);
            }
        });
        out.step_detail.push_back({rate, out.alive, sampled, mis, edges.size()});
        out.alive.subtract(removed);
    }
    return out;
}

RunResult parallel_two_ruling_set(const Graph& g, const AlgoConfig& cfg,
                                  PipelineDetail* detail) {
    GraphSource src(g);
    return run_pipeline(src, cfg, CostModel::none, detail);
}

}  // namespace rs2
