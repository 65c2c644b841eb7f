#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "account.hpp"
#include "classify.hpp"
#include "config.hpp"
#include "error.hpp"
#include "graph.hpp"
#include "mis.hpp"
#include "nodeset.hpp"
#include "rng.hpp"
#include "scan.hpp"

namespace rs2 {

// How one node's 2-hop coverage is certified: the ruler it can point to and
// the hop distance (0 for rulers themselves).
struct CoverageWitness {
    uint32_t ruler = kUnreached;
    uint8_t dist = 255;
};

struct RunResult {
    uint32_t n = 0;
    uint32_t reduction_steps = 0;
    NodeSet ruling;
    std::vector<CoverageWitness> witness;
    std::vector<PhaseTrace> trace;
    std::vector<BudgetViolation> violations;
    AccountInfo account;

    uint32_t max_luby_iters() const;
    uint64_t total_luby_iters() const;
    uint64_t max_gathered_edges() const;
};

// Optional capture of intermediate sets for replay checks. All sets live in
// the original id space.
struct ReductionStepDetail {
    double rate = 0.0;
    NodeSet alive_before;
    NodeSet sampled;
    NodeSet mis;
    uint64_t gathered_edges = 0;
};

struct MainIterationDetail {
    NodeSet alive;          // nodes of this iteration's graph, isolated included
    NodeSet isolated;       // pre-joined degree-0 nodes
    Classification cls;     // labels for all alive nodes (sums retained)
    NodeSet vsamp;
    LubyRunRecord luby;
    NodeSet mis_sampled;
    NodeSet covered_mid;    // coverage within the iteration graph before set-aside
    NodeSet vstar;
    NodeSet mis_setaside;
    NodeSet covered;        // coverage within the iteration graph at iteration end
};

struct PipelineDetail {
    uint32_t max_degree = 0;
    std::vector<ReductionStepDetail> reduction;
    std::vector<MainIterationDetail> mains;
    NodeSet final_uncovered;
};

// Number of degree-reduction steps for a graph of max degree max_degree on n
// nodes: zero when max_degree already sits at or below n^alpha, otherwise the
// smallest i with (3/4)^i * log2(max_degree) <= (alpha/2) * log2(n), capped
// at ceil(log_{4/3}(2/alpha)) which suffices for every max_degree <= n.
uint32_t reduction_step_count(uint32_t max_degree, uint32_t n, double alpha);

// Sampling rate for reduction step j (1-based): 1 / max_degree^((3/4)^j).
double reduction_sample_rate(uint32_t max_degree, uint32_t step);

namespace scan_ops {

// Degree of every node inside `alive`; zero elsewhere.
template <class Source>
void degrees(const Source& src, const NodeSet& alive, std::vector<uint32_t>& deg) {
    std::fill(deg.begin(), deg.end(), 0);
    src.scan([&](uint32_t u, uint32_t v) {
        if (alive.test(u) && alive.test(v)) {
            deg[u]++;
            deg[v]++;
        }
    });
}

// Nodes of `alive` adjacent to at least one member of `from`.
template <class Source>
NodeSet neighbors_of(const Source& src, const NodeSet& alive, const NodeSet& from) {
    NodeSet out(alive.universe_size());
    src.scan([&](uint32_t u, uint32_t v) {
        if (!alive.test(u) || !alive.test(v)) return;
        if (from.test(u)) out.insert(v);
        if (from.test(v)) out.insert(u);
    });
    return out;
}

// Canonical edge list of the subgraph induced by s.
template <class Source>
std::vector<uint64_t> gather_subgraph(const Source& src, const NodeSet& s) {
    std::vector<uint64_t> out;
    src.scan([&](uint32_t u, uint32_t v) {
        if (s.test(u) && s.test(v)) out.push_back(pack_edge(u, v));
    });
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace scan_ops

// Runs the full ruling-set pipeline over an edge source. Every piece of
// cross-node information moves through whole-edge scans reported to the cost
// account, so the same code is simultaneously the in-memory reference, the
// semi-streaming execution, and the congested-clique execution; only the
// meter changes. The phase schedule is fixed up front by the reduction step
// count; phases run (and charge) even when their node sets are empty, which
// keeps pass and round totals independent of the randomness. The single
// exception: a graph with no edges resolves in the first pass.
template <class Source>
RunResult run_pipeline(const Source& src, const AlgoConfig& cfg, CostModel model,
                       PipelineDetail* detail = nullptr) {
    cfg.validate();
    const uint32_t n = src.node_count();
    CostAccount acct(model, n, cfg.budget_k);
    RngStream root(cfg.seed);

    RunResult res;
    res.n = n;
    res.ruling = NodeSet(n);
    res.witness.assign(n, CoverageWitness{});
    if (n == 0) {
        res.account = acct.info();
        return res;
    }

    NodeSet all(n);
    all.insert_all();
    NodeSet covered(n);
    NodeSet alive(n);
    std::vector<uint32_t> deg(n);

    auto finalize = [&]() {
        res.trace = acct.trace();
        res.violations = acct.violations();
        res.account = acct.info();
    };

    // Phase: init-degrees. Also the isolated-node short circuit: a node with
    // no edges anywhere rules itself.
    acct.begin_phase("init-degrees");
    acct.alloc_words(n);  // degree array, reused by later phases
    acct.alloc_words(n);  // blanket charge for all single-bit node flags
    scan_ops::degrees(src, all, deg);
    acct.scan_pass("degrees");
    uint64_t m = 0;
    uint32_t isolated0 = 0;
    for (uint32_t u = 0; u < n; ++u) m += deg[u];
    m /= 2;
    for (uint32_t u = 0; u < n; ++u) {
        if (deg[u] == 0) {
            res.ruling.insert(u);
            covered.insert(u);
            res.witness[u] = {u, 0};
            ++isolated0;
        } else {
            alive.insert(u);
        }
    }
    acct.end_phase(n, m, 0, isolated0);

    if (alive.empty()) {
        finalize();
        return res;
    }

    const uint32_t max_degree = *std::max_element(deg.begin(), deg.end());
    const uint32_t steps = reduction_step_count(max_degree, n, cfg.alpha);
    res.reduction_steps = steps;
    if (detail) detail->max_degree = max_degree;

    // Degree reduction: per step, a uniform sample at the step's rate, a
    // greedy independent set over the sampled subgraph, then the sample and
    // its whole neighborhood leave the graph.
    for (uint32_t j = 1; j <= steps; ++j) {
        acct.begin_phase("reduce-" + std::to_string(j));
        double rate = reduction_sample_rate(max_degree, j);
        RngStream srng = root.fork(kTagReduction).fork(j);
        NodeSet sampled(n);
        alive.for_each([&](uint32_t u) {
            if (srng.accept(srng.at(u), rate)) sampled.insert(u);
        });
        if (detail) {
            detail->reduction.push_back({rate, alive, sampled, NodeSet(n), 0});
        }
        auto edges = scan_ops::gather_subgraph(src, sampled);
        acct.alloc_words(edges.size());
        acct.gather_pass("gather-sampled", edges.size());
        NodeSet mis = greedy_over_edges(edges, sampled, {});
        acct.release_words(edges.size());
        acct.broadcast("independent-set");
        res.ruling |= mis;
        NodeSet removed = scan_ops::neighbors_of(src, alive, sampled);
        acct.scan_pass("removal-frontier");
        removed |= sampled;
        uint64_t newly = removed.count();
        covered |= removed;
        alive.subtract(removed);
        if (detail) {
            detail->reduction.back().mis = mis;
            detail->reduction.back().gathered_edges = edges.size();
        }
        acct.end_phase(sampled.count(), edges.size(), 0, newly);
    }

    // One main iteration: sample-and-conquer plus the set-aside from the
    // phase labels "mainK-sample" and "mainK-setaside".
    auto main_iteration = [&](uint32_t k) {
        std::string tag = "main" + std::to_string(k);

        acct.begin_phase(tag + "-sample");
        scan_ops::degrees(src, alive, deg);
        acct.scan_pass("degrees");
        NodeSet isolatedH(n);
        alive.for_each([&](uint32_t u) {
            if (deg[u] == 0) isolatedH.insert(u);
        });
        isolatedH.for_each([&](uint32_t u) {
            res.ruling.insert(u);
            covered.insert(u);
        });
        NodeSet aliveH = alive;
        aliveH.subtract(isolatedH);

        Classification cls;
        cls.gamma = cfg.gamma;
        acct.alloc_words(n);  // fixed-point support sums
        cls.sum_fp.assign(n, 0);
        src.scan([&](uint32_t u, uint32_t v) {
            if (!aliveH.test(u) || !aliveH.test(v)) return;
            cls.sum_fp[u] += Classification::term_fp(deg[v]);
            cls.sum_fp[v] += Classification::term_fp(deg[u]);
        });
        acct.scan_pass("classify");
        acct.alloc_words(2 * static_cast<uint64_t>(n));  // labels + degree snapshot
        cls.deg = deg;
        cls.code.assign(n, Classification::kGood);
        aliveH.for_each([&](uint32_t u) {
            cls.code[u] = Classification::label_from(deg[u], cls.sum_fp[u], cfg.gamma);
        });

        MainIterationDetail* md = nullptr;
        if (detail) {
            detail->mains.emplace_back();
            md = &detail->mains.back();
            md->alive = alive;
            md->isolated = isolatedH;
            md->cls = cls;  // keeps the sums for margin diagnostics
        }
        cls.sum_fp.clear();
        cls.sum_fp.shrink_to_fit();
        acct.release_words(n);

        RngStream smp = root.fork(kTagMainSample).fork(k);
        NodeSet vsamp(n);
        aliveH.for_each([&](uint32_t u) {
            double p = 1.0 / std::sqrt(static_cast<double>(deg[u]));
            if (smp.accept(smp.at(u), p)) vsamp.insert(u);
        });

        auto edges = scan_ops::gather_subgraph(src, vsamp);
        acct.alloc_words(edges.size());
        acct.gather_pass("gather-sampled", edges.size());
        NodeSet sampled_bad(n);
        vsamp.for_each([&](uint32_t u) {
            if (cls.code[u] != Classification::kGood) sampled_bad.insert(u);
        });
        LubyRunRecord rec = luby_over_edges(edges, vsamp, sampled_bad,
                                            root.fork(kTagMainLuby).fork(k));
        acct.release_words(edges.size());
        acct.broadcast("independent-set");
        res.ruling |= rec.mis;

        NodeSet mid = scan_ops::neighbors_of(src, aliveH, rec.mis);
        acct.scan_pass("cover-hop1");
        mid |= rec.mis;
        NodeSet covered_mid = scan_ops::neighbors_of(src, aliveH, mid);
        acct.scan_pass("cover-hop2");
        covered_mid |= mid;
        uint64_t newly = isolatedH.count() + covered_mid.count();
        covered |= covered_mid;
        if (md) {
            md->vsamp = vsamp;
            md->luby = rec;
            md->mis_sampled = rec.mis;
            md->covered_mid = covered_mid;
        }
        acct.end_phase(vsamp.count(), edges.size(), rec.iterations, newly);

        // Set-aside: good nodes that dodged the sample, and uncovered bad
        // nodes crowded at some neighbor, form V*; a deterministic greedy
        // independent set over V* joins the rulers.
        acct.begin_phase(tag + "-setaside");
        NodeSet samp_adj = scan_ops::neighbors_of(src, aliveH, vsamp);
        acct.scan_pass("sampled-adjacent");
        NodeSet vstar(n);
        aliveH.for_each([&](uint32_t u) {
            if (cls.code[u] == Classification::kGood && !samp_adj.test(u)) vstar.insert(u);
        });

        // Buckets that still hold an uncovered bad node; only those need
        // per-node census counters.
        int slot_of[32];
        std::fill(std::begin(slot_of), std::end(slot_of), -1);
        std::vector<int> occupied;
        aliveH.for_each([&](uint32_t u) {
            if (cls.code[u] != Classification::kGood && !covered_mid.test(u)) {
                int b = cls.code[u];
                if (slot_of[b] < 0) {
                    slot_of[b] = static_cast<int>(occupied.size());
                    occupied.push_back(b);
                }
            }
        });
        size_t nbuckets = occupied.size();
        std::vector<uint32_t> census(nbuckets * static_cast<size_t>(n), 0);
        acct.alloc_words(nbuckets * static_cast<uint64_t>(n));
        src.scan([&](uint32_t u, uint32_t v) {
            if (!aliveH.test(u) || !aliveH.test(v)) return;
            if (cls.code[u] >= 0 && slot_of[cls.code[u]] >= 0) {
                census[static_cast<size_t>(slot_of[cls.code[u]]) * n + v]++;
            }
            if (cls.code[v] >= 0 && slot_of[cls.code[v]] >= 0) {
                census[static_cast<size_t>(slot_of[cls.code[v]]) * n + u]++;
            }
        });
        acct.scan_pass("bucket-census");
        std::vector<double> thr(nbuckets);
        for (size_t s = 0; s < nbuckets; ++s) {
            thr[s] = setaside_threshold(occupied[s], cfg.c_setaside);
        }
        src.scan([&](uint32_t u, uint32_t v) {
            if (!aliveH.test(u) || !aliveH.test(v)) return;
            auto eval = [&](uint32_t a, uint32_t b) {
                // a uncovered bad, b its neighbor: a joins V* when b's census
                // for a's bucket reaches the crowding threshold.
                if (cls.code[a] < 0 || covered_mid.test(a)) return;
                int s = slot_of[cls.code[a]];
                if (s < 0) return;
                if (static_cast<double>(census[static_cast<size_t>(s) * n + b]) >= thr[s]) {
                    vstar.insert(a);
                }
            };
            eval(u, v);
            eval(v, u);
        });
        acct.scan_pass("setaside-eval");
        acct.release_words(nbuckets * static_cast<uint64_t>(n));

        auto edges2 = scan_ops::gather_subgraph(src, vstar);
        acct.alloc_words(edges2.size());
        acct.gather_pass("gather-setaside", edges2.size());
        NodeSet mstar = greedy_over_edges(edges2, vstar, {});
        acct.release_words(edges2.size());
        acct.broadcast("independent-set");
        res.ruling |= mstar;

        NodeSet rulers_k = rec.mis;
        rulers_k |= mstar;
        NodeSet hop1 = scan_ops::neighbors_of(src, aliveH, rulers_k);
        acct.scan_pass("cover-hop1");
        hop1 |= rulers_k;
        NodeSet covered_k = scan_ops::neighbors_of(src, aliveH, hop1);
        acct.scan_pass("cover-hop2");
        covered_k |= hop1;
        uint64_t before = covered.count();
        covered |= covered_k;
        uint64_t newly2 = covered.count() - before;
        if (md) {
            md->vstar = vstar;
            md->mis_setaside = mstar;
            md->covered = covered_k;
            md->covered |= isolatedH;
        }
        acct.end_phase(vstar.count(), edges2.size(), 0, newly2);

        acct.release_words(2 * static_cast<uint64_t>(n));  // labels + snapshot
    };

    // Recomputes global 2-hop coverage of the rulers found so far; everything
    // covered piecemeal above lies within it, so this only grows the set.
    auto recompute_uncovered = [&](uint32_t k) {
        acct.begin_phase("uncovered-" + std::to_string(k));
        NodeSet hop1 = scan_ops::neighbors_of(src, all, res.ruling);
        acct.scan_pass("cover-hop1");
        hop1 |= res.ruling;
        NodeSet hop2 = scan_ops::neighbors_of(src, all, hop1);
        acct.scan_pass("cover-hop2");
        hop2 |= hop1;
        uint64_t before = covered.count();
        covered |= hop2;
        acct.end_phase(0, 0, 0, covered.count() - before);
        alive = all;
        alive.subtract(covered);
    };

    main_iteration(1);
    recompute_uncovered(1);
    main_iteration(2);
    recompute_uncovered(2);

    // Residual cleanup: a deterministic maximal independent set over the
    // still-uncovered nodes puts every one of them within one hop of a ruler.
    acct.begin_phase("final-mis");
    if (detail) detail->final_uncovered = alive;
    auto edges = scan_ops::gather_subgraph(src, alive);
    acct.alloc_words(edges.size());
    acct.gather_pass("gather-uncovered", edges.size());
    NodeSet mis = greedy_over_edges(edges, alive, {});
    acct.release_words(edges.size());
    acct.broadcast("independent-set");
    res.ruling |= mis;
    uint64_t newly_final = alive.count();
    covered |= alive;
    acct.end_phase(alive.count(), edges.size(), 0, newly_final);

    // Witness: two min-fold scans label every node with a ruler at hop 1,
    // then every remaining node with the hop-1 witness of a neighbor.
    acct.begin_phase("witness");
    acct.alloc_words(n);  // witness rulers
    acct.alloc_words(n);  // candidate fold, released at phase end
    res.ruling.for_each([&](uint32_t u) { res.witness[u] = {u, 0}; });
    std::vector<uint32_t> cand(n, kUnreached);
    src.scan([&](uint32_t u, uint32_t v) {
        if (res.witness[u].dist == 0 && res.witness[v].dist != 0) {
            cand[v] = std::min(cand[v], u);
        }
        if (res.witness[v].dist == 0 && res.witness[u].dist != 0) {
            cand[u] = std::min(cand[u], v);
        }
    });
    acct.scan_pass("witness-hop1");
    for (uint32_t u = 0; u < n; ++u) {
        if (res.witness[u].dist != 0 && cand[u] != kUnreached) {
            res.witness[u] = {cand[u], 1};
        }
    }
    std::fill(cand.begin(), cand.end(), kUnreached);
    src.scan([&](uint32_t u, uint32_t v) {
        if (res.witness[u].dist == 1 && res.witness[v].dist > 1) {
            cand[v] = std::min(cand[v], res.witness[u].ruler);
        }
        if (res.witness[v].dist == 1 && res.witness[u].dist > 1) {
            cand[u] = std::min(cand[u], res.witness[v].ruler);
        }
    });
    acct.scan_pass("witness-hop2");
    for (uint32_t u = 0; u < n; ++u) {
        if (res.witness[u].dist == 255) {
            if (cand[u] == kUnreached) throw_contract("node left uncovered");
            res.witness[u] = {cand[u], 2};
        }
    }
    acct.release_words(n);
    acct.end_phase(0, 0, 0, 0);

    finalize();
    return res;
}

}  // namespace rs2
