#include "verify.hpp"

#include <algorithm>
#include <cmath>

#include "error.hpp"
#include "ruling.hpp"

namespace rs2 {

RulingCheck verify_ruling_set(const Graph& g, const NodeSet& s, uint32_t beta) {
    if (s.universe_size() != g.node_count()) throw_invalid("set universe mismatch");
    RulingCheck out;
    out.independent = true;
    g.for_each_edge([&](uint32_t u, uint32_t v) {
        if (out.independent && s.test(u) && s.test(v)) {
            out.independent = false;
            out.violating_edge = {u, v};
        }
    });
    out.covered = true;
    auto dist = bfs_distance(g, s, beta);
    for (uint32_t u = 0; u < g.node_count(); ++u) {
        if (dist[u] == kUnreached || dist[u] > beta) {
            out.covered = false;
            out.uncovered_node = u;
            break;
        }
    }
    if (s.empty() && g.node_count() > 0) out.covered = false;
    out.ok = out.independent && out.covered;
    return out;
}

std::pair<double, double> wilson_interval(uint64_t hits, uint64_t trials, double z) {
    if (trials == 0) return {0.0, 1.0};
    double nd = static_cast<double>(trials);
    double phat = static_cast<double>(hits) / nd;
    double z2 = z * z;
    double denom = 1.0 + z2 / nd;
    double center = (phat + z2 / (2.0 * nd)) / denom;
    double half = z * std::sqrt(phat * (1.0 - phat) / nd + z2 / (4.0 * nd * nd)) / denom;
    return {std::max(0.0, center - half), std::min(1.0, center + half)};
}

LemmaReport LemmaReport::make(std::string name, std::optional<int> d, double measured,
                              double bound, uint64_t seed) {
    LemmaReport r;
    r.lemma = std::move(name);
    r.d = d;
    r.measured = measured;
    r.bound = bound;
    r.seed = seed;
    r.status = measured <= bound ? Status::pass : Status::fail;
    return r;
}

namespace {

uint64_t edges_within(const Graph& g, const NodeSet& s) {
    uint64_t count = 0;
    s.for_each([&](uint32_t u) {
        for (uint32_t v : g.neighbors(u)) {
            if (v > u && s.test(v)) ++count;
        }
    });
    return count;
}

}  // namespace

LemmaReport check_sampled_subgraph_edges(const Graph& g, const NodeSet& sub,
                                         const NodeSet& vsamp, double budget_k,
                                         uint64_t seed) {
    NodeSet inside = vsamp;
    inside &= sub;
    double measured = static_cast<double>(edges_within(g, inside));
    double bound = budget_k * static_cast<double>(g.node_count());
    return LemmaReport::make("sampled-subgraph-edges", std::nullopt, measured, bound, seed);
}

LemmaReport check_setaside_subgraph_edges(const Graph& g, const NodeSet& vstar,
                                          double budget_k, uint64_t seed) {
    double measured = static_cast<double>(edges_within(g, vstar));
    double bound = budget_k * static_cast<double>(g.node_count());
    return LemmaReport::make("setaside-subgraph-edges", std::nullopt, measured, bound, seed);
}

LemmaReport check_final_subgraph_edges(const Graph& g, const NodeSet& uncovered,
                                       double budget_k, uint64_t seed) {
    double measured = static_cast<double>(edges_within(g, uncovered));
    double bound = budget_k * static_cast<double>(g.node_count());
    return LemmaReport::make("final-subgraph-edges", std::nullopt, measured, bound, seed);
}

std::vector<LemmaReport> check_bad_bucket_sizes(const Graph& g, const NodeSet& sub,
                                                double gamma, uint64_t seed) {
    Classification cls = classify_subset(g, sub, gamma);
    uint64_t members[32] = {};
    sub.for_each([&](uint32_t u) {
        if (cls.code[u] >= 0) members[cls.code[u]]++;
    });
    double nd = static_cast<double>(sub.count());
    std::vector<LemmaReport> out;
    for (int b = 0; b < 32; ++b) {
        if (members[b] == 0) continue;
        double lg = std::max(1.0, static_cast<double>(b));
        double bound = 2.0 * nd * lg * lg * lg * lg * lg / std::sqrt(std::ldexp(1.0, b));
        auto r = LemmaReport::make("bad-bucket-size", 1 << b,
                                   static_cast<double>(members[b]), bound, seed);
        if (bound >= nd) r.status = LemmaReport::Status::vacuous;
        out.push_back(std::move(r));
    }
    return out;
}

LemmaReport check_heavy_neighbor_floor(const Graph& g, const NodeSet& sub, double gamma,
                                       int32_t d_min, uint64_t seed) {
    Classification cls = classify_subset(g, sub, gamma);
    uint64_t violations = 0;
    sub.for_each([&](uint32_t u) {
        if (cls.code[u] < 0) return;
        uint32_t d = cls.deg[u];
        if (d < static_cast<uint32_t>(d_min)) return;
        double lg = std::log2(static_cast<double>(d));
        double heavy = static_cast<double>(d) * static_cast<double>(d) /
                       (4.0 * gamma * gamma * lg * lg);
        uint32_t have = 0;
        for (uint32_t v : g.neighbors(u)) {
            if (sub.test(v) && static_cast<double>(cls.deg[v]) >= heavy) ++have;
        }
        if (have < (d + 1) / 2) ++violations;
    });
    return LemmaReport::make("heavy-neighbor-floor", std::nullopt,
                             static_cast<double>(violations), 0.0, seed);
}

LemmaReport check_residual_only_bad(const Graph& g, const MainIterationDetail& it,
                                    const AlgoConfig& cfg, uint64_t seed) {
    NodeSet aliveH = it.alive;
    aliveH.subtract(it.isolated);
    Classification cls = classify_subset(g, aliveH, cfg.gamma);

    NodeSet uncovered = aliveH;
    uncovered.subtract(it.covered);

    // Census of bad-bucket neighbors for the buckets the uncovered nodes
    // occupy; crowding is coverage-independent so end-of-iteration sets give
    // the same verdict as mid-iteration ones.
    int slot_of[32];
    std::fill(std::begin(slot_of), std::end(slot_of), -1);
    std::vector<int> occupied;
    uncovered.for_each([&](uint32_t u) {
        if (cls.code[u] >= 0 && slot_of[cls.code[u]] < 0) {
            slot_of[cls.code[u]] = static_cast<int>(occupied.size());
            occupied.push_back(cls.code[u]);
        }
    });
    uint32_t n = g.node_count();
    std::vector<uint32_t> census(occupied.size() * static_cast<size_t>(n), 0);
    if (!occupied.empty()) {
        aliveH.for_each([&](uint32_t v) {
            for (uint32_t w : g.neighbors(v)) {
                if (!aliveH.test(w) || cls.code[w] < 0) continue;
                int s = slot_of[cls.code[w]];
                if (s >= 0) census[static_cast<size_t>(s) * n + v]++;
            }
        });
    }

    uint64_t offenders = 0;
    uncovered.for_each([&](uint32_t u) {
        if (cls.code[u] < 0) {
            ++offenders;  // a good node survived uncovered
            return;
        }
        int s = slot_of[cls.code[u]];
        double thr = setaside_threshold(cls.code[u], cfg.c_setaside);
        for (uint32_t v : g.neighbors(u)) {
            if (!aliveH.test(v)) continue;
            if (static_cast<double>(census[static_cast<size_t>(s) * n + v]) >= thr) {
                ++offenders;  // a crowded bad node survived uncovered
                return;
            }
        }
    });
    return LemmaReport::make("residual-only-bad", std::nullopt,
                             static_cast<double>(offenders), 0.0, seed);
}

LemmaReport check_reduction_residual_degree(const Graph& g,
                                            const std::vector<ReductionStepDetail>& steps,
                                            uint64_t seed) {
    double lg_n = std::log2(std::max(2.0, static_cast<double>(g.node_count())));
    double worst = 0.0;
    std::optional<int> worst_step;
    bool any_binding = false;
    for (size_t j = 0; j < steps.size(); ++j) {
        const auto& st = steps[j];
        NodeSet after = st.alive_before;
        st.sampled.for_each([&](uint32_t u) {
            after.erase(u);
            for (uint32_t v : g.neighbors(u)) {
                if (st.alive_before.test(v)) after.erase(v);
            }
        });
        uint32_t max_deg = 0;
        after.for_each([&](uint32_t u) {
            uint32_t d = 0;
            for (uint32_t v : g.neighbors(u)) d += after.test(v);
            max_deg = std::max(max_deg, d);
        });
        double cap = 8.0 * (1.0 / st.rate) * lg_n;
        if (cap >= static_cast<double>(g.node_count())) continue;  // trivially true
        any_binding = true;
        double ratio = static_cast<double>(max_deg) / cap;
        if (ratio > worst) {
            worst = ratio;
            worst_step = static_cast<int>(j + 1);
        }
    }
    auto r = LemmaReport::make("reduction-residual-degree", worst_step, worst, 1.0, seed);
    if (!any_binding) r.status = LemmaReport::Status::vacuous;
    return r;
}

std::vector<LemmaReport> check_good_missed_sample_rate(const Graph& g, double gamma,
                                                       uint32_t trials, uint64_t base_seed,
                                                       uint64_t min_nodes) {
    Classification cls = classify_nodes(g, gamma);
    NodeSet all(g.node_count());
    all.insert_all();

    std::vector<uint32_t> degrees;  // distinct degrees with enough good nodes
    {
        std::vector<uint64_t> count_of(g.max_degree() + 1, 0);
        for (uint32_t u = 0; u < g.node_count(); ++u) {
            if (cls.code[u] == Classification::kGood && cls.deg[u] >= 2) {
                count_of[cls.deg[u]]++;
            }
        }
        for (uint32_t d = 2; d < count_of.size(); ++d) {
            if (count_of[d] >= min_nodes) degrees.push_back(d);
        }
    }
    if (degrees.empty() || trials == 0) return {};

    std::vector<uint64_t> miss(degrees.size(), 0);
    std::vector<uint64_t> total(degrees.size(), 0);
    std::vector<int> slot(g.max_degree() + 1, -1);
    for (size_t i = 0; i < degrees.size(); ++i) slot[degrees[i]] = static_cast<int>(i);

    for (uint32_t t = 0; t < trials; ++t) {
        RngStream rng = RngStream(base_seed + t).fork(kTagMainSample).fork(1);
        NodeSet vsamp = sample_support_set(g, all, rng);
        for (uint32_t u = 0; u < g.node_count(); ++u) {
            if (cls.code[u] != Classification::kGood) continue;
            uint32_t d = cls.deg[u];
            if (d < 2 || slot[d] < 0) continue;
            total[slot[d]]++;
            bool hit = false;
            for (uint32_t v : g.neighbors(u)) {
                if (vsamp.test(v)) {
                    hit = true;
                    break;
                }
            }
            if (!hit) miss[slot[d]]++;
        }
    }

    std::vector<LemmaReport> out;
    for (size_t i = 0; i < degrees.size(); ++i) {
        double rate = total[i] ? static_cast<double>(miss[i]) / static_cast<double>(total[i])
                               : 0.0;
        double bound = std::pow(static_cast<double>(degrees[i]), -gamma / 2.0);
        auto [lo, hi] = wilson_interval(miss[i], total[i], 1.96);
        auto r = LemmaReport::make("good-missed-sample-rate",
                                   static_cast<int>(degrees[i]), rate, bound, base_seed);
        // Statistical bound: fail only when the Wilson interval clears it.
        r.status = lo <= bound ? LemmaReport::Status::pass : LemmaReport::Status::fail;
        if (bound >= 1.0) r.status = LemmaReport::Status::vacuous;
        out.push_back(std::move(r));
    }
    return out;
}

std::vector<LemmaReport> run_lemma_batch(const Graph& g, const AlgoConfig& cfg) {
    PipelineDetail detail;
    RunResult run = parallel_two_ruling_set(g, cfg, &detail);
    (void)run;
    std::vector<LemmaReport> out;

    if (!detail.reduction.empty()) {
        out.push_back(check_reduction_residual_degree(g, detail.reduction, cfg.seed));
    }
    for (const auto& it : detail.mains) {
        NodeSet aliveH = it.alive;
        aliveH.subtract(it.isolated);
        out.push_back(
            check_sampled_subgraph_edges(g, aliveH, it.vsamp, cfg.budget_k, cfg.seed));
        out.push_back(check_setaside_subgraph_edges(g, it.vstar, cfg.budget_k, cfg.seed));
        out.push_back(check_residual_only_bad(g, it, cfg, cfg.seed));
        auto buckets = check_bad_bucket_sizes(g, aliveH, cfg.gamma, cfg.seed);
        out.insert(out.end(), buckets.begin(), buckets.end());
        out.push_back(
            check_heavy_neighbor_floor(g, aliveH, cfg.gamma, cfg.d_min, cfg.seed));
    }
    out.push_back(
        check_final_subgraph_edges(g, detail.final_uncovered, cfg.budget_k, cfg.seed));
    auto missed = check_good_missed_sample_rate(g, cfg.gamma, 16, cfg.seed);
    out.insert(out.end(), missed.begin(), missed.end());
    return out;
}

}  // namespace rs2
