// Acceptance gate: runs every deliverable criterion end to end and prints one
// PASS/FAIL line per criterion. Exits with the number of failed criteria.
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <string>
#include <vector>

#include "core/account.hpp"
#include "core/generate.hpp"
#include "core/graph.hpp"
#include "core/harness.hpp"
#include "core/mis.hpp"
#include "core/ruling.hpp"
#include "core/verify.hpp"

using namespace rs2;

namespace {

int g_failures = 0;

void report(int k, const char* name, bool ok, const std::string& detail) {
    std::printf("[%2d] %s %s: %s\n", k, ok ? "PASS" : "FAIL", name, detail.c_str());
    std::fflush(stdout);
    if (!ok) ++g_failures;
}

NodeSet all_nodes(const Graph& g) {
    NodeSet s(g.node_count());
    s.insert_all();
    return s;
}

uint64_t edges_within(const Graph& g, const NodeSet& s) {
    uint64_t count = 0;
    s.for_each([&](uint32_t u) {
        for (uint32_t v : g.neighbors(u)) {
            if (v > u && s.test(v)) ++count;
        }
    });
    return count;
}

bool same_ruling_and_witness(const RunResult& a, const RunResult& b) {
    if (!(a.ruling == b.ruling)) return false;
    for (size_t i = 0; i < a.witness.size(); ++i) {
        if (a.witness[i].ruler != b.witness[i].ruler) return false;
        if (a.witness[i].dist != b.witness[i].dist) return false;
    }
    return true;
}

struct Family {
    const char* name;
    bool randomized;  // regenerate per seed instead of reusing one instance
    std::string (*spec)(uint32_t n);
};

const Family kFamilies[] = {
    {"matching", false, [](uint32_t n) { return "matching:n=" + std::to_string(n); }},
    {"star-forest", false,
     [](uint32_t n) { return "star-forest:n=" + std::to_string(n) + ",arms=4"; }},
    {"d-regular", false,
     [](uint32_t n) { return "d-regular:n=" + std::to_string(n) + ",d=16"; }},
    {"erdos-renyi", true,
     [](uint32_t n) { return "erdos-renyi:n=" + std::to_string(n) + ",avgdeg=8"; }},
    {"power-law", true,
     [](uint32_t n) { return "power-law:n=" + std::to_string(n) + ",exp=2.5"; }},
    {"bad-bipartite", false,
     [](uint32_t n) {
         return "bad-bipartite:left=" + std::to_string(3 * n / 4) +
                ",ldeg=4,hubs=" + std::to_string(n / 4);
     }},
};

std::string sqrt_regular_spec(uint32_t n) {
    auto d = static_cast<uint32_t>(std::lround(std::sqrt(double(n))));
    return "d-regular:n=" + std::to_string(n) + ",d=" + std::to_string(d);
}

}  // namespace

int main() {
    const uint32_t kSizes[] = {1u << 8, 1u << 10, 1u << 12, 1u << 14, 1u << 16};

    // ---- 1: every run yields a verified 2-ruling set, at every scale -------
    // (also feeds 8: the Luby iteration bound over the same corpus)
    uint64_t runs = 0, invalid = 0;
    uint64_t luby_checked = 0, luby_violations = 0;
    double luby_worst = 0.0;
    auto t0 = std::chrono::steady_clock::now();
    {
        const int kSeeds = 34;
        for (size_t f = 0; f < std::size(kFamilies); ++f) {
            for (size_t zi = 0; zi < std::size(kSizes); ++zi) {
                uint32_t n = kSizes[zi];
                Graph fixed;
                if (!kFamilies[f].randomized) {
                    fixed = generate_graph(kFamilies[f].spec(n), 0);
                }
                for (int s = 0; s < kSeeds; ++s) {
                    uint64_t gseed = (f * 1000003 + zi) * 101 + uint64_t(s);
                    const Graph& g = kFamilies[f].randomized
                                         ? (fixed = generate_graph(kFamilies[f].spec(n), gseed))
                                         : fixed;
                    AlgoConfig cfg;
                    cfg.seed = gseed * 31 + 7;
                    RunResult res = parallel_two_ruling_set(g, cfg);
                    ++runs;
                    if (!verify_ruling_set(g, res.ruling, 2).ok) ++invalid;
                    double bound = 8.0 * std::log2(double(g.node_count()));
                    for (const auto& tr : res.trace) {
                        if (tr.luby_iters == 0) continue;
                        ++luby_checked;
                        double ratio = double(tr.luby_iters) / bound;
                        luby_worst = std::max(luby_worst, ratio);
                        if (ratio > 1.0) ++luby_violations;
                    }
                }
            }
        }
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    {
        char buf[160];
        std::snprintf(buf, sizeof buf,
                      "%llu/%llu runs valid across 6 families, n=256..65536 (%.1fs)",
                      (unsigned long long)(runs - invalid), (unsigned long long)runs, secs);
        report(1, "validity-at-scale", invalid == 0 && runs >= 1000, buf);
    }

    // ---- 2: stream pass count is a constant of the degree profile ----------
    {
        bool ok = true;
        std::string detail;
        for (uint32_t n : kSizes) {
            Graph g = generate_graph("matching:n=" + std::to_string(n), 0);
            RunResult res = run_streaming(g, AlgoConfig{});
            if (res.account.passes != 30) ok = false;
        }
        for (uint32_t n : kSizes) {
            Graph g = generate_graph(sqrt_regular_spec(n), 0);
            RunResult res = run_streaming(g, AlgoConfig{});
            if (res.reduction_steps != 9 || res.account.passes != 48) ok = false;
        }
        report(2, "stream-pass-schedule", ok,
               ok ? "matching sweeps at 30 passes, sqrt-degree regular at 48, n=256..65536"
                  : "pass totals moved with input size");
    }

    // ---- 3: stream memory stays within 16 words per node -------------------
    {
        uint64_t checked = 0, over = 0, worst_n = 0;
        double worst = 0.0;
        auto probe = [&](const std::string& spec, uint32_t n, int seeds) {
            for (int s = 0; s < seeds; ++s) {
                Graph g = generate_graph(spec, uint64_t(s) + 50);
                AlgoConfig cfg;
                cfg.seed = uint64_t(s);
                RunResult res = run_streaming(g, cfg);
                ++checked;
                double ratio = double(res.account.peak_words) / (16.0 * n);
                if (ratio > worst) {
                    worst = ratio;
                    worst_n = n;
                }
                if (res.account.peak_words > 16ull * n || !res.violations.empty()) ++over;
            }
        };
        for (uint32_t n : {1u << 8, 1u << 12}) {
            probe("erdos-renyi:n=" + std::to_string(n) + ",avgdeg=8", n, 20);
            probe("matching:n=" + std::to_string(n), n, 20);
            probe("star-forest:n=" + std::to_string(n) + ",arms=4", n, 20);
        }
        probe("erdos-renyi:n=65536,avgdeg=8", 1u << 16, 20);
        probe("matching:n=65536", 1u << 16, 20);
        char buf[160];
        std::snprintf(buf, sizeof buf,
                      "%llu runs, peak %.2f of the 16n budget (at n=%llu), %llu over",
                      (unsigned long long)checked, worst, (unsigned long long)worst_n,
                      (unsigned long long)over);
        report(3, "stream-word-budget", over == 0, buf);
    }

    // ---- 4: clique rounds are input-oblivious and overflows are rare -------
    {
        bool ok = true;
        for (uint32_t n : {1u << 8, 1u << 10, 1u << 12, 1u << 14}) {
            Graph g = generate_graph("matching:n=" + std::to_string(n), 0);
            if (run_congested_clique(g, AlgoConfig{}).account.rounds != 80) ok = false;
            Graph h = generate_graph(sqrt_regular_spec(n), 0);
            if (run_congested_clique(h, AlgoConfig{}).account.rounds != 188) ok = false;
        }
        uint64_t with_violation = 0;
        const int kTrials = 100;
        for (int s = 0; s < kTrials; ++s) {
            Graph g = generate_graph("erdos-renyi:n=4096,avgdeg=8", uint64_t(s));
            AlgoConfig cfg;
            cfg.seed = uint64_t(s) + 1;
            RunResult res = run_congested_clique(g, cfg);
            if (!res.violations.empty()) ++with_violation;
            uint64_t planned =
                planned_clique_rounds(res.reduction_steps, cfg.budget_k, 4096);
            if (res.violations.empty() && res.account.rounds != planned) ok = false;
        }
        char buf[160];
        std::snprintf(buf, sizeof buf,
                      "80 + 12i rounds at every size; %llu/%d random runs overflowed a gather",
                      (unsigned long long)with_violation, kTrials);
        report(4, "clique-round-schedule", ok && with_violation <= kTrials / 100, buf);
    }

    // ---- 5: gathered subgraphs fit the 8n edge budget ----------------------
    {
        uint64_t over = 0, checked = 0;
        for (double gamma : {1.0, 2.0}) {
            for (double c : {1.0, 2.0}) {
                for (int s = 0; s < 100; ++s) {
                    Graph g = generate_graph("erdos-renyi:n=2048,avgdeg=8", uint64_t(s));
                    AlgoConfig cfg;
                    cfg.gamma = gamma;
                    cfg.c_setaside = c;
                    cfg.seed = uint64_t(s) * 11 + 3;
                    RunResult res = run_streaming(g, cfg);
                    ++checked;
                    if (res.max_gathered_edges() > 8ull * 2048) ++over;
                }
            }
        }
        // The sampling operator itself on a 64-regular graph: the expected
        // sampled subgraph carries about n/2 edges; the budget allows 2n.
        Graph reg = generate_graph("d-regular:n=16384,d=64", 0);
        NodeSet all = all_nodes(reg);
        double total = 0.0;
        const int kSamp = 100;
        for (int s = 0; s < kSamp; ++s) {
            RngStream rng = RngStream(uint64_t(s)).fork(kTagMainSample).fork(1);
            NodeSet vsamp = sample_support_set(reg, all, rng);
            total += double(edges_within(reg, vsamp));
        }
        double mean = total / kSamp;
        bool ok = over == 0 && mean <= 2.0 * 16384;
        char buf[160];
        std::snprintf(buf, sizeof buf,
                      "%llu runs within 8n; mean sampled subgraph %.0f edges vs 2n=%d",
                      (unsigned long long)checked, mean, 2 * 16384);
        report(5, "gather-budget", ok, buf);
    }

    // ---- 6: bad nodes always have the promised heavy neighborhood ----------
    {
        struct Probe {
            const char* spec;
            double gamma;
        };
        const Probe kProbes[] = {
            {"d-regular:n=1024,d=4", 1.1},
            {"erdos-renyi:n=500,avgdeg=12", 1.0},
            {"erdos-renyi:n=500,avgdeg=40", 1.0},
            {"power-law:n=600,exp=2.3", 1.0},
            {"power-law:n=600,exp=3.0", 1.0},
            {"bad-bipartite:left=256,ldeg=4,hubs=16", 1.0},
        };
        uint64_t violations = 0, checked = 0;
        for (const auto& p : kProbes) {
            for (uint64_t s = 0; s < 5; ++s) {
                Graph g = generate_graph(p.spec, s);
                auto r = check_heavy_neighbor_floor(g, all_nodes(g), p.gamma, 2, s);
                ++checked;
                violations += uint64_t(r.measured);
            }
        }
        char buf[160];
        std::snprintf(buf, sizeof buf, "%llu graphs, %llu bad nodes missing heavy neighbors",
                      (unsigned long long)checked, (unsigned long long)violations);
        report(6, "heavy-neighbor-floor", violations == 0, buf);
    }

    // ---- 7: good nodes miss a sampled neighbor at most at rate d^(-g/2) ----
    {
        Graph g = generate_graph("d-regular:n=4096,d=256", 0);
        auto reports = check_good_missed_sample_rate(g, 2.0, 25, 424242);
        bool ok = reports.size() == 1 && reports[0].d && *reports[0].d == 256 &&
                  reports[0].status == LemmaReport::Status::pass &&
                  reports[0].measured <= reports[0].bound;
        char buf[160];
        if (ok) {
            std::snprintf(buf, sizeof buf,
                          "25 trials on 256-regular at gamma 2: miss rate %.2e vs bound %.2e",
                          reports[0].measured, reports[0].bound);
        } else {
            std::snprintf(buf, sizeof buf, "unexpected report shape or a cleared bound");
        }
        report(7, "missed-sample-rate", ok, buf);
    }

    // ---- 8: Luby always finishes within 8 log2(n) iterations ---------------
    {
        char buf[160];
        std::snprintf(buf, sizeof buf,
                      "%llu Luby executions over the scale corpus, worst at %.2f of bound",
                      (unsigned long long)luby_checked, luby_worst);
        report(8, "luby-iteration-bound", luby_violations == 0 && luby_checked > 0, buf);
    }

    // ---- 9: both independent-set routines are maximal on random graphs -----
    {
        RngStream rng(777);
        uint64_t bad = 0;
        const int kGraphs = 200;
        for (int i = 0; i < kGraphs; ++i) {
            uint32_t n = 1 + uint32_t(rng.bounded_at(uint64_t(i) * 2, 50));
            double p = 0.05 + 0.30 * double(rng.at(uint64_t(i) * 2 + 1) >> 40) / double(1 << 24);
            std::vector<uint64_t> edges;
            RngStream erng = rng.fork(uint64_t(i) + 1);
            for (uint32_t u = 0; u < n; ++u) {
                for (uint32_t v = u + 1; v < n; ++v) {
                    if (erng.accept(erng.at(u, v), p)) edges.push_back(pack_edge(u, v));
                }
            }
            Graph g = Graph::from_packed_edges(n, edges);
            NodeSet all = all_nodes(g);

            NodeSet greedy = greedy_over_edges(edges, all, {});
            if (!is_maximal_independent_set(g, greedy)) ++bad;

            NodeSet phase_one(n);
            for (uint32_t u = 0; u < n; ++u) {
                if (rng.at(uint64_t(i), u) & 1) phase_one.insert(u);
            }
            LubyRunRecord rec =
                luby_over_edges(edges, all, phase_one, RngStream(uint64_t(i)).fork(3));
            if (!is_maximal_independent_set(g, rec.mis)) ++bad;
        }
        char buf[160];
        std::snprintf(buf, sizeof buf, "%d random graphs (n<=50), %llu non-maximal outputs",
                      kGraphs, (unsigned long long)bad);
        report(9, "mis-maximality", bad == 0, buf);
    }

    // ---- 10: iteration residue is only uncrowded bad nodes -----------------
    {
        uint64_t offenders = 0, iterations = 0;
        auto probe = [&](const std::string& spec, uint64_t gseed, uint64_t aseed) {
            Graph g = generate_graph(spec, gseed);
            AlgoConfig cfg;
            cfg.seed = aseed;
            PipelineDetail detail;
            parallel_two_ruling_set(g, cfg, &detail);
            for (const auto& it : detail.mains) {
                offenders += uint64_t(check_residual_only_bad(g, it, cfg, aseed).measured);
                ++iterations;
            }
        };
        for (uint64_t s = 0; s < 50; ++s) probe("erdos-renyi:n=400,avgdeg=10", s, s);
        for (uint64_t s = 0; s < 50; ++s) {
            probe("bad-bipartite:left=256,ldeg=4,hubs=16", 0, s * 7 + 1);
        }
        char buf[160];
        std::snprintf(buf, sizeof buf, "%llu iterations audited, %llu covered-rule offenders",
                      (unsigned long long)iterations, (unsigned long long)offenders);
        report(10, "residual-purity", offenders == 0, buf);
    }

    // ---- 11: all three execution modes agree node for node -----------------
    {
        const char* kSpecs[] = {
            "matching:n=300",
            "erdos-renyi:n=500,avgdeg=12",
            "bad-bipartite:left=256,ldeg=4,hubs=16",
            "power-law:n=500,exp=2.5",
            "star-forest:n=400,arms=5",
        };
        uint64_t pairs = 0, mismatches = 0;
        for (const char* spec : kSpecs) {
            for (uint64_t s = 0; s < 10; ++s) {
                Graph g = generate_graph(spec, s + 300);
                AlgoConfig cfg;
                cfg.seed = s;
                RunResult direct = parallel_two_ruling_set(g, cfg);
                RunResult stream = run_streaming(g, cfg);
                RunResult clique = run_congested_clique(g, cfg);
                pairs += 2;
                if (!same_ruling_and_witness(direct, stream)) ++mismatches;
                if (!same_ruling_and_witness(direct, clique)) ++mismatches;
            }
        }
        char buf[160];
        std::snprintf(buf, sizeof buf, "%llu cross-model comparisons, %llu mismatches",
                      (unsigned long long)pairs, (unsigned long long)mismatches);
        report(11, "cross-model-agreement", mismatches == 0, buf);
    }

    std::printf("acceptance: %d/11 criteria passed\n", 11 - g_failures);
    return g_failures;
}
