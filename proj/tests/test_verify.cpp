#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <map>

#include "core/generate.hpp"
#include "core/graph.hpp"
#include "core/ruling.hpp"
#include "core/verify.hpp"

using namespace rs2;

namespace {

Graph path_graph(uint32_t n) {
    std::vector<uint64_t> edges;
    for (uint32_t u = 0; u + 1 < n; ++u) edges.push_back(pack_edge(u, u + 1));
    return Graph::from_packed_edges(n, edges);
}

NodeSet set_of(uint32_t n, std::initializer_list<uint32_t> nodes) {
    NodeSet s(n);
    for (uint32_t u : nodes) s.insert(u);
    return s;
}

}  // namespace

TEST_CASE("wilson interval frozen values") {
    auto [lo0, hi0] = wilson_interval(0, 100, 1.96);
    CHECK(lo0 >= 0.0);
    CHECK(lo0 < 1e-12);
    CHECK(hi0 == doctest::Approx(0.0369951).epsilon(1e-4));

    auto [lo1, hi1] = wilson_interval(50, 100, 1.96);
    CHECK(lo1 == doctest::Approx(0.4038315).epsilon(1e-5));
    CHECK(lo1 + hi1 == doctest::Approx(1.0));

    auto [lo2, hi2] = wilson_interval(100, 100, 1.96);
    CHECK(hi2 == doctest::Approx(1.0));
    CHECK(hi2 <= 1.0);
    CHECK(lo2 == doctest::Approx(1.0 - 0.0369951).epsilon(1e-4));

    auto [le, he] = wilson_interval(0, 0, 1.96);
    CHECK(le == 0.0);
    CHECK(he == 1.0);

    // The interval always contains the point estimate.
    for (uint64_t hits : {0ull, 1ull, 7ull, 31ull, 64ull}) {
        auto [lo, hi] = wilson_interval(hits, 64, 1.96);
        double phat = static_cast<double>(hits) / 64.0;
        CHECK(lo <= phat);
        CHECK(hi >= phat);
    }
}

TEST_CASE("ruling-set checker reports the first defect it finds") {
    Graph p4 = path_graph(4);

    auto adjacent = verify_ruling_set(p4, set_of(4, {0, 1}), 2);
    CHECK(!adjacent.ok);
    CHECK(!adjacent.independent);
    REQUIRE(adjacent.violating_edge.has_value());
    CHECK(adjacent.violating_edge->first == 0);
    CHECK(adjacent.violating_edge->second == 1);

    auto too_far = verify_ruling_set(p4, set_of(4, {0}), 2);
    CHECK(!too_far.ok);
    CHECK(too_far.independent);
    CHECK(!too_far.covered);
    REQUIRE(too_far.uncovered_node.has_value());
    CHECK(*too_far.uncovered_node == 3);

    auto tight = verify_ruling_set(p4, set_of(4, {0}), 1);
    REQUIRE(tight.uncovered_node.has_value());
    CHECK(*tight.uncovered_node == 2);

    CHECK(verify_ruling_set(p4, set_of(4, {0, 2}), 2).ok);
    CHECK(verify_ruling_set(p4, set_of(4, {0, 3}), 2).ok);

    auto empty = verify_ruling_set(p4, NodeSet(4), 2);
    CHECK(!empty.ok);
    CHECK(empty.independent);
    CHECK(!empty.covered);

    Graph none = Graph::from_packed_edges(0, {});
    CHECK(verify_ruling_set(none, NodeSet(0), 2).ok);

    CHECK_THROWS(verify_ruling_set(p4, NodeSet(7), 2));
}

TEST_CASE("subgraph edge-count reports compare against the per-node budget") {
    Graph g = generate_graph("d-regular:n=64,d=4", 0);
    NodeSet all(64);
    all.insert_all();

    auto r = check_sampled_subgraph_edges(g, all, all, 8.0, 7);
    CHECK(r.lemma == "sampled-subgraph-edges");
    CHECK(r.measured == 128.0);  // 64 * 4 / 2
    CHECK(r.bound == 512.0);
    CHECK(r.status == LemmaReport::Status::pass);
    CHECK(r.seed == 7);

    auto tight = check_setaside_subgraph_edges(g, all, 0.5, 0);
    CHECK(tight.measured == 128.0);
    CHECK(tight.bound == 32.0);
    CHECK(tight.status == LemmaReport::Status::fail);

    NodeSet half(64);
    for (uint32_t u = 0; u < 32; ++u) half.insert(u);
    auto partial = check_final_subgraph_edges(g, half, 8.0, 0);
    CHECK(partial.measured < 128.0);
    CHECK(partial.status == LemmaReport::Status::pass);
}

TEST_CASE("bucket population bound is honest about being loose at small degree") {
    // 4-regular at gamma 1.1: support 2.0 misses the 2.2 threshold, so every
    // node lands in bucket 2. The stated bound, 2n * 32 / 2, dwarfs n itself;
    // the report must say vacuous rather than claim a meaningful pass.
    Graph g = generate_graph("d-regular:n=1024,d=4", 0);
    NodeSet all(1024);
    all.insert_all();
    auto reports = check_bad_bucket_sizes(g, all, 1.1, 3);
    REQUIRE(reports.size() == 1);
    CHECK(reports[0].lemma == "bad-bucket-size");
    REQUIRE(reports[0].d.has_value());
    CHECK(*reports[0].d == 4);
    CHECK(reports[0].measured == 1024.0);
    CHECK(reports[0].bound == doctest::Approx(32768.0));
    CHECK(reports[0].status == LemmaReport::Status::vacuous);

    // Same graph at gamma 1: support exactly meets the threshold, nobody is
    // bad, no bucket reports at all.
    CHECK(check_bad_bucket_sizes(g, all, 1.0, 0).empty());
}

TEST_CASE("bad nodes always carry the promised heavy neighbors") {
    std::vector<std::pair<std::string, double>> corpus = {
        {"d-regular:n=1024,d=4", 1.1},      // all nodes bad, floor easily met
        {"erdos-renyi:n=500,avgdeg=12", 1.0},
        {"erdos-renyi:n=500,avgdeg=40", 1.0},
        {"power-law:n=600,exp=2.3", 1.0},
        {"bad-bipartite:left=256,ldeg=4,hubs=16", 1.0},
    };
    for (const auto& [spec, gamma] : corpus) {
        CAPTURE(spec);
        for (uint64_t seed = 0; seed < 4; ++seed) {
            Graph g = generate_graph(spec, seed);
            NodeSet all(g.node_count());
            all.insert_all();
            auto r = check_heavy_neighbor_floor(g, all, gamma, 2, seed);
            CHECK(r.measured == 0.0);
            CHECK(r.status == LemmaReport::Status::pass);
        }
    }
}

TEST_CASE("nodes left uncovered by a main iteration are uncrowded bad nodes") {
    std::vector<std::string> specs = {
        "erdos-renyi:n=400,avgdeg=10",
        "bad-bipartite:left=256,ldeg=4,hubs=16",
    };
    for (const auto& spec : specs) {
        CAPTURE(spec);
        for (uint64_t seed = 0; seed < 5; ++seed) {
            Graph g = generate_graph(spec, seed);
            AlgoConfig cfg;
            cfg.seed = seed;
            PipelineDetail detail;
            parallel_two_ruling_set(g, cfg, &detail);
            for (const auto& it : detail.mains) {
                auto r = check_residual_only_bad(g, it, cfg, seed);
                CHECK(r.measured == 0.0);
                CHECK(r.status == LemmaReport::Status::pass);
            }
        }
    }
}

TEST_CASE("degree reduction meets its per-step residual-degree promise") {
    for (uint64_t seed = 0; seed < 4; ++seed) {
        Graph g = generate_graph("erdos-renyi:n=512,avgdeg=48", seed);
        AlgoConfig cfg;
        cfg.seed = seed;
        PipelineDetail detail;
        parallel_two_ruling_set(g, cfg, &detail);
        REQUIRE(!detail.reduction.empty());
        auto r = check_reduction_residual_degree(g, detail.reduction, seed);
        CHECK(r.lemma == "reduction-residual-degree");
        CHECK(r.status != LemmaReport::Status::fail);
        if (r.status == LemmaReport::Status::pass) CHECK(r.measured <= 1.0);
    }
}

TEST_CASE("good nodes miss a sampled neighbor at the promised rate") {
    // 256-regular at gamma 2 sits exactly on the good threshold, so the whole
    // graph is good with a miss bound of 1/256; the true miss probability is
    // near exp(-16), far below it.
    Graph g = generate_graph("d-regular:n=4096,d=256", 0);
    auto reports = check_good_missed_sample_rate(g, 2.0, 4, 99);
    REQUIRE(reports.size() == 1);
    CHECK(reports[0].lemma == "good-missed-sample-rate");
    REQUIRE(reports[0].d.has_value());
    CHECK(*reports[0].d == 256);
    CHECK(reports[0].bound == doctest::Approx(1.0 / 256.0));
    CHECK(reports[0].status == LemmaReport::Status::pass);
    CHECK(reports[0].measured <= reports[0].bound);
}

TEST_CASE("missed-sample rate matches the independence calculation") {
    // 4-regular circulant: neighborhoods are distinct nodes sampled at 1/2
    // each, so the miss probability is (1/2)^4. 16k samples pin the mean well
    // inside a quarter of its value.
    Graph g = generate_graph("d-regular:n=2048,d=4", 0);
    auto reports = check_good_missed_sample_rate(g, 1.0, 8, 123);
    REQUIRE(reports.size() == 1);
    CHECK(*reports[0].d == 4);
    CHECK(reports[0].bound == doctest::Approx(0.5));
    CHECK(reports[0].measured == doctest::Approx(0.0625).epsilon(0.25));
    CHECK(reports[0].status == LemmaReport::Status::pass);
}

TEST_CASE("missed-sample check skips degrees without a population") {
    Graph matching = generate_graph("matching:n=200", 0);  // all degree 1
    CHECK(check_good_missed_sample_rate(matching, 1.0, 4, 0).empty());
    Graph small = generate_graph("d-regular:n=64,d=4", 0);
    CHECK(check_good_missed_sample_rate(small, 1.0, 4, 0, 128).empty());
    CHECK(check_good_missed_sample_rate(small, 1.0, 0, 0).empty());
}

TEST_CASE("full lemma batch covers every stage and never fails on sane input") {
    for (const std::string spec :
         {"erdos-renyi:n=300,avgdeg=8", "bad-bipartite:left=128,ldeg=4,hubs=8"}) {
        CAPTURE(spec);
        Graph g = generate_graph(spec, 3);
        AlgoConfig cfg;
        cfg.seed = 3;
        auto reports = run_lemma_batch(g, cfg);
        std::map<std::string, int> count;
        for (const auto& r : reports) {
            count[r.lemma]++;
            CHECK(r.status != LemmaReport::Status::fail);
            CHECK(r.seed == 3);
        }
        CHECK(count["sampled-subgraph-edges"] == 2);
        CHECK(count["setaside-subgraph-edges"] == 2);
        CHECK(count["residual-only-bad"] == 2);
        CHECK(count["heavy-neighbor-floor"] == 2);
        CHECK(count["final-subgraph-edges"] == 1);
        CHECK(count["reduction-residual-degree"] == 1);
    }
}
