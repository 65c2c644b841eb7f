#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <fstream>
#include <sstream>

#include "core/error.hpp"
#include "core/graph.hpp"

using namespace rs2;

TEST_CASE("edge packing is canonical") {
    CHECK(pack_edge(3, 7) == pack_edge(7, 3));
    CHECK(edge_lo(pack_edge(7, 3)) == 3);
    CHECK(edge_hi(pack_edge(7, 3)) == 7);
}

TEST_CASE("construction collapses duplicates and drops self-loops") {
    std::vector<uint64_t> edges = {pack_edge(0, 1), pack_edge(1, 0), pack_edge(2, 2),
                                   pack_edge(1, 2), pack_edge(1, 2)};
    Graph g = Graph::from_packed_edges(4, edges);
    CHECK(g.node_count() == 4);
    CHECK(g.edge_count() == 2);
    CHECK(g.degree(0) == 1);
    CHECK(g.degree(1) == 2);
    CHECK(g.degree(2) == 1);
    CHECK(g.degree(3) == 0);
    CHECK(g.max_degree() == 2);
    CHECK(g.has_edge(0, 1));
    CHECK(g.has_edge(2, 1));
    CHECK(!g.has_edge(0, 2));
    CHECK(!g.has_edge(2, 2));
}

TEST_CASE("out-of-range endpoints are rejected") {
    std::vector<uint64_t> edges = {pack_edge(0, 5)};
    CHECK_THROWS_AS(Graph::from_packed_edges(3, edges), Error);
    std::vector<uint32_t> flat = {0, 3};
    CHECK_THROWS_AS(Graph::from_edge_pairs(3, flat), Error);
}

TEST_CASE("packed_edges round-trips") {
    std::vector<uint64_t> edges = {pack_edge(4, 1), pack_edge(0, 3), pack_edge(1, 2)};
    Graph g = Graph::from_packed_edges(5, edges);
    auto canon = g.packed_edges();
    REQUIRE(canon.size() == 3);
    CHECK(canon[0] == pack_edge(0, 3));
    CHECK(canon[1] == pack_edge(1, 2));
    CHECK(canon[2] == pack_edge(1, 4));
    Graph h = Graph::from_packed_edges(5, canon);
    CHECK(h.packed_edges() == canon);
}

TEST_CASE("neighbor lists are sorted") {
    std::vector<uint64_t> edges = {pack_edge(2, 9), pack_edge(2, 4), pack_edge(2, 7),
                                   pack_edge(2, 0)};
    Graph g = Graph::from_packed_edges(10, edges);
    auto nb = g.neighbors(2);
    REQUIRE(nb.size() == 4);
    CHECK(nb[0] == 0);
    CHECK(nb[1] == 4);
    CHECK(nb[2] == 7);
    CHECK(nb[3] == 9);
}

TEST_CASE("six-cycle breadth-first distances") {
    std::vector<uint64_t> edges;
    for (uint32_t u = 0; u < 6; ++u) edges.push_back(pack_edge(u, (u + 1) % 6));
    Graph g = Graph::from_packed_edges(6, edges);
    NodeSet src(6);
    src.insert(0);

    auto dist = bfs_distance(g, src);
    std::vector<uint32_t> want = {0, 1, 2, 3, 2, 1};
    CHECK(dist == want);

    auto capped = bfs_distance(g, src, 2);
    std::vector<uint32_t> want2 = {0, 1, 2, kUnreached, 2, 1};
    CHECK(capped == want2);

    NodeSet cov = two_hop_covered(g, src);
    CHECK(cov.count() == 5);
    CHECK(!cov.test(3));
}

TEST_CASE("multi-source distances take the nearest source") {
    std::vector<uint64_t> edges;
    for (uint32_t u = 0; u + 1 < 7; ++u) edges.push_back(pack_edge(u, u + 1));
    Graph path = Graph::from_packed_edges(7, edges);
    NodeSet src(7);
    src.insert(0);
    src.insert(6);
    auto dist = bfs_distance(path, src);
    std::vector<uint32_t> want = {0, 1, 2, 3, 2, 1, 0};
    CHECK(dist == want);
}

TEST_CASE("induced subgraph compacts ids in ascending order") {
    // 5-cycle plus a chord (1, 3).
    std::vector<uint64_t> edges;
    for (uint32_t u = 0; u < 5; ++u) edges.push_back(pack_edge(u, (u + 1) % 5));
    edges.push_back(pack_edge(1, 3));
    Graph g = Graph::from_packed_edges(5, edges);

    NodeSet s(5);
    s.insert(1);
    s.insert(3);
    s.insert(4);
    SubgraphView view = induced_subgraph(g, s);
    CHECK(view.graph.node_count() == 3);
    CHECK(view.to_parent == std::vector<uint32_t>{1, 3, 4});
    CHECK(view.local_of(3) == 1);
    // Surviving edges: (1,3) chord and (3,4); the (4,0) and (0,1) edges die.
    CHECK(view.graph.edge_count() == 2);
    CHECK(view.graph.has_edge(0, 1));
    CHECK(view.graph.has_edge(1, 2));
    CHECK(!view.graph.has_edge(0, 2));
}

TEST_CASE("induced subgraph composes with itself") {
    std::vector<uint64_t> edges;
    for (uint32_t u = 0; u < 12; ++u) {
        edges.push_back(pack_edge(u, (u + 1) % 12));
        edges.push_back(pack_edge(u, (u + 3) % 12));
    }
    Graph g = Graph::from_packed_edges(12, edges);
    NodeSet s(12);
    for (uint32_t u = 0; u < 12; u += 2) s.insert(u);
    SubgraphView a = induced_subgraph(g, s);

    // Direct edge check against the parent.
    a.graph.for_each_edge([&](uint32_t ul, uint32_t vl) {
        CHECK(g.has_edge(a.to_parent[ul], a.to_parent[vl]));
    });
    uint64_t direct = 0;
    g.for_each_edge([&](uint32_t u, uint32_t v) {
        if (s.test(u) && s.test(v)) ++direct;
    });
    CHECK(a.graph.edge_count() == direct);
}

TEST_CASE("edge list parsing with header and comments") {
    std::istringstream in(
        "# toy graph\n"
        "n 5\n"
        "0 1\n"
        "1 0   # duplicate orientation\n"
        "\n"
        "2 3\n");
    Graph g = load_edge_list(in, "toy");
    CHECK(g.node_count() == 5);
    CHECK(g.edge_count() == 2);
    CHECK(g.has_edge(0, 1));
    CHECK(g.has_edge(2, 3));
    CHECK(g.degree(4) == 0);
}

TEST_CASE("edge list without header sizes itself") {
    std::istringstream in("0 1\n5 2\n");
    Graph g = load_edge_list(in, "toy");
    CHECK(g.node_count() == 6);
    CHECK(g.edge_count() == 2);
}

TEST_CASE("edge list rejects malformed input") {
    {
        std::istringstream in("n 3\n0 7\n");
        CHECK_THROWS_AS(load_edge_list(in, "toy"), Error);
    }
    {
        std::istringstream in("0 1 2\n");
        CHECK_THROWS_AS(load_edge_list(in, "toy"), Error);
    }
    {
        std::istringstream in("a b\n");
        CHECK_THROWS_AS(load_edge_list(in, "toy"), Error);
    }
    CHECK_THROWS_AS(load_edge_list_file("/nonexistent/nowhere.txt"), Error);
}

TEST_CASE("edge list save and load round-trip") {
    std::vector<uint64_t> edges = {pack_edge(0, 1), pack_edge(1, 2), pack_edge(0, 4)};
    Graph g = Graph::from_packed_edges(6, edges);
    std::string path = "graph_roundtrip_tmp.txt";
    save_edge_list_file(g, path);
    Graph h = load_edge_list_file(path);
    CHECK(h.node_count() == 6);
    CHECK(h.packed_edges() == g.packed_edges());
    std::remove(path.c_str());
}

TEST_CASE("node set bookkeeping") {
    NodeSet s(130);
    CHECK(s.empty());
    s.insert(0);
    s.insert(64);
    s.insert(129);
    s.insert(129);
    CHECK(s.count() == 3);
    s.erase(64);
    s.erase(64);
    CHECK(s.count() == 2);
    CHECK(s.test(0));
    CHECK(!s.test(64));

    NodeSet t(130);
    t.insert(0);
    t.insert(1);
    NodeSet u = s;
    u |= t;
    CHECK(u.count() == 3);
    u.subtract(t);
    CHECK(u.count() == 1);
    CHECK(u.test(129));

    NodeSet all(130);
    all.insert_all();
    CHECK(all.count() == 130);
    CHECK(all.members().size() == 130);

    NodeSet wrong(5);
    CHECK_THROWS_AS(u |= wrong, Error);
}
