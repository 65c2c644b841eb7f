#include "graph.hpp"

#include <algorithm>
#include <charconv>
#include <deque>
#include <fstream>
#include <sstream>

#include "error.hpp"

namespace rs2 {

Graph Graph::from_packed_edges(uint32_t n, std::span<const uint64_t> edges) {
    std::vector<uint64_t> canon;
    canon.reserve(edges.size());
    for (uint64_t e : edges) {
        uint32_t a = edge_lo(e);
        uint32_t b = edge_hi(e);
        if (a >= n || b >= n) throw_invalid("edge endpoint out of range");
        if (a == b) continue;
        canon.push_back(pack_edge(a, b));
    }
    std::sort(canon.begin(), canon.end());
    canon.erase(std::unique(canon.begin(), canon.end()), canon.end());

    Graph g;
    g.n_ = n;
    g.offsets_.assign(static_cast<size_t>(n) + 1, 0);
    for (uint64_t e : canon) {
        g.offsets_[edge_lo(e) + 1]++;
        g.offsets_[edge_hi(e) + 1]++;
    }
    for (uint32_t u = 0; u < n; ++u) g.offsets_[u + 1] += g.offsets_[u];
    g.adj_.resize(canon.size() * 2);
    std::vector<uint64_t> cursor(g.offsets_.begin(), g.offsets_.end() - 1);
    for (uint64_t e : canon) {
        g.adj_[cursor[edge_lo(e)]++] = edge_hi(e);
        g.adj_[cursor[edge_hi(e)]++] = edge_lo(e);
    }
    // Sorted pack order inserts each neighbor list in ascending order for the
    // lo side; the hi side also ends up ascending because packs sort by lo.
    // The hi side still needs a sort when lo values interleave, so sort both.
    for (uint32_t u = 0; u < n; ++u) {
        std::sort(g.adj_.begin() + static_cast<ptrdiff_t>(g.offsets_[u]),
                  g.adj_.begin() + static_cast<ptrdiff_t>(g.offsets_[u + 1]));
        g.max_degree_ = std::max(g.max_degree_, g.degree(u));
    }
    return g;
}

Graph Graph::from_edge_pairs(uint32_t n, std::span<const uint32_t> flat_pairs) {
    if (flat_pairs.size() % 2 != 0) throw_invalid("odd endpoint count");
    std::vector<uint64_t> packed;
    packed.reserve(flat_pairs.size() / 2);
    for (size_t i = 0; i < flat_pairs.size(); i += 2) {
        uint32_t u = flat_pairs[i];
        uint32_t v = flat_pairs[i + 1];
        if (u >= n || v >= n) throw_invalid("edge endpoint out of range");
        if (u == v) continue;
        packed.push_back(pack_edge(u, v));
    }
    return from_packed_edges(n, packed);
}

bool Graph::has_edge(uint32_t u, uint32_t v) const {
    if (u >= n_ || v >= n_) return false;
    auto nb = neighbors(u);
    return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<uint64_t> Graph::packed_edges() const {
    std::vector<uint64_t> out;
    out.reserve(edge_count());
    for_each_edge([&](uint32_t u, uint32_t v) { out.push_back(pack_edge(u, v)); });
    return out;
}

uint32_t SubgraphView::local_of(uint32_t parent_id) const {
    auto it = std::lower_bound(to_parent.begin(), to_parent.end(), parent_id);
    if (it == to_parent.end() || *it != parent_id) throw_invalid("id not in subgraph");
    return static_cast<uint32_t>(it - to_parent.begin());
}

SubgraphView induced_subgraph(const Graph& g, const NodeSet& s) {
    if (s.universe_size() != g.node_count()) throw_invalid("subset universe mismatch");
    SubgraphView view;
    view.to_parent = s.members();
    std::vector<uint64_t> edges;
    for (uint32_t local = 0; local < view.to_parent.size(); ++local) {
        uint32_t u = view.to_parent[local];
        for (uint32_t v : g.neighbors(u)) {
            if (v > u && s.test(v)) {
                uint32_t vl = view.local_of(v);
                edges.push_back(pack_edge(local, vl));
            }
        }
    }
    view.graph =
        Graph::from_packed_edges(static_cast<uint32_t>(view.to_parent.size()), edges);
    return view;
}

std::vector<uint32_t> bfs_distance(const Graph& g, const NodeSet& sources, uint32_t radius) {
    if (sources.universe_size() != g.node_count()) throw_invalid("source universe mismatch");
    std::vector<uint32_t> dist(g.node_count(), kUnreached);
    std::deque<uint32_t> queue;
    sources.for_each([&](uint32_t u) {
        dist[u] = 0;
        queue.push_back(u);
    });
    while (!queue.empty()) {
        uint32_t u = queue.front();
        queue.pop_front();
        if (dist[u] >= radius) continue;
        for (uint32_t v : g.neighbors(u)) {
            if (dist[v] == kUnreached) {
                dist[v] = dist[u] + 1;
                queue.push_back(v);
            }
        }
    }
    return dist;
}

NodeSet two_hop_covered(const Graph& g, const NodeSet& s) {
    auto dist = bfs_distance(g, s, 2);
    NodeSet out(g.node_count());
    for (uint32_t u = 0; u < g.node_count(); ++u) {
        if (dist[u] <= 2) out.insert(u);
    }
    return out;
}

namespace {

// Strips comments and surrounding whitespace; empty result means skip.
std::string_view clean_line(std::string_view line) {
    size_t hash = line.find('#');
    if (hash != std::string_view::npos) line = line.substr(0, hash);
    size_t b = line.find_first_not_of(" \t\r");
    if (b == std::string_view::npos) return {};
    size_t e = line.find_last_not_of(" \t\r");
    return line.substr(b, e - b + 1);
}

uint32_t parse_u32(std::string_view tok, const std::string& name, size_t lineno) {
    uint32_t value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc() || ptr != tok.data() + tok.size()) {
        throw_parse(name + ":" + std::to_string(lineno) + ": bad integer '" +
                    std::string(tok) + "'");
    }
    return value;
}

std::vector<std::string_view> split_ws(std::string_view s) {
    std::vector<std::string_view> out;
    size_t i = 0;
    while (i < s.size()) {
        while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
        size_t j = i;
        while (j < s.size() && s[j] != ' ' && s[j] != '\t') ++j;
        if (j > i) out.push_back(s.substr(i, j - i));
        i = j;
    }
    return out;
}

}  // namespace

Graph load_edge_list(std::istream& in, const std::string& name) {
    std::vector<uint64_t> packed;
    bool have_header = false;
    bool first_content = true;
    uint64_t declared_n = 0;
    uint32_t max_id = 0;
    bool any_edge = false;

    std::string line;
    size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string_view body = clean_line(line);
        if (body.empty()) continue;
        auto toks = split_ws(body);
        if (first_content && toks.size() == 2 && toks[0] == "n") {
            declared_n = parse_u32(toks[1], name, lineno);
            have_header = true;
            first_content = false;
            continue;
        }
        first_content = false;
        if (toks.size() != 2) {
            throw_parse(name + ":" + std::to_string(lineno) + ": expected 'u v'");
        }
        uint32_t u = parse_u32(toks[0], name, lineno);
        uint32_t v = parse_u32(toks[1], name, lineno);
        if (have_header && (u >= declared_n || v >= declared_n)) {
            throw_parse(name + ":" + std::to_string(lineno) + ": id out of declared range");
        }
        max_id = std::max({max_id, u, v});
        any_edge = true;
        if (u != v) packed.push_back(pack_edge(u, v));
    }
    if (in.bad()) throw_io("read failure on " + name);

    uint32_t n = have_header ? static_cast<uint32_t>(declared_n)
                             : (any_edge ? max_id + 1 : 0);
    return Graph::from_packed_edges(n, packed);
}

Graph load_edge_list_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw_io("cannot open " + path);
    return load_edge_list(in, path);
}

void save_edge_list_file(const Graph& g, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw_io("cannot open " + path + " for writing");
    out << "n " << g.node_count() << "\n";
    g.for_each_edge([&](uint32_t u, uint32_t v) { out << u << " " << v << "\n"; });
    if (!out) throw_io("write failure on " + path);
}

}  // namespace rs2
