#include "generate.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>

#include "error.hpp"
#include "rng.hpp"

namespace rs2 {

GeneratorSpec GeneratorSpec::parse(const std::string& text) {
    GeneratorSpec spec;
    size_t colon = text.find(':');
    spec.family = text.substr(0, colon);
    if (spec.family.empty()) throw_parse("empty generator family");
    if (colon == std::string::npos) return spec;
    std::string rest = text.substr(colon + 1);
    size_t pos = 0;
    while (pos < rest.size()) {
        size_t comma = rest.find(',', pos);
        if (comma == std::string::npos) comma = rest.size();
        std::string item = rest.substr(pos, comma - pos);
        size_t eq = item.find('=');
        if (eq == std::string::npos || eq == 0) {
            throw_parse("generator parameter '" + item + "' is not key=value");
        }
        std::string key = item.substr(0, eq);
        if (spec.params.count(key)) throw_parse("duplicate generator key '" + key + "'");
        spec.params[key] = item.substr(eq + 1);
        pos = comma + 1;
    }
    return spec;
}

namespace {

uint64_t parse_u64_value(const std::string& key, const std::string& value) {
    uint64_t out = 0;
    auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
    if (ec != std::errc() || ptr != value.data() + value.size()) {
        throw_parse("generator key '" + key + "' needs an integer, got '" + value + "'");
    }
    return out;
}

double parse_double_value(const std::string& key, const std::string& value) {
    try {
        size_t used = 0;
        double out = std::stod(value, &used);
        if (used != value.size()) throw std::invalid_argument(value);
        return out;
    } catch (const std::exception&) {
        throw_parse("generator key '" + key + "' needs a number, got '" + value + "'");
    }
}

}  // namespace

uint64_t GeneratorSpec::require_u64(const std::string& key) const {
    auto it = params.find(key);
    if (it == params.end()) throw_parse("generator family '" + family + "' needs " + key + "=");
    return parse_u64_value(key, it->second);
}

uint64_t GeneratorSpec::get_u64(const std::string& key, uint64_t fallback) const {
    auto it = params.find(key);
    return it == params.end() ? fallback : parse_u64_value(key, it->second);
}

double GeneratorSpec::require_double(const std::string& key) const {
    auto it = params.find(key);
    if (it == params.end()) throw_parse("generator family '" + family + "' needs " + key + "=");
    return parse_double_value(key, it->second);
}

std::optional<double> GeneratorSpec::maybe_double(const std::string& key) const {
    auto it = params.find(key);
    if (it == params.end()) return std::nullopt;
    return parse_double_value(key, it->second);
}

std::optional<uint64_t> GeneratorSpec::maybe_u64(const std::string& key) const {
    auto it = params.find(key);
    if (it == params.end()) return std::nullopt;
    return parse_u64_value(key, it->second);
}

namespace {

uint32_t checked_n(uint64_t n) {
    if (n > 0x7FFFFFFFull) throw_invalid("node count too large");
    return static_cast<uint32_t>(n);
}

Graph gen_matching(const GeneratorSpec& spec) {
    uint32_t n = checked_n(spec.require_u64("n"));
    std::vector<uint64_t> edges;
    edges.reserve(n / 2);
    for (uint32_t i = 0; 2 * i + 1 < n; ++i) edges.push_back(pack_edge(2 * i, 2 * i + 1));
    return Graph::from_packed_edges(n, edges);
}

Graph gen_star_forest(const GeneratorSpec& spec) {
    uint32_t n = checked_n(spec.require_u64("n"));
    uint64_t arms = spec.require_u64("arms");
    if (arms == 0) throw_invalid("star-forest needs arms >= 1");
    std::vector<uint64_t> edges;
    for (uint64_t c = 0; c < n; c += arms + 1) {
        for (uint64_t leaf = c + 1; leaf <= c + arms && leaf < n; ++leaf) {
            edges.push_back(pack_edge(static_cast<uint32_t>(c), static_cast<uint32_t>(leaf)));
        }
    }
    return Graph::from_packed_edges(n, edges);
}

Graph gen_d_regular(const GeneratorSpec& spec) {
    uint32_t n = checked_n(spec.require_u64("n"));
    uint64_t d = spec.require_u64("d");
    if (d >= n) throw_invalid("d-regular needs d < n");
    if ((static_cast<uint64_t>(n) * d) % 2 != 0) {
        throw_invalid("d-regular needs n*d even");
    }
    // Circulant construction: exact regularity matters because the reduction
    // step count is a function of the max degree.
    std::vector<uint64_t> edges;
    edges.reserve(static_cast<size_t>(n) * d / 2);
    for (uint32_t u = 0; u < n; ++u) {
        for (uint64_t off = 1; off <= d / 2; ++off) {
            edges.push_back(pack_edge(u, static_cast<uint32_t>((u + off) % n)));
        }
        if (d % 2 == 1) {
            uint32_t v = static_cast<uint32_t>((u + n / 2) % n);
            if (u < v) edges.push_back(pack_edge(u, v));
        }
    }
    Graph g = Graph::from_packed_edges(n, edges);
    if (n > 0 && d > 0) {
        for (uint32_t u = 0; u < n; ++u) {
            if (g.degree(u) != d) throw_contract("circulant construction not regular");
        }
    }
    return g;
}

Graph gen_erdos_renyi(const GeneratorSpec& spec, uint64_t seed) {
    uint32_t n = checked_n(spec.require_u64("n"));
    double p;
    if (auto pv = spec.maybe_double("p")) {
        p = *pv;
    } else if (auto av = spec.maybe_double("avgdeg")) {
        p = n > 1 ? *av / static_cast<double>(n - 1) : 0.0;
    } else {
        throw_parse("erdos-renyi needs p= or avgdeg=");
    }
    if (!(p >= 0.0 && p <= 1.0)) throw_invalid("edge probability outside [0, 1]");

    std::vector<uint64_t> edges;
    if (p > 0.0 && n > 1) {
        RngStream rng = RngStream(seed).fork(kTagGenerate);
        if (p >= 1.0) {
            for (uint32_t u = 0; u < n; ++u) {
                for (uint32_t v = u + 1; v < n; ++v) edges.push_back(pack_edge(u, v));
            }
        } else {
            // Geometric gap skipping over the ordered pair list.
            double log_q = std::log1p(-p);
            uint64_t total = static_cast<uint64_t>(n) * (n - 1) / 2;
            uint64_t idx = 0;
            uint64_t draw = 0;
            uint32_t u = 0;
            uint64_t row_start = 0;            // index of pair (u, u+1)
            uint64_t row_len = n - 1;          // pairs in row u
            while (true) {
                double r = rng.unit_at(draw++);
                double skip = std::floor(std::log1p(-r) / log_q);
                idx += 1 + static_cast<uint64_t>(skip);
                if (idx > total) break;
                uint64_t t = idx - 1;  // 0-based pair index
                while (t >= row_start + row_len) {
                    row_start += row_len;
                    row_len -= 1;
                    u += 1;
                }
                uint32_t v = static_cast<uint32_t>(u + 1 + (t - row_start));
                edges.push_back(pack_edge(u, v));
            }
        }
    }
    return Graph::from_packed_edges(n, edges);
}

Graph gen_power_law(const GeneratorSpec& spec, uint64_t seed) {
    uint32_t n = checked_n(spec.require_u64("n"));
    double expnt = spec.require_double("exp");
    if (!(expnt > 1.0)) throw_invalid("power-law needs exp > 1");
    uint64_t dmin = spec.get_u64("dmin", 1);
    uint64_t dmax = spec.get_u64("dmax",
                                 static_cast<uint64_t>(std::floor(std::sqrt(static_cast<double>(n)))));
    if (dmax < dmin) throw_invalid("power-law needs dmax >= dmin");
    if (n == 0) return Graph::from_packed_edges(0, {});

    // Configuration model: target degree for rank i follows the Zipf tail
    // (n / (i + 1))^(1 / (exp - 1)), clamped to [dmin, dmax]; stubs are
    // paired by a uniform shuffle, self-loops and duplicates dropped.
    std::vector<uint32_t> target(n);
    for (uint32_t i = 0; i < n; ++i) {
        double w = std::pow(static_cast<double>(n) / (i + 1), 1.0 / (expnt - 1.0));
        uint64_t t = static_cast<uint64_t>(std::floor(w));
        t = std::clamp(t, dmin, dmax);
        if (t >= n) t = n - 1;
        target[i] = static_cast<uint32_t>(t);
    }
    uint64_t stub_total = 0;
    for (uint32_t t : target) stub_total += t;
    if (stub_total % 2 == 1) {
        target[0] += 1;  // keep the stub count even
        stub_total += 1;
    }
    std::vector<uint32_t> stubs;
    stubs.reserve(stub_total);
    for (uint32_t i = 0; i < n; ++i) {
        for (uint32_t k = 0; k < target[i]; ++k) stubs.push_back(i);
    }
    RngStream rng = RngStream(seed).fork(kTagGenerate);
    for (size_t i = stubs.size(); i > 1; --i) {
        size_t j = static_cast<size_t>(rng.bounded_at(i, i));
        std::swap(stubs[i - 1], stubs[j]);
    }
    std::vector<uint64_t> edges;
    edges.reserve(stubs.size() / 2);
    for (size_t k = 0; k + 1 < stubs.size(); k += 2) {
        if (stubs[k] != stubs[k + 1]) edges.push_back(pack_edge(stubs[k], stubs[k + 1]));
    }
    return Graph::from_packed_edges(n, edges);
}

Graph gen_bad_bipartite(const GeneratorSpec& spec) {
    uint64_t left = spec.require_u64("left");
    uint64_t ldeg = spec.require_u64("ldeg");
    uint64_t hubs = spec.require_u64("hubs");
    if (hubs == 0 || ldeg == 0) throw_invalid("bad-bipartite needs hubs >= 1 and ldeg >= 1");
    if (ldeg > hubs) throw_invalid("bad-bipartite needs ldeg <= hubs");
    uint32_t n = checked_n(hubs + left);
    std::vector<uint64_t> edges;
    edges.reserve(left * ldeg);
    for (uint64_t i = 0; i < left; ++i) {
        uint32_t u = static_cast<uint32_t>(hubs + i);
        for (uint64_t k = 0; k < ldeg; ++k) {
            uint32_t h = static_cast<uint32_t>((i + k) % hubs);
            edges.push_back(pack_edge(u, h));
        }
    }
    return Graph::from_packed_edges(n, edges);
}

}  // namespace

Graph generate_graph(const GeneratorSpec& spec, uint64_t seed) {
    uint64_t effective_seed = spec.get_u64("seed", seed);
    if (spec.family == "matching") return gen_matching(spec);
    if (spec.family == "star-forest") return gen_star_forest(spec);
    if (spec.family == "d-regular") return gen_d_regular(spec);
    if (spec.family == "erdos-renyi") return gen_erdos_renyi(spec, effective_seed);
    if (spec.family == "power-law") return gen_power_law(spec, effective_seed);
    if (spec.family == "bad-bipartite") return gen_bad_bipartite(spec);
    throw_parse("unknown generator family '" + spec.family + "'");
}

Graph generate_graph(const std::string& spec_text, uint64_t seed) {
    return generate_graph(GeneratorSpec::parse(spec_text), seed);
}

}  // namespace rs2
