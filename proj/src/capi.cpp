#include "rs2/rs2.h"

#include <cstring>
#include <new>
#include <string>

#include "core/config.hpp"
#include "core/error.hpp"
#include "core/generate.hpp"
#include "core/graph.hpp"
#include "core/harness.hpp"
#include "core/jsonio.hpp"
#include "core/ruling.hpp"
#include "core/verify.hpp"

struct rs2_graph {
    rs2::Graph g;
};

struct rs2_result {
    rs2::RunResult r;
    std::string json_cache;
};

namespace {

thread_local std::string t_last_error;

const char* store_error(const std::string& msg) {
    t_last_error = msg;
    return t_last_error.c_str();
}

// Maps C++ exceptions at the boundary onto status codes.
template <class F>
rs2_status guarded(F f) {
    try {
        f();
        return RS2_OK;
    } catch (const rs2::Error& e) {
        store_error(e.what());
        return static_cast<rs2_status>(static_cast<int>(e.code()));
    } catch (const std::bad_alloc&) {
        store_error("out of memory");
        return RS2_ERR_UNKNOWN;
    } catch (const std::exception& e) {
        store_error(e.what());
        return RS2_ERR_UNKNOWN;
    }
}

rs2_status invalid(const char* msg) {
    store_error(msg);
    return RS2_ERR_INVALID_ARGUMENT;
}

rs2::AlgoConfig to_cpp(const rs2_config* cfg) {
    if (!cfg) return {};
    rs2::AlgoConfig out;
    out.gamma = cfg->gamma;
    out.c_setaside = cfg->c;
    out.alpha = cfg->alpha;
    out.d_min = cfg->d_min;
    out.seed = cfg->seed;
    out.budget_k = cfg->budget_k;
    return out;
}

}  // namespace

extern "C" {

const char* rs2_version(void) { return "1.0.0"; }

const char* rs2_last_error(void) { return t_last_error.c_str(); }

rs2_status rs2_config_init(rs2_config* cfg) {
    if (!cfg) return invalid("cfg is NULL");
    rs2::AlgoConfig d;
    cfg->gamma = d.gamma;
    cfg->c = d.c_setaside;
    cfg->alpha = d.alpha;
    cfg->d_min = d.d_min;
    cfg->seed = d.seed;
    cfg->budget_k = d.budget_k;
    return RS2_OK;
}

rs2_status rs2_config_from_json_file(const char* path, rs2_config* cfg) {
    if (!path || !cfg) return invalid("path/cfg is NULL");
    return guarded([&] {
        rs2::AlgoConfig c = rs2::config_from_json_file(path);
        cfg->gamma = c.gamma;
        cfg->c = c.c_setaside;
        cfg->alpha = c.alpha;
        cfg->d_min = c.d_min;
        cfg->seed = c.seed;
        cfg->budget_k = c.budget_k;
    });
}

rs2_status rs2_graph_from_edges(uint32_t n, const uint32_t* endpoints, size_t edge_count,
                                rs2_graph** out) {
    if (!out || (edge_count > 0 && !endpoints)) return invalid("NULL argument");
    return guarded([&] {
        auto g = rs2::Graph::from_edge_pairs(n, {endpoints, edge_count * 2});
        *out = new rs2_graph{std::move(g)};
    });
}

rs2_status rs2_graph_from_file(const char* path, rs2_graph** out) {
    if (!path || !out) return invalid("NULL argument");
    return guarded([&] { *out = new rs2_graph{rs2::load_edge_list_file(path)}; });
}

rs2_status rs2_graph_generate(const char* spec, uint64_t seed, rs2_graph** out) {
    if (!spec || !out) return invalid("NULL argument");
    return guarded([&] { *out = new rs2_graph{rs2::generate_graph(spec, seed)}; });
}

void rs2_graph_free(rs2_graph* g) { delete g; }

uint32_t rs2_graph_node_count(const rs2_graph* g) { return g ? g->g.node_count() : 0; }

uint64_t rs2_graph_edge_count(const rs2_graph* g) { return g ? g->g.edge_count() : 0; }

uint32_t rs2_graph_degree(const rs2_graph* g, uint32_t node) {
    if (!g || node >= g->g.node_count()) return 0;
    return g->g.degree(node);
}

uint32_t rs2_graph_max_degree(const rs2_graph* g) { return g ? g->g.max_degree() : 0; }

rs2_status rs2_graph_save(const rs2_graph* g, const char* path) {
    if (!g || !path) return invalid("NULL argument");
    return guarded([&] { rs2::save_edge_list_file(g->g, path); });
}

rs2_status rs2_run(const rs2_graph* g, const rs2_config* cfg, rs2_harness harness,
                   rs2_result** out) {
    if (!g || !out) return invalid("NULL argument");
    return guarded([&] {
        rs2::AlgoConfig c = to_cpp(cfg);
        rs2::RunResult r;
        switch (harness) {
            case RS2_HARNESS_NONE: r = rs2::parallel_two_ruling_set(g->g, c); break;
            case RS2_HARNESS_STREAM: r = rs2::run_streaming(g->g, c); break;
            case RS2_HARNESS_CLIQUE: r = rs2::run_congested_clique(g->g, c); break;
            default: rs2::throw_invalid("unknown harness");
        }
        *out = new rs2_result{std::move(r), {}};
    });
}

void rs2_result_free(rs2_result* r) { delete r; }

uint64_t rs2_result_ruling_size(const rs2_result* r) { return r ? r->r.ruling.count() : 0; }

rs2_status rs2_result_ruling(const rs2_result* r, uint32_t* out, size_t capacity) {
    if (!r || !out) return invalid("NULL argument");
    if (capacity < r->r.ruling.count()) {
        store_error("ruling buffer too small");
        return RS2_ERR_BUFFER_TOO_SMALL;
    }
    size_t i = 0;
    r->r.ruling.for_each([&](uint32_t u) { out[i++] = u; });
    return RS2_OK;
}

rs2_status rs2_result_witness(const rs2_result* r, uint32_t node, uint32_t* ruler,
                              uint32_t* dist) {
    if (!r || !ruler || !dist) return invalid("NULL argument");
    if (node >= r->r.n) return invalid("node out of range");
    *ruler = r->r.witness[node].ruler;
    *dist = r->r.witness[node].dist;
    return RS2_OK;
}

uint64_t rs2_result_passes(const rs2_result* r) {
    if (!r || r->r.account.model != rs2::CostModel::stream) return 0;
    return r->r.account.passes;
}

uint64_t rs2_result_rounds(const rs2_result* r) {
    if (!r || r->r.account.model != rs2::CostModel::clique) return 0;
    return r->r.account.rounds;
}

uint64_t rs2_result_peak_words(const rs2_result* r) {
    return r ? r->r.account.peak_words : 0;
}

uint64_t rs2_result_max_gathered_edges(const rs2_result* r) {
    return r ? r->r.max_gathered_edges() : 0;
}

uint32_t rs2_result_max_luby_iters(const rs2_result* r) {
    return r ? r->r.max_luby_iters() : 0;
}

uint64_t rs2_result_total_luby_iters(const rs2_result* r) {
    return r ? r->r.total_luby_iters() : 0;
}

uint32_t rs2_result_reduction_steps(const rs2_result* r) {
    return r ? r->r.reduction_steps : 0;
}

size_t rs2_result_budget_violations(const rs2_result* r) {
    return r ? r->r.violations.size() : 0;
}

rs2_status rs2_result_json(rs2_result* r, const char** out) {
    if (!r || !out) return invalid("NULL argument");
    return guarded([&] {
        if (r->json_cache.empty()) r->json_cache = rs2::result_to_json(r->r).dump(2);
        *out = r->json_cache.c_str();
    });
}

rs2_status rs2_verify_ruling_set(const rs2_graph* g, const uint32_t* members,
                                 size_t member_count, uint32_t beta, int* ok,
                                 uint32_t* witness) {
    if (!g || !ok || (member_count > 0 && !members)) return invalid("NULL argument");
    return guarded([&] {
        rs2::NodeSet s(g->g.node_count());
        for (size_t i = 0; i < member_count; ++i) {
            if (members[i] >= g->g.node_count()) rs2::throw_invalid("member out of range");
            if (s.test(members[i])) rs2::throw_invalid("duplicate member");
            s.insert(members[i]);
        }
        rs2::RulingCheck check = rs2::verify_ruling_set(g->g, s, beta);
        *ok = check.ok ? 1 : 0;
        if (!check.ok && witness) {
            if (check.violating_edge) {
                witness[0] = check.violating_edge->first;
                witness[1] = check.violating_edge->second;
            } else if (check.uncovered_node) {
                witness[0] = *check.uncovered_node;
                witness[1] = UINT32_MAX;
            } else {
                witness[0] = UINT32_MAX;
                witness[1] = UINT32_MAX;
            }
        }
    });
}

rs2_status rs2_lemma_checks_json(const rs2_graph* g, const rs2_config* cfg, char** out) {
    if (!g || !out) return invalid("NULL argument");
    return guarded([&] {
        auto reports = rs2::run_lemma_batch(g->g, to_cpp(cfg));
        std::string text = rs2::lemmas_to_json(reports).dump(2);
        char* buf = new char[text.size() + 1];
        std::memcpy(buf, text.c_str(), text.size() + 1);
        *out = buf;
    });
}

void rs2_string_free(char* s) { delete[] s; }

}  // extern "C"
