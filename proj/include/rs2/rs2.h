/* Public C interface to the 2-ruling-set library.
 *
 * Usage pattern: build or load a graph, run it under one of the execution
 * models, read the results, free the handles. All functions returning
 * rs2_status report RS2_OK (0) on success and a negative code on failure;
 * rs2_last_error() describes the most recent failure on the calling thread.
 * Output parameters are untouched on failure. Handles are not thread-safe;
 * distinct handles may be used from distinct threads freely.
 */
#ifndef RS2_H
#define RS2_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define RS2_API __declspec(dllexport)
#else
#define RS2_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum rs2_status {
    RS2_OK = 0,
    RS2_ERR_INVALID_ARGUMENT = -1,
    RS2_ERR_IO = -2,
    RS2_ERR_PARSE = -3,
    RS2_ERR_CONTRACT = -4,
    RS2_ERR_BUFFER_TOO_SMALL = -5,
    RS2_ERR_UNKNOWN = -99
} rs2_status;

typedef enum rs2_harness {
    RS2_HARNESS_NONE = 0,   /* uncosted in-memory execution */
    RS2_HARNESS_STREAM = 1, /* semi-streaming passes over the edge list */
    RS2_HARNESS_CLIQUE = 2  /* congested-clique rounds */
} rs2_harness;

typedef struct rs2_config {
    double gamma;      /* support threshold coefficient, default 1.0 */
    double c;          /* set-aside crowding coefficient, default 1.0 */
    double alpha;      /* degree-reduction target exponent, default 0.1 */
    int32_t d_min;     /* heavy-neighbor floor cutoff, default 2 */
    uint64_t seed;     /* randomness root, default 0 */
    double budget_k;   /* gathered-subgraph budget in edges per node, default 8.0 */
} rs2_config;

typedef struct rs2_graph rs2_graph;
typedef struct rs2_result rs2_result;

/* Library version string, static storage. */
RS2_API const char* rs2_version(void);

/* Message for the calling thread's most recent error; static empty string if
 * none. The pointer stays valid until the thread's next failing call. */
RS2_API const char* rs2_last_error(void);

/* Fills cfg with defaults. */
RS2_API rs2_status rs2_config_init(rs2_config* cfg);

/* Loads a config JSON file (keys gamma, c, alpha, seed, budget_K, d_min; all
 * optional, unknown keys rejected). */
RS2_API rs2_status rs2_config_from_json_file(const char* path, rs2_config* cfg);

/* Builds a graph on n nodes from edge_count endpoint pairs laid out flat as
 * u0,v0,u1,v1,... Parallel edges collapse, self-loops are dropped. */
RS2_API rs2_status rs2_graph_from_edges(uint32_t n, const uint32_t* endpoints,
                                        size_t edge_count, rs2_graph** out);

/* Loads the edge-list text format ('#' comments, optional "n <count>" first
 * line, "u v" per line). */
RS2_API rs2_status rs2_graph_from_file(const char* path, rs2_graph** out);

/* Generates a graph from a spec string such as "erdos-renyi:n=1024,avgdeg=8".
 * Families: matching, star-forest, d-regular, erdos-renyi, power-law,
 * bad-bipartite. */
RS2_API rs2_status rs2_graph_generate(const char* spec, uint64_t seed, rs2_graph** out);

RS2_API void rs2_graph_free(rs2_graph* g);

RS2_API uint32_t rs2_graph_node_count(const rs2_graph* g);
RS2_API uint64_t rs2_graph_edge_count(const rs2_graph* g);
RS2_API uint32_t rs2_graph_degree(const rs2_graph* g, uint32_t node);
RS2_API uint32_t rs2_graph_max_degree(const rs2_graph* g);

/* Writes the graph in the edge-list text format. */
RS2_API rs2_status rs2_graph_save(const rs2_graph* g, const char* path);

/* Runs the 2-ruling-set algorithm under the chosen harness. cfg may be NULL
 * for defaults. */
RS2_API rs2_status rs2_run(const rs2_graph* g, const rs2_config* cfg,
                           rs2_harness harness, rs2_result** out);

RS2_API void rs2_result_free(rs2_result* r);

RS2_API uint64_t rs2_result_ruling_size(const rs2_result* r);

/* Copies the ruling set's node ids (ascending) into out, which must hold
 * capacity entries; fails with RS2_ERR_BUFFER_TOO_SMALL if the set is larger. */
RS2_API rs2_status rs2_result_ruling(const rs2_result* r, uint32_t* out, size_t capacity);

/* Coverage witness for one node: *ruler is a ruling-set node within 2 hops,
 * *dist the hop count (0 for rulers). */
RS2_API rs2_status rs2_result_witness(const rs2_result* r, uint32_t node,
                                      uint32_t* ruler, uint32_t* dist);

/* Cost readings. Passes are meaningful for the stream harness, rounds for the
 * clique harness; both read 0 under RS2_HARNESS_NONE. */
RS2_API uint64_t rs2_result_passes(const rs2_result* r);
RS2_API uint64_t rs2_result_rounds(const rs2_result* r);
RS2_API uint64_t rs2_result_peak_words(const rs2_result* r);
RS2_API uint64_t rs2_result_max_gathered_edges(const rs2_result* r);
RS2_API uint32_t rs2_result_max_luby_iters(const rs2_result* r);
RS2_API uint64_t rs2_result_total_luby_iters(const rs2_result* r);
RS2_API uint32_t rs2_result_reduction_steps(const rs2_result* r);
RS2_API size_t rs2_result_budget_violations(const rs2_result* r);

/* Full result as JSON (schema documented in the README). The string is owned
 * by the result handle and freed with it. */
RS2_API rs2_status rs2_result_json(rs2_result* r, const char** out);

/* Checks that the member_count node ids in members form an independent set
 * covering every node within beta hops. ok receives 1/0; when not ok and
 * witness is non-NULL, witness[0], witness[1] receive either the endpoints of
 * a violating edge or (uncovered_node, UINT32_MAX). */
RS2_API rs2_status rs2_verify_ruling_set(const rs2_graph* g, const uint32_t* members,
                                         size_t member_count, uint32_t beta, int* ok,
                                         uint32_t* witness);

/* Runs the structural-bound check battery on g and returns a JSON array
 * (lemma, d, measured, bound, status, seed per entry). Free with
 * rs2_string_free. */
RS2_API rs2_status rs2_lemma_checks_json(const rs2_graph* g, const rs2_config* cfg,
                                         char** out);

RS2_API void rs2_string_free(char* s);

#ifdef __cplusplus
}
#endif

#endif /* RS2_H */
