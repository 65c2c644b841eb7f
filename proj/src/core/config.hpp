#pragma once

#include <cstdint>
#include <string>

namespace rs2 {

// Tunables for the ruling-set pipeline.
//
//   gamma      support threshold coefficient in the good/bad test
//   c_setaside coefficient in the crowded-neighbor set-aside rule
//   alpha      degree-reduction target: reduce until max degree <= n^alpha
//   d_min      smallest degree at which the heavy-neighbor floor is asserted
//   seed       root of all randomness for one run
//   budget_k   per-phase gathered-subgraph budget, in edges per node
struct AlgoConfig {
    double gamma = 1.0;
    double c_setaside = 1.0;
    double alpha = 0.1;
    int32_t d_min = 2;
    uint64_t seed = 0;
    double budget_k = 8.0;

    // Throws on out-of-range values: gamma, c_setaside, budget_k positive,
    // alpha strictly inside (0, 0.125), d_min >= 2.
    void validate() const;
};

// JSON object form, keys: gamma, c, alpha, seed, budget_K, d_min. All keys
// optional (defaults above); unknown keys are rejected.
AlgoConfig config_from_json_text(const std::string& text);
AlgoConfig config_from_json_file(const std::string& path);
std::string config_to_json_text(const AlgoConfig& cfg);

}  // namespace rs2
