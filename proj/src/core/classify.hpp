#pragma once

#include <bit>
#include <cmath>
#include <cstdint>
#include <limits>
#include <vector>

#include "graph.hpp"

namespace rs2 {

// Good/bad labels with power-of-two degree buckets.
//
// A node u with degree d >= 2 is good when sum over neighbors v of
// 1/sqrt(deg(v)) reaches gamma * log2(d); nodes of degree 0 or 1 are good
// unconditionally. Bad nodes carry bucket b = floor(log2 d), grouping degrees
// [2^b, 2^(b+1)).
//
// The sum is accumulated in 32-bit fixed point: each neighbor contributes
// round(2^32 / sqrt(deg(v))) as an integer. Integer addition commutes, so the
// label is independent of the order neighbors are visited in. That exactness
// is what keeps the adjacency, streaming, and clique evaluations identical.
struct Classification {
    double gamma = 1.0;
    std::vector<uint32_t> deg;
    std::vector<uint64_t> sum_fp;     // fixed-point sums, 32 fractional bits
    std::vector<int8_t> code;         // kGood or bucket index

    static constexpr int8_t kGood = -1;

    bool is_good(uint32_t u) const { return code[u] == kGood; }
    bool is_bad(uint32_t u) const { return code[u] != kGood; }
    int bucket(uint32_t u) const { return code[u]; }

    // Signed distance of u's support sum from its goodness threshold, in
    // plain double units. Values within 1e-9 of zero mark near-threshold
    // nodes whose label could move under a different rounding scheme.
    double margin(uint32_t u) const {
        if (deg[u] <= 1) return std::numeric_limits<double>::infinity();
        return std::ldexp(static_cast<double>(sum_fp[u]), -32) - threshold(deg[u], gamma);
    }

    uint64_t near_threshold_count(double eps = 1e-9) const;

    // Fixed-point support contribution of one neighbor of degree d >= 1.
    static uint64_t term_fp(uint32_t d) {
        return static_cast<uint64_t>(std::llround(std::ldexp(1.0 / std::sqrt(static_cast<double>(d)), 32)));
    }

    static double threshold(uint32_t d, double gamma) {
        return gamma * std::log2(static_cast<double>(d));
    }

    static int8_t label_from(uint32_t d, uint64_t sum_fp, double gamma) {
        if (d <= 1) return kGood;
        if (static_cast<double>(sum_fp) >= std::ldexp(threshold(d, gamma), 32)) return kGood;
        return static_cast<int8_t>(31 - std::countl_zero(d));
    }
};

// Labels every node of g using its adjacency lists.
Classification classify_nodes(const Graph& g, double gamma);

// Set-aside eligibility threshold for bucket b: a bad node of bucket b is set
// aside when some neighbor sees at least c * sqrt(2^b) * max(b, 1)^5 bucket-b
// bad nodes. Computed from integer b so the value is exact and portable.
double setaside_threshold(int bucket, double c);

}  // namespace rs2
