#include "pipeline.hpp"

namespace rs2 {

uint32_t RunResult::max_luby_iters() const {
    uint32_t best = 0;
    for (const auto& t : trace) best = std::max(best, t.luby_iters);
    return best;
}

uint64_t RunResult::total_luby_iters() const {
    uint64_t total = 0;
    for (const auto& t : trace) total += t.luby_iters;
    return total;
}

uint64_t RunResult::max_gathered_edges() const {
    uint64_t best = 0;
    for (const auto& t : trace) {
        bool gathers = t.phase.rfind("reduce-", 0) == 0 || t.phase.rfind("main", 0) == 0 ||
                       t.phase == "final-mis";
        if (gathers) best = std::max(best, t.sub_edges);
    }
    return best;
}

uint32_t reduction_step_count(uint32_t max_degree, uint32_t n, double alpha) {
    if (n == 0 || max_degree <= 1) return 0;
    double lg_d = std::log2(static_cast<double>(max_degree));
    double lg_n = std::log2(static_cast<double>(n));
    if (lg_d <= alpha * lg_n) return 0;
    uint32_t cap = static_cast<uint32_t>(std::ceil(std::log(2.0 / alpha) / std::log(4.0 / 3.0)));
    double factor = 1.0;
    for (uint32_t j = 1; j <= cap; ++j) {
        factor *= 0.75;
        if (factor * lg_d <= (alpha / 2.0) * lg_n) return j;
    }
    return cap;
}

double reduction_sample_rate(uint32_t max_degree, uint32_t step) {
    double lg_d = std::log2(static_cast<double>(max_degree));
    double factor = 1.0;
    for (uint32_t j = 0; j < step; ++j) factor *= 0.75;
    return std::exp2(-factor * lg_d);
}

}  // namespace rs2
