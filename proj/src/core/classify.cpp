#include "classify.hpp"

#include <bit>
#include <limits>

namespace rs2 {

uint64_t Classification::near_threshold_count(double eps) const {
    uint64_t c = 0;
    for (uint32_t u = 0; u < deg.size(); ++u) {
        double m = margin(u);
        if (std::isfinite(m) && std::abs(m) < eps) ++c;
    }
    return c;
}

Classification classify_nodes(const Graph& g, double gamma) {
    uint32_t n = g.node_count();
    Classification cls;
    cls.gamma = gamma;
    cls.deg.resize(n);
    cls.sum_fp.assign(n, 0);
    cls.code.resize(n);
    for (uint32_t u = 0; u < n; ++u) cls.deg[u] = g.degree(u);
    g.for_each_edge([&](uint32_t u, uint32_t v) {
        cls.sum_fp[u] += Classification::term_fp(cls.deg[v]);
        cls.sum_fp[v] += Classification::term_fp(cls.deg[u]);
    });
    for (uint32_t u = 0; u < n; ++u) {
        cls.code[u] = Classification::label_from(cls.deg[u], cls.sum_fp[u], gamma);
    }
    return cls;
}

double setaside_threshold(int bucket, double c) {
    double d = std::ldexp(1.0, bucket);
    double lg = bucket >= 1 ? static_cast<double>(bucket) : 1.0;
    return c * std::sqrt(d) * lg * lg * lg * lg * lg;
}

}  // namespace rs2
