#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include "graph.hpp"

namespace rs2 {

// Generator spec text: "family:key=value,key=value". Families:
//
//   matching:n=N                      perfect matching on pairs (2i, 2i+1)
//   star-forest:n=N,arms=A            stars of A leaves packed into N nodes
//   d-regular:n=N,d=D                 circulant ring: offsets 1..D/2, plus the
//                                     antipode when D is odd (needs N even);
//                                     deterministic, seed unused
//   erdos-renyi:n=N,p=P               G(N, P); avgdeg=D may replace p (P=D/(N-1))
//   power-law:n=N,exp=B               configuration-model power law with
//                                     exponent B (dmin=, dmax= optional,
//                                     defaults 1 and floor(sqrt(N)))
//   bad-bipartite:left=L,ldeg=T,hubs=H  L nodes of degree T spread over H hub
//                                     nodes round-robin; deterministic
//
// A "seed=S" key in any family pins that family's randomness regardless of
// the seed argument.
struct GeneratorSpec {
    std::string family;
    std::map<std::string, std::string> params;

    static GeneratorSpec parse(const std::string& text);

    uint64_t require_u64(const std::string& key) const;
    uint64_t get_u64(const std::string& key, uint64_t fallback) const;
    double require_double(const std::string& key) const;
    std::optional<double> maybe_double(const std::string& key) const;
    std::optional<uint64_t> maybe_u64(const std::string& key) const;
};

Graph generate_graph(const GeneratorSpec& spec, uint64_t seed);
Graph generate_graph(const std::string& spec_text, uint64_t seed);

}  // namespace rs2
