#pragma once

#include <cmath>
#include <cstdint>

namespace rs2 {

// Counter-based randomness built on the splitmix64 finalizer. Every draw is a
// pure function of (seed, fork tags, counters), so any two executions that ask
// for the same draw get the same bits regardless of evaluation order. That is
// what lets the in-memory, streaming, and clique harnesses agree bit for bit.
class RngStream {
public:
    RngStream() = default;

    explicit RngStream(uint64_t seed) : state_(mix(seed)) {}

    // Derives an independent child stream. Forking is associative-free by
    // design: fork(a).fork(b) differs from fork(b).fork(a).
    RngStream fork(uint64_t tag) const {
        return RngStream(from_state_tag, mix(state_ + tag * 0x9E3779B97F4A7C15ull));
    }

    // Stateless draw addressed by a single index.
    uint64_t at(uint64_t a) const { return mix(state_ + a * 0xD1342543DE82EF95ull); }

    // Stateless draw addressed by a pair (iteration, node id and the like).
    uint64_t at(uint64_t a, uint64_t b) const {
        return mix(mix(state_ + a * 0xD1342543DE82EF95ull) + b * 0xDA942042E4DD58B5ull);
    }

    // Uniform double in [0, 1) from a single-index draw.
    double unit_at(uint64_t a) const { return static_cast<double>(at(a) >> 11) * 0x1.0p-53; }

    // Bernoulli(p) decided by an addressed draw. p >= 1 always accepts and
    // p <= 0 always rejects; in between the acceptance region is the exact
    // dyadic rounding of p to 64 fractional bits.
    bool accept(uint64_t draw, double p) const {
        if (p >= 1.0) return true;
        if (p <= 0.0) return false;
        return draw < static_cast<uint64_t>(std::ldexp(p, 64));
    }

    // Uniform integer in [0, bound) via the fixed-point multiply reduction.
    // Slightly biased for bounds that do not divide 2^64; the bias is below
    // 2^-32 for every bound used here and keeps the draw a pure function.
    uint64_t bounded_at(uint64_t a, uint64_t bound) const {
        return static_cast<uint64_t>((static_cast<__uint128_t>(at(a)) * bound) >> 64);
    }

    static uint64_t mix(uint64_t z) {
        z += 0x9E3779B97F4A7C15ull;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

private:
    struct from_state_tag_t {};
    static constexpr from_state_tag_t from_state_tag{};

    RngStream(from_state_tag_t, uint64_t state) : state_(state) {}

    uint64_t state_ = 0;
};

// Fork tags for the phases of the ruling-set pipeline. Kept in one place so
// the harnesses and the replay checks agree on the addressing scheme.
enum : uint64_t {
    kTagReduction = 1,
    kTagMainSample = 2,
    kTagMainLuby = 3,
    kTagGenerate = 4,
};

}  // namespace rs2
