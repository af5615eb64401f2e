#pragma once

#include <cstdint>
#include <random>

#include "cliquepoly/graph.hpp"

namespace cliquepoly {

// All randomness comes from std::mt19937_64, whose output sequence is fixed by
// the C++ standard. Only raw 64-bit draws are used (standard distributions are
// implementation-defined), so streams are identical across platforms.
struct RngSpec {
    std::uint64_t seed = 0;
};

class Rng {
public:
    explicit Rng(RngSpec spec) : engine_(spec.seed) {}

    std::uint64_t next() { return engine_(); }

    // Uniform in [0, 1) from the top 53 bits of one draw.
    double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    // Uniform integer in [lo, hi] (inclusive); one draw.
    int uniform_int(int lo, int hi);

private:
    std::mt19937_64 engine_;
};

// Derives an independent seed for sub-stream `index` (splitmix64 finalizer).
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index);

// Each of the C(n,2) pairs (u < v, lexicographic) is included when one draw of
// rng.unit() is below p.
Graph random_gnp(int n, double p, Rng& rng);
Graph random_gnp(int n, double p, RngSpec spec);

} // namespace cliquepoly
