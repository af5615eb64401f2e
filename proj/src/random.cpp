#include "cliquepoly/random.hpp"

#include <string>

#include "cliquepoly/integer.hpp"

namespace cliquepoly {

int Rng::uniform_int(int lo, int hi) {
    if (hi < lo) throw PreconditionError("empty integer range");
    auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<int>(next() % span);
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

Graph random_gnp(int n, double p, Rng& rng) {
    if (!(p >= 0.0 && p <= 1.0)) throw PreconditionError("edge probability " + std::to_string(p) + " outside [0, 1]");
    if (n < 0 || n > kMaxVertices) throw PreconditionError("vertex count outside [0, 64]");
    Graph::Builder b(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng.unit() < p) b.add_edge(u, v);
    return b.build();
}

Graph random_gnp(int n, double p, RngSpec spec) {
    Rng rng(spec);
    return random_gnp(n, p, rng);
}

} // namespace cliquepoly
