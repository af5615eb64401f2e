#pragma once

// Test-only reference computations. Nothing here calls the enumeration, the
// incidence builders or the identity checkers; everything is plain loops over
// adjacency bits and vertex subsets.

#include <array>
#include <cstdint>
#include <vector>

#include "cliquepoly/graph.hpp"
#include "cliquepoly/polynomial.hpp"
#include "cliquepoly/random.hpp"

namespace oracle {

namespace cp = cliquepoly;

inline bool subset_is_clique(const cp::Graph& g, std::uint64_t mask) {
    for (int u = 0; u < g.order(); ++u) {
        if (!((mask >> u) & 1U)) continue;
        for (int v = u + 1; v < g.order(); ++v)
            if (((mask >> v) & 1U) && !g.adjacent(u, v)) return false;
    }
    return true;
}

// Clique polynomial by subset enumeration (n <= 20).
inline cp::Polynomial clique_poly(const cp::Graph& g) {
    std::vector<cp::Int> c(static_cast<std::size_t>(g.order()) + 1, 0);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << g.order()); ++mask)
        if (subset_is_clique(g, mask)) ++c[static_cast<std::size_t>(__builtin_popcountll(mask))];
    return cp::Polynomial(std::move(c)).normalize();
}

inline cp::Int count_k(const cp::Graph& g, int k) { return clique_poly(g)[k]; }

// Vertices adjacent to every member of mask, by pairwise adjacency tests.
inline std::uint64_t common_neighbors(const cp::Graph& g, std::uint64_t mask) {
    std::uint64_t out = 0;
    for (int w = 0; w < g.order(); ++w) {
        bool all = true;
        for (int u = 0; u < g.order() && all; ++u)
            if ((mask >> u) & 1U) all = g.adjacent(u, w);
        if (all) out |= std::uint64_t{1} << w;
    }
    return out;
}

inline cp::Graph induced(const cp::Graph& g, std::uint64_t mask) {
    std::vector<int> keep;
    for (int v = 0; v < g.order(); ++v)
        if ((mask >> v) & 1U) keep.push_back(v);
    cp::Graph::Builder b(static_cast<int>(keep.size()));
    for (std::size_t i = 0; i < keep.size(); ++i)
        for (std::size_t j = i + 1; j < keep.size(); ++j)
            if (g.adjacent(keep[i], keep[j])) b.add_edge(static_cast<int>(i), static_cast<int>(j));
    return b.build();
}

inline cp::Graph remove_edges(const cp::Graph& g, const std::vector<std::pair<int, int>>& edges) {
    cp::Graph::Builder b(g.order());
    for (int u = 0; u < g.order(); ++u)
        for (int v = u + 1; v < g.order(); ++v) {
            bool removed = false;
            for (auto [a, c] : edges) removed = removed || (a == u && c == v) || (a == v && c == u);
            if (g.adjacent(u, v) && !removed) b.add_edge(u, v);
        }
    return b.build();
}

inline cp::Graph remove_vertex(const cp::Graph& g, int v) {
    std::uint64_t mask = (g.order() == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << g.order()) - 1);
    return induced(g, mask & ~(std::uint64_t{1} << v));
}

// Every triangle as a sorted triple, lexicographic order.
inline std::vector<std::array<int, 3>> triangles(const cp::Graph& g) {
    std::vector<std::array<int, 3>> out;
    for (int a = 0; a < g.order(); ++a)
        for (int b = a + 1; b < g.order(); ++b)
            for (int c = b + 1; c < g.order(); ++c)
                if (g.adjacent(a, b) && g.adjacent(a, c) && g.adjacent(b, c)) out.push_back({a, b, c});
    return out;
}

// Labelled graph on n vertices whose edge set is the bit pattern `code` over
// pairs in lexicographic order.
inline cp::Graph from_code(int n, std::uint64_t code) {
    cp::Graph::Builder b(n);
    int bit = 0;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v, ++bit)
            if ((code >> bit) & 1U) b.add_edge(u, v);
    return b.build();
}

// All labelled graphs on 0..max_n vertices.
inline std::vector<cp::Graph> all_small_graphs(int max_n) {
    std::vector<cp::Graph> out;
    for (int n = 0; n <= max_n; ++n) {
        const int pairs = n * (n - 1) / 2;
        for (std::uint64_t code = 0; code < (std::uint64_t{1} << pairs); ++code) out.push_back(from_code(n, code));
    }
    return out;
}

// Seeded G(n,p) corpus: `count` graphs, n in [n_min, n_max], p cycling through ps.
inline std::vector<cp::Graph> seeded_corpus(std::size_t count, int n_min, int n_max, const std::vector<double>& ps,
                                            std::uint64_t seed) {
    std::vector<cp::Graph> out;
    cp::Rng rng(cp::RngSpec{seed});
    for (std::size_t i = 0; i < count; ++i) {
        int n = rng.uniform_int(n_min, n_max);
        out.push_back(cp::random_gnp(n, ps[i % ps.size()], rng));
    }
    return out;
}

inline cp::Graph diamond() { return cp::Graph(4, {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}}); }
inline cp::Graph two_triangles() { return cp::Graph(6, {{0, 1}, {0, 2}, {1, 2}, {3, 4}, {3, 5}, {4, 5}}); }

} // namespace oracle

#ifdef DOCTEST_LIBRARY_INCLUDED
namespace doctest {
template <> struct StringMaker<cliquepoly::Polynomial> {
    static String convert(const cliquepoly::Polynomial& p) { return cliquepoly::to_string(p).c_str(); }
};
} // namespace doctest
#endif
