#pragma once

#include <optional>
#include <vector>

#include "cliquepoly/graph.hpp"
#include "cliquepoly/integer.hpp"
#include "cliquepoly/polynomial.hpp"

namespace cliquepoly {

// A vertex set inducing a complete subgraph.
struct Clique {
    VertexSet vertices;

    int size() const { return vertices.size(); }
    std::vector<EdgeRef> edges() const;

    // Lexicographic order on the sorted vertex tuple.
    friend bool operator<(const Clique& a, const Clique& b);
    friend bool operator==(const Clique&, const Clique&) = default;
};

bool is_clique(const Graph& g, VertexSet s);

// "0-1-2"
std::string to_string(const Clique& q);

// Delta_1 .. Delta_omega, each list sorted lexicographically.
class CliqueCatalog {
public:
    CliqueCatalog() = default;
    explicit CliqueCatalog(std::vector<std::vector<Clique>> by_size) : by_size_(std::move(by_size)) {}

    // Largest k with a nonempty list (within the enumerated range).
    int max_size() const { return static_cast<int>(by_size_.size()); }
    // Empty for k outside [1, max_size()].
    const std::vector<Clique>& of_size(int k) const;
    Count count(int k) const { return of_size(k).size(); }

private:
    std::vector<std::vector<Clique>> by_size_;
};

// Depth-first extension of each clique by common neighbours above its largest
// vertex. Emits every clique exactly once, in lexicographic order per size.
CliqueCatalog enumerate_cliques(const Graph& g, std::optional<int> k_max = std::nullopt);

// Delta_k(G) by value.
std::vector<Clique> cliques_of_size(const Graph& g, int k);

// c_0 = 1, c_k = number of k-cliques; degree is omega(G).
struct CliquePolynomial {
    std::vector<Count> coeffs{1};

    int degree() const { return static_cast<int>(coeffs.size()) - 1; }
    Count operator[](int k) const {
        return k >= 0 && k <= degree() ? coeffs[static_cast<std::size_t>(k)] : Count{0};
    }
    Polynomial as_polynomial() const;

    friend bool operator==(const CliquePolynomial&, const CliquePolynomial&) = default;
};

// Counts only; does not materialise the cliques.
CliquePolynomial clique_polynomial(const Graph& g);

int clique_number(const Graph& g);

// |common neighbourhood of Q|. Throws when Q is not a nonempty clique of G.
int clique_value(const Graph& g, const Clique& q);

// Exponential reference: tests every vertex subset for completeness. Entry k-1
// holds c_k. Independent of enumerate_cliques; n <= 20.
std::vector<Count> brute_force_counts(const Graph& g);

inline constexpr int kBruteForceMaxVertices = 20;

} // namespace cliquepoly
