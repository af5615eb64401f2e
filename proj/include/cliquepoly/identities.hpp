#pragma once

#include <array>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "cliquepoly/cliques.hpp"
#include "cliquepoly/graph.hpp"
#include "cliquepoly/polynomial.hpp"

namespace cliquepoly {

// A report field: flag, exact integer, label, or polynomial.
using Value = std::variant<bool, Int, std::string, Polynomial>;
using Fields = std::vector<std::pair<std::string, Value>>;

// Outcome of comparing two exactly computed sides of one identity on one graph.
struct IdentityReport {
    std::string identity;
    std::string graph6;
    Fields params;
    Value lhs;
    Value rhs;
    bool holds = false;
    // False when the graph lies outside the class the identity speaks about;
    // holds is then meaningless and reported as false.
    bool applicable = true;
    // Secondary findings such as connectivity or an equivalent condition.
    Fields notes;
};

bool values_equal(const Value& a, const Value& b);
std::string to_string(const Value& v);

// C(G[N_G(S)], x) for a nonempty vertex set S.
Polynomial neighborhood_polynomial(const Graph& g, VertexSet s);

// sum_{Q in Delta_k} val(Q) = (k+1) c_{k+1}
IdentityReport check_handshake(const Graph& g, int k);

// C(G) = C(G - v) + x C(G[N(v)])
IdentityReport check_vertex_recurrence(const Graph& g, int v);
// C(G) = C(G - e) + x^2 C(G[N(e)])
IdentityReport check_edge_recurrence(const Graph& g, const EdgeRef& e);

// (n - k) c_k(G) = sum_v c_k(G - v)
IdentityReport check_vertex_deck_identity(const Graph& g, int k);
// (m - C(k,2)) c_k(G) = sum_e c_k(G - e), k >= 2
IdentityReport check_edge_deck_identity(const Graph& g, int k);

// C'(G) = sum_v C(G[N(v)])
IdentityReport check_first_derivative(const Graph& g);
// C''(G) / 2 = sum_e C(G[N(e)])
IdentityReport check_second_derivative(const Graph& g);

enum class ExpansionInterpretation {
    EdgeSubsets,   // every S subset of M with |S| = C(r,2)
    CliqueSubsets, // only those S whose edges form an r-clique
};

std::string_view to_string(ExpansionInterpretation i);

// C(G) = C(G - M) + sum_r (-1)^r (r-1) x^r sum_S C(G[N(S)]) for an edge set M
// inducing a clique, N(S) being the common neighbourhood of S's endpoints.
IdentityReport clique_deletion_expansion(const Graph& g, std::span<const EdgeRef> m,
                                         ExpansionInterpretation interpretation);

struct TriangleIdentityParts {
    Polynomial edge_terms;     // sum over the triangle's edges of C(G[N(e_i)])
    Polynomial triangle_term;  // C(G[N(delta)])
    Clique triangle;
};

// C(G) = C(G - delta) + x^2 * edge_terms - 2 x^3 * triangle_term
std::pair<IdentityReport, TriangleIdentityParts> triangle_identity(const Graph& g, const Clique& delta);

// C(G) = C(G - delta) + x^3 C(G[N(delta)]); the equivalent edge-term condition
// is evaluated verbatim and attached as a note.
IdentityReport check_triangle_recurrence(const Graph& g, const Clique& delta);

// C'''(G) / 3! = sum_delta C(G[N(delta)]) for omega(G) <= 4.
IdentityReport check_third_derivative_k5free(const Graph& g);

// C^(k)(G) / k! = sum_{Q in Delta_k} C(G[N(Q)])
IdentityReport check_kth_derivative_general(const Graph& g, int k);

struct TriangleDeletionCounts {
    std::array<Int, 4> predicted{}; // c_1..c_4 of G - delta from counts of G
    std::array<Int, 4> direct{};    // c_1..c_4 of G - delta by enumeration
    bool matches = false;
};

// Requires delta in Delta_3(G) and omega(G) <= 4.
std::pair<IdentityReport, TriangleDeletionCounts> triangle_deletion_counts(const Graph& g, const Clique& delta);

// Throws unless delta is a triangle of g.
void require_triangle(const Graph& g, const Clique& delta);

} // namespace cliquepoly
