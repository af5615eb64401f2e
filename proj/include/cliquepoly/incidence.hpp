#pragma once

#include <string_view>
#include <utility>
#include <vector>

#include "cliquepoly/cliques.hpp"
#include "cliquepoly/graph.hpp"

namespace cliquepoly {

enum class IncidenceKind {
    SubcliqueSuperclique, // rows Delta_k, columns Delta_{k+1}
    VertexDeck,           // rows Delta_k, columns G - v
    EdgeDeck,             // rows Delta_k, columns G - e
    TriangleDeck,         // rows Delta_k, columns G - delta (edges of delta removed)
};

std::string_view to_string(IncidenceKind kind);

// Sparse labelled 0/1 matrix. Column labels are the vertex set identifying the
// column: the superclique, the deleted vertex, the deleted edge's endpoints, or
// the deleted triangle.
class IncidenceMatrix {
public:
    IncidenceMatrix(IncidenceKind kind, int k, std::vector<Clique> rows, std::vector<VertexSet> columns);

    IncidenceKind kind() const { return kind_; }
    int order() const { return k_; }
    std::size_t rows() const { return row_labels_.size(); }
    std::size_t cols() const { return col_labels_.size(); }
    const std::vector<Clique>& row_labels() const { return row_labels_; }
    const std::vector<VertexSet>& column_labels() const { return col_labels_; }

    // Sorted column indices holding a 1 in row r.
    const std::vector<std::size_t>& row_support(std::size_t r) const { return support_[r]; }
    bool at(std::size_t r, std::size_t c) const;
    void set(std::size_t r, std::size_t c);

    std::vector<Count> row_sums() const;
    std::vector<Count> column_sums() const;

private:
    IncidenceKind kind_;
    int k_;
    std::vector<Clique> row_labels_;
    std::vector<VertexSet> col_labels_;
    std::vector<std::vector<std::size_t>> support_;
};

// Entry (Q, Q') = 1 iff Q is contained in Q'. Order 1 is the vertex-edge incidence matrix.
IncidenceMatrix subclique_superclique_matrix(const Graph& g, int k);
// Entry (Q, v) = 1 iff Q survives in G - v.
IncidenceMatrix vertex_deck_matrix(const Graph& g, int k);
// Entry (Q, e) = 1 iff e is not an edge of Q. Requires k >= 2.
IncidenceMatrix edge_deck_matrix(const Graph& g, int k);
// Entry (Q, delta) = 1 iff no edge of delta lies inside Q. Requires k >= 3.
IncidenceMatrix triangle_deck_matrix(const Graph& g, int k);

IncidenceMatrix build_incidence(IncidenceKind kind, const Graph& g, int k);

// Grand total of the entries summed by rows and by columns.
std::pair<Count, Count> double_count(const IncidenceMatrix& m);

} // namespace cliquepoly
