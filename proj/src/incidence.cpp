#include "cliquepoly/incidence.hpp"

#include <algorithm>
#include <string>

namespace cliquepoly {

std::string_view to_string(IncidenceKind kind) {
    switch (kind) {
    case IncidenceKind::SubcliqueSuperclique: return "super";
    case IncidenceKind::VertexDeck: return "vdeck";
    case IncidenceKind::EdgeDeck: return "edeck";
    case IncidenceKind::TriangleDeck: return "tdeck";
    }
    return "unknown";
}

IncidenceMatrix::IncidenceMatrix(IncidenceKind kind, int k, std::vector<Clique> rows, std::vector<VertexSet> columns)
    : kind_(kind), k_(k), row_labels_(std::move(rows)), col_labels_(std::move(columns)),
      support_(row_labels_.size()) {}

bool IncidenceMatrix::at(std::size_t r, std::size_t c) const {
    const auto& row = support_.at(r);
    return std::binary_search(row.begin(), row.end(), c);
}

void IncidenceMatrix::set(std::size_t r, std::size_t c) {
    if (c >= cols()) throw PreconditionError("column index out of range");
    auto& row = support_.at(r);
    auto it = std::lower_bound(row.begin(), row.end(), c);
    if (it == row.end() || *it != c) row.insert(it, c);
}

std::vector<Count> IncidenceMatrix::row_sums() const {
    std::vector<Count> out;
    out.reserve(rows());
    for (const auto& row : support_) out.push_back(row.size());
    return out;
}

std::vector<Count> IncidenceMatrix::column_sums() const {
    std::vector<Count> out(cols(), 0);
    for (const auto& row : support_)
        for (auto c : row) ++out[c];
    return out;
}

namespace {

template <typename Keep>
IncidenceMatrix fill(IncidenceKind kind, int k, std::vector<Clique> rows, std::vector<VertexSet> cols, Keep keep) {
    IncidenceMatrix m(kind, k, std::move(rows), std::move(cols));
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c)
            if (keep(m.row_labels()[r].vertices, m.column_labels()[c])) m.set(r, c);
    return m;
}

} // namespace

IncidenceMatrix subclique_superclique_matrix(const Graph& g, int k) {
    if (k < 1) throw PreconditionError("subclique-superclique matrix needs k >= 1");
    auto catalog = enumerate_cliques(g, k + 1);
    std::vector<VertexSet> cols;
    for (const auto& q : catalog.of_size(k + 1)) cols.push_back(q.vertices);
    return fill(IncidenceKind::SubcliqueSuperclique, k, catalog.of_size(k), std::move(cols),
                [](VertexSet row, VertexSet col) { return row.is_subset_of(col); });
}

IncidenceMatrix vertex_deck_matrix(const Graph& g, int k) {
    if (k < 1) throw PreconditionError("vertex-deck matrix needs k >= 1");
    std::vector<VertexSet> cols;
    for (int v = 0; v < g.order(); ++v) cols.push_back(VertexSet{v});
    return fill(IncidenceKind::VertexDeck, k, cliques_of_size(g, k), std::move(cols),
                [](VertexSet row, VertexSet col) { return (row & col).empty(); });
}

IncidenceMatrix edge_deck_matrix(const Graph& g, int k) {
    if (k < 2) throw PreconditionError("edge-deck matrix needs k >= 2");
    std::vector<VertexSet> cols;
    for (const auto& e : g.edges()) cols.push_back(VertexSet{e.u, e.v});
    return fill(IncidenceKind::EdgeDeck, k, cliques_of_size(g, k), std::move(cols),
                [](VertexSet row, VertexSet col) { return !col.is_subset_of(row); });
}

IncidenceMatrix triangle_deck_matrix(const Graph& g, int k) {
    if (k < 3) throw PreconditionError("triangle-deck matrix needs k >= 3");
    std::vector<VertexSet> cols;
    for (const auto& t : cliques_of_size(g, 3)) cols.push_back(t.vertices);
    // An edge of the triangle lies in Q iff Q holds at least two of its vertices.
    return fill(IncidenceKind::TriangleDeck, k, cliques_of_size(g, k), std::move(cols),
                [](VertexSet row, VertexSet col) { return (row & col).size() < 2; });
}

IncidenceMatrix build_incidence(IncidenceKind kind, const Graph& g, int k) {
    switch (kind) {
    case IncidenceKind::SubcliqueSuperclique: return subclique_superclique_matrix(g, k);
    case IncidenceKind::VertexDeck: return vertex_deck_matrix(g, k);
    case IncidenceKind::EdgeDeck: return edge_deck_matrix(g, k);
    case IncidenceKind::TriangleDeck: return triangle_deck_matrix(g, k);
    }
    throw PreconditionError("unknown incidence kind");
}

std::pair<Count, Count> double_count(const IncidenceMatrix& m) {
    Count by_rows = 0;
    Count by_cols = 0;
    for (auto s : m.row_sums()) by_rows = checked_add(by_rows, s);
    for (auto s : m.column_sums()) by_cols = checked_add(by_cols, s);
    return {by_rows, by_cols};
}

} // namespace cliquepoly
