#include "cliquepoly/identities.hpp"

#include <algorithm>
#include <string>

#include "cliquepoly/graph_io.hpp"

namespace cliquepoly {

namespace {

Polynomial poly_of(const Graph& g) { return clique_polynomial(g).as_polynomial(); }

IdentityReport make_report(std::string id, const Graph& g, Fields params, Value lhs, Value rhs) {
    IdentityReport r;
    r.identity = std::move(id);
    r.graph6 = to_graph6(g);
    r.params = std::move(params);
    r.holds = values_equal(lhs, rhs);
    r.lhs = std::move(lhs);
    r.rhs = std::move(rhs);
    return r;
}

Int count_of(const CliquePolynomial& p, int k) { return to_signed(p[k]); }

} // namespace

bool values_equal(const Value& a, const Value& b) {
    if (a.index() != b.index()) return false;
    return std::visit(
        [&](const auto& x) {
            using T = std::decay_t<decltype(x)>;
            return x == std::get<T>(b);
        },
        a);
}

std::string to_string(const Value& v) {
    return std::visit(
        [](const auto& x) -> std::string {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, bool>)
                return x ? "true" : "false";
            else if constexpr (std::is_same_v<T, std::string>)
                return x;
            else
                return cliquepoly::to_string(x);
        },
        v);
}

std::string_view to_string(ExpansionInterpretation i) {
    return i == ExpansionInterpretation::EdgeSubsets ? "edge-subsets" : "clique-subsets";
}

void require_triangle(const Graph& g, const Clique& delta) {
    if (delta.size() != 3 || !is_clique(g, delta.vertices))
        throw PreconditionError("{" + to_string(delta) + "} is not a triangle of the graph");
}

Polynomial neighborhood_polynomial(const Graph& g, VertexSet s) {
    return poly_of(induced_subgraph(g, common_neighborhood(g, s)));
}

IdentityReport check_handshake(const Graph& g, int k) {
    if (k < 1) throw PreconditionError("handshake identity needs k >= 1");
    auto catalog = enumerate_cliques(g, k + 1);
    Int total = 0;
    for (const auto& q : catalog.of_size(k)) total = checked_add(total, Int{clique_value(g, q)});
    Int rhs = checked_mul(Int{k + 1}, to_signed(catalog.count(k + 1)));
    return make_report("handshake", g, {{"k", Int{k}}}, total, rhs);
}

IdentityReport check_vertex_recurrence(const Graph& g, int v) {
    if (v < 0 || v >= g.order()) throw PreconditionError("vertex " + std::to_string(v) + " out of range");
    auto rhs = poly_of(delete_vertex(g, v)) + poly_of(induced_subgraph(g, g.neighbors(v))).shifted(1);
    return make_report("vertex-recurrence", g, {{"v", Int{v}}}, poly_of(g), rhs);
}

IdentityReport check_edge_recurrence(const Graph& g, const EdgeRef& e) {
    if (!g.has_edge(e)) throw PreconditionError("edge " + to_string(e) + " not present");
    auto rhs = poly_of(delete_edge(g, e)) + neighborhood_polynomial(g, VertexSet{e.u, e.v}).shifted(2);
    return make_report("edge-recurrence", g, {{"e", to_string(e)}}, poly_of(g), rhs);
}

IdentityReport check_vertex_deck_identity(const Graph& g, int k) {
    if (k < 1) throw PreconditionError("vertex-deck identity needs k >= 1");
    auto p = clique_polynomial(g);
    Int lhs = checked_mul(Int{g.order() - k}, count_of(p, k));
    Int rhs = 0;
    for (int v = 0; v < g.order(); ++v) rhs = checked_add(rhs, count_of(clique_polynomial(delete_vertex(g, v)), k));
    return make_report("vertex-deck", g, {{"k", Int{k}}}, lhs, rhs);
}

IdentityReport check_edge_deck_identity(const Graph& g, int k) {
    if (k < 2) throw PreconditionError("edge-deck identity needs k >= 2");
    auto p = clique_polynomial(g);
    Int lhs = checked_mul(checked_sub(Int{g.size()}, binomial(k, 2)), count_of(p, k));
    Int rhs = 0;
    for (const auto& e : g.edges()) rhs = checked_add(rhs, count_of(clique_polynomial(delete_edge(g, e)), k));
    return make_report("edge-deck", g, {{"k", Int{k}}}, lhs, rhs);
}

IdentityReport check_first_derivative(const Graph& g) {
    auto lhs = derivative(poly_of(g), 1);
    Polynomial rhs;
    for (int v = 0; v < g.order(); ++v) rhs += poly_of(induced_subgraph(g, g.neighbors(v)));
    return make_report("first-derivative", g, {}, lhs, rhs);
}

IdentityReport check_second_derivative(const Graph& g) {
    auto lhs = normalized_derivative(poly_of(g), 2);
    Polynomial rhs;
    for (const auto& e : g.edges()) rhs += neighborhood_polynomial(g, VertexSet{e.u, e.v});
    return make_report("second-derivative", g, {}, lhs, rhs);
}

namespace {

VertexSet endpoints(std::span<const EdgeRef> edges) {
    VertexSet out;
    for (const auto& e : edges) {
        out.insert(e.u);
        out.insert(e.v);
    }
    return out;
}

// Calls visit(chosen) for every size-`size` subset of [0, total), as index lists.
template <typename Visit>
void for_each_combination(int total, int size, Visit&& visit) {
    std::vector<int> idx(static_cast<std::size_t>(size));
    for (int i = 0; i < size; ++i) idx[static_cast<std::size_t>(i)] = i;
    if (size > total) return;
    while (true) {
        visit(idx);
        int i = size - 1;
        while (i >= 0 && idx[static_cast<std::size_t>(i)] == total - size + i) --i;
        if (i < 0) return;
        ++idx[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < size; ++j) idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j) - 1] + 1;
    }
}

constexpr int kEdgeSubsetMaxCliqueOrder = 7;

} // namespace

IdentityReport clique_deletion_expansion(const Graph& g, std::span<const EdgeRef> m,
                                         ExpansionInterpretation interpretation) {
    std::vector<EdgeRef> edges(m.begin(), m.end());
    std::sort(edges.begin(), edges.end());
    if (edges.empty()) throw PreconditionError("edge set M is empty");
    if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
        throw PreconditionError("edge set M has repeated edges");
    for (const auto& e : edges)
        if (!g.has_edge(e)) throw PreconditionError("edge " + to_string(e) + " of M not in the graph");
    const auto span_vertices = endpoints(edges);
    const int order = span_vertices.size();
    if (static_cast<Int>(edges.size()) != binomial(order, 2))
        throw PreconditionError("edge set M does not induce a clique");
    if (interpretation == ExpansionInterpretation::EdgeSubsets && order > kEdgeSubsetMaxCliqueOrder)
        throw PreconditionError("edge-subset reading limited to cliques on at most 7 vertices");

    Polynomial rhs = poly_of(delete_edge_set(g, edges));
    const auto total = static_cast<int>(edges.size());
    // r runs while an r-clique's edge count fits in M (r = 2 alone when |M| = 1).
    for (int r = 2;; ++r) {
        const auto subset_size = static_cast<int>(binomial(r, 2));
        if (subset_size > total) break;
        Polynomial inner;
        if (interpretation == ExpansionInterpretation::EdgeSubsets) {
            for_each_combination(total, subset_size, [&](const std::vector<int>& chosen) {
                std::vector<EdgeRef> s;
                for (int i : chosen) s.push_back(edges[static_cast<std::size_t>(i)]);
                inner += neighborhood_polynomial(g, endpoints(s));
            });
        } else {
            const auto verts = span_vertices.to_vector();
            for_each_combination(order, r, [&](const std::vector<int>& chosen) {
                VertexSet w;
                for (int i : chosen) w.insert(verts[static_cast<std::size_t>(i)]);
                inner += neighborhood_polynomial(g, w);
            });
        }
        const Int sign = r % 2 == 0 ? 1 : -1;
        rhs += (sign * Int{r - 1}) * inner.shifted(r);
    }

    std::string label;
    for (const auto& e : edges) label += (label.empty() ? "" : ",") + to_string(e);
    return make_report("clique-deletion", g,
                       {{"M", label}, {"interpretation", std::string(to_string(interpretation))}}, poly_of(g), rhs);
}

std::pair<IdentityReport, TriangleIdentityParts> triangle_identity(const Graph& g, const Clique& delta) {
    require_triangle(g, delta);
    TriangleIdentityParts parts;
    parts.triangle = delta;
    for (const auto& e : delta.edges()) parts.edge_terms += neighborhood_polynomial(g, VertexSet{e.u, e.v});
    parts.triangle_term = neighborhood_polynomial(g, delta.vertices);

    const auto edges = delta.edges();
    auto rhs = poly_of(delete_edge_set(g, edges)) + parts.edge_terms.shifted(2) - Int{2} * parts.triangle_term.shifted(3);
    auto report = make_report("triangle-identity", g, {{"delta", to_string(delta)}}, poly_of(g), rhs);
    report.notes.emplace_back("edge_terms", parts.edge_terms);
    report.notes.emplace_back("triangle_term", parts.triangle_term);
    return {std::move(report), std::move(parts)};
}

IdentityReport check_triangle_recurrence(const Graph& g, const Clique& delta) {
    require_triangle(g, delta);
    auto [identity, parts] = triangle_identity(g, delta);
    auto rhs = poly_of(delete_edge_set(g, delta.edges())) + parts.triangle_term.shifted(3);
    auto report = make_report("triangle-recurrence", g, {{"delta", to_string(delta)}}, poly_of(g), rhs);
    // sum_i C(G[N(e_i)]) = 3x C(G[N(delta)]), taken as written.
    auto condition_rhs = (Int{3} * parts.triangle_term).shifted(1);
    report.notes.emplace_back("condition_lhs", parts.edge_terms);
    report.notes.emplace_back("condition_rhs", condition_rhs);
    report.notes.emplace_back("condition_holds", parts.edge_terms == condition_rhs);
    return report;
}

IdentityReport check_third_derivative_k5free(const Graph& g) {
    if (clique_number(g) >= 5) throw PreconditionError("graph contains K5; third-derivative theorem needs omega <= 4");
    auto lhs = normalized_derivative(poly_of(g), 3);
    Polynomial rhs;
    for (const auto& t : cliques_of_size(g, 3)) rhs += neighborhood_polynomial(g, t.vertices);
    auto report = make_report("third-derivative-k5free", g, {}, lhs, rhs);
    report.notes.emplace_back("connected", is_connected(g));
    return report;
}

IdentityReport check_kth_derivative_general(const Graph& g, int k) {
    if (k < 1) throw PreconditionError("derivative order must be at least 1");
    auto lhs = normalized_derivative(poly_of(g), k);
    Polynomial rhs;
    for (const auto& q : cliques_of_size(g, k)) rhs += neighborhood_polynomial(g, q.vertices);
    return make_report("kth-derivative", g, {{"k", Int{k}}}, lhs, rhs);
}

std::pair<IdentityReport, TriangleDeletionCounts> triangle_deletion_counts(const Graph& g, const Clique& delta) {
    require_triangle(g, delta);
    auto p = clique_polynomial(g);
    if (p.degree() >= 5) throw PreconditionError("graph contains K5; deletion counts need omega <= 4");

    Int edge_values = 0;
    Int edge_neighborhood_edges = 0;
    for (const auto& e : delta.edges()) {
        auto nbhd = common_neighborhood(g, VertexSet{e.u, e.v});
        edge_values = checked_add(edge_values, Int{nbhd.size()});
        edge_neighborhood_edges = checked_add(edge_neighborhood_edges, Int{induced_subgraph(g, nbhd).size()});
    }
    const Int triangle_value = clique_value(g, delta);

    TriangleDeletionCounts counts;
    counts.predicted = {
        count_of(p, 1),
        count_of(p, 2) - 3,
        count_of(p, 3) - edge_values + 2,
        count_of(p, 4) - edge_neighborhood_edges + 2 * triangle_value,
    };
    auto after = clique_polynomial(delete_edge_set(g, delta.edges()));
    for (int k = 1; k <= 4; ++k) counts.direct[static_cast<std::size_t>(k - 1)] = count_of(after, k);
    counts.matches = counts.predicted == counts.direct;

    auto as_poly = [](const std::array<Int, 4>& c) { return Polynomial(std::vector<Int>{0, c[0], c[1], c[2], c[3]}); };
    auto report = make_report("triangle-deletion-counts", g, {{"delta", to_string(delta)}}, as_poly(counts.predicted),
                              as_poly(counts.direct));
    return {std::move(report), counts};
}

} // namespace cliquepoly
