#include "cliquepoly/graph.hpp"

#include <algorithm>
#include <string>

#include "cliquepoly/integer.hpp"

namespace cliquepoly {

namespace {

void require_order(int n) {
    if (n < 0 || n > kMaxVertices)
        throw PreconditionError("vertex count " + std::to_string(n) + " outside [0, 64]");
}

void require_vertex(const Graph& g, int v) {
    if (v < 0 || v >= g.order())
        throw PreconditionError("vertex " + std::to_string(v) + " out of range for n = " +
                                std::to_string(g.order()));
}

} // namespace

VertexSet::VertexSet(std::initializer_list<int> vertices) {
    for (int v : vertices) {
        if (v < 0 || v >= kMaxVertices) throw PreconditionError("vertex id outside [0, 64)");
        insert(v);
    }
}

std::vector<int> VertexSet::to_vector() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(size()));
    for (int v : *this) out.push_back(v);
    return out;
}

EdgeRef::EdgeRef(int a, int b) : u(std::min(a, b)), v(std::max(a, b)) {
    if (a == b) throw PreconditionError("edge endpoints must differ");
    if (u < 0 || v >= kMaxVertices) throw PreconditionError("edge endpoint outside [0, 64)");
}

std::string to_string(const EdgeRef& e) { return std::to_string(e.u) + "-" + std::to_string(e.v); }

Graph::Graph(int n) : n_(n) { require_order(n); }

Graph::Graph(int n, std::span<const EdgeRef> edges) : Graph(n) {
    for (const auto& e : edges) {
        if (e.v >= n) throw PreconditionError("edge " + to_string(e) + " out of range");
        add_edge_unchecked(e.u, e.v);
    }
}

Graph::Graph(int n, std::initializer_list<EdgeRef> edges)
    : Graph(n, std::span<const EdgeRef>(edges.begin(), edges.size())) {}

void Graph::add_edge_unchecked(int u, int v) {
    if (adjacent(u, v)) return;
    adj_[u] |= std::uint64_t{1} << v;
    adj_[v] |= std::uint64_t{1} << u;
    ++m_;
}

std::vector<EdgeRef> Graph::edges() const {
    std::vector<EdgeRef> out;
    out.reserve(static_cast<std::size_t>(m_));
    for (int u = 0; u < n_; ++u)
        for (int v : VertexSet(adj_[u] & ~((std::uint64_t{2} << u) - 1))) out.emplace_back(u, v);
    return out;
}

Graph::Builder::Builder(int n) : g_(n) {}

Graph::Builder& Graph::Builder::add_edge(int u, int v) {
    require_vertex(g_, u);
    require_vertex(g_, v);
    if (u == v) throw PreconditionError("self-loop at vertex " + std::to_string(u));
    g_.add_edge_unchecked(u, v);
    return *this;
}

Graph::Builder& Graph::Builder::remove_edge(int u, int v) {
    EdgeRef e(u, v);
    if (!g_.has_edge(e)) throw PreconditionError("edge " + to_string(e) + " not present");
    g_.adj_[u] &= ~(std::uint64_t{1} << v);
    g_.adj_[v] &= ~(std::uint64_t{1} << u);
    --g_.m_;
    return *this;
}

Graph complete_graph(int n) {
    Graph::Builder b(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) b.add_edge(u, v);
    return b.build();
}

Graph empty_graph(int n) { return Graph(n); }

Graph cycle_graph(int n) {
    Graph::Builder b(n);
    if (n >= 3)
        for (int v = 0; v < n; ++v) b.add_edge(v, (v + 1) % n);
    else if (n == 2)
        b.add_edge(0, 1);
    return b.build();
}

Graph path_graph(int n) {
    Graph::Builder b(n);
    for (int v = 0; v + 1 < n; ++v) b.add_edge(v, v + 1);
    return b.build();
}

Graph star_graph(int leaves) {
    Graph::Builder b(leaves + 1);
    for (int v = 1; v <= leaves; ++v) b.add_edge(0, v);
    return b.build();
}

Graph disjoint_union(const Graph& a, const Graph& b) {
    Graph::Builder out(a.order() + b.order());
    for (const auto& e : a.edges()) out.add_edge(e.u, e.v);
    for (const auto& e : b.edges()) out.add_edge(e.u + a.order(), e.v + a.order());
    return out.build();
}

Graph induced_subgraph(const Graph& g, VertexSet s) {
    if (!s.is_subset_of(g.vertices())) throw PreconditionError("vertex set not contained in V(G)");
    std::array<int, kMaxVertices> index{};
    int next = 0;
    for (int v : s) index[static_cast<std::size_t>(v)] = next++;
    Graph::Builder b(next);
    for (int u : s)
        for (int v : g.neighbors(u) & s)
            if (u < v) b.add_edge(index[static_cast<std::size_t>(u)], index[static_cast<std::size_t>(v)]);
    return b.build();
}

Graph delete_vertex(const Graph& g, int v) {
    require_vertex(g, v);
    auto keep = g.vertices();
    keep.erase(v);
    return induced_subgraph(g, keep);
}

Graph delete_edge(const Graph& g, const EdgeRef& e) {
    return Graph::Builder(g).remove_edge(e.u, e.v).build();
}

Graph delete_edge_set(const Graph& g, std::span<const EdgeRef> edges) {
    Graph::Builder b(g);
    for (const auto& e : edges) b.remove_edge(e.u, e.v);
    return b.build();
}

VertexSet common_neighborhood(const Graph& g, VertexSet s) {
    if (s.empty()) throw PreconditionError("common neighborhood of an empty vertex set");
    if (!s.is_subset_of(g.vertices())) throw PreconditionError("vertex set not contained in V(G)");
    auto out = g.vertices();
    for (int v : s) out = out & g.neighbors(v);
    return out;
}

bool is_connected(const Graph& g) {
    if (g.order() <= 1) return true;
    VertexSet seen{0};
    VertexSet frontier{0};
    while (!frontier.empty()) {
        VertexSet next;
        for (int v : frontier) next = next | g.neighbors(v);
        frontier = next - seen;
        seen = seen | frontier;
    }
    return seen == g.vertices();
}

Graph triangle_graph(const Graph& g) {
    std::vector<VertexSet> triangles;
    for (int a = 0; a < g.order(); ++a)
        for (int b : g.neighbors(a))
            if (b > a)
                for (int c : g.neighbors(a) & g.neighbors(b))
                    if (c > b) {
                        if (triangles.size() == kMaxVertices)
                            throw PreconditionError("triangle graph needs more than 64 vertices");
                        triangles.push_back(VertexSet{a, b, c});
                    }
    Graph::Builder out(static_cast<int>(triangles.size()));
    for (std::size_t i = 0; i < triangles.size(); ++i)
        for (std::size_t j = i + 1; j < triangles.size(); ++j)
            if ((triangles[i] & triangles[j]).size() == 2) out.add_edge(static_cast<int>(i), static_cast<int>(j));
    return out.build();
}

} // namespace cliquepoly
