#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace cliquepoly {

inline constexpr int kMaxVertices = 64;

// Subset of vertex ids 0..63 packed into one word.
class VertexSet {
public:
    constexpr VertexSet() = default;
    constexpr explicit VertexSet(std::uint64_t bits) : bits_(bits) {}
    VertexSet(std::initializer_list<int> vertices);

    static constexpr VertexSet first_n(int n) {
        return VertexSet(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
    }

    constexpr std::uint64_t bits() const { return bits_; }
    constexpr int size() const { return std::popcount(bits_); }
    constexpr bool empty() const { return bits_ == 0; }
    constexpr bool contains(int v) const { return (bits_ >> v) & 1U; }
    constexpr void insert(int v) { bits_ |= std::uint64_t{1} << v; }
    constexpr void erase(int v) { bits_ &= ~(std::uint64_t{1} << v); }
    constexpr bool is_subset_of(VertexSet other) const { return (bits_ & ~other.bits_) == 0; }

    std::vector<int> to_vector() const;

    friend constexpr VertexSet operator&(VertexSet a, VertexSet b) { return VertexSet(a.bits_ & b.bits_); }
    friend constexpr VertexSet operator|(VertexSet a, VertexSet b) { return VertexSet(a.bits_ | b.bits_); }
    friend constexpr VertexSet operator-(VertexSet a, VertexSet b) { return VertexSet(a.bits_ & ~b.bits_); }
    friend constexpr bool operator==(VertexSet, VertexSet) = default;

    class iterator {
    public:
        using value_type = int;
        using difference_type = std::ptrdiff_t;
        constexpr iterator() = default;
        constexpr explicit iterator(std::uint64_t rest) : rest_(rest) {}
        constexpr int operator*() const { return std::countr_zero(rest_); }
        constexpr iterator& operator++() {
            rest_ &= rest_ - 1;
            return *this;
        }
        constexpr iterator operator++(int) {
            auto old = *this;
            ++*this;
            return old;
        }
        friend constexpr bool operator==(iterator, iterator) = default;

    private:
        std::uint64_t rest_ = 0;
    };

    constexpr iterator begin() const { return iterator(bits_); }
    constexpr iterator end() const { return iterator(0); }

private:
    std::uint64_t bits_ = 0;
};

// An edge {u, v} stored with u < v.
struct EdgeRef {
    int u = 0;
    int v = 0;

    EdgeRef() = default;
    EdgeRef(int a, int b);

    friend auto operator<=>(const EdgeRef&, const EdgeRef&) = default;
};

std::string to_string(const EdgeRef& e);

// Undirected simple graph on at most 64 vertices; one adjacency word per vertex.
// Immutable once built: every mutation-like operation returns a new graph.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);
    Graph(int n, std::span<const EdgeRef> edges);
    Graph(int n, std::initializer_list<EdgeRef> edges);

    int order() const { return n_; }
    int size() const { return m_; }
    VertexSet vertices() const { return VertexSet::first_n(n_); }
    VertexSet neighbors(int v) const { return VertexSet(adj_[v]); }
    int degree(int v) const { return std::popcount(adj_[v]); }
    bool adjacent(int u, int v) const { return (adj_[u] >> v) & 1U; }
    bool has_edge(const EdgeRef& e) const { return e.v < n_ && adjacent(e.u, e.v); }

    // Edges in lexicographic order of (u, v).
    std::vector<EdgeRef> edges() const;

    friend bool operator==(const Graph& a, const Graph& b) { return a.n_ == b.n_ && a.adj_ == b.adj_; }

    class Builder;

private:
    void add_edge_unchecked(int u, int v);

    int n_ = 0;
    int m_ = 0;
    std::array<std::uint64_t, kMaxVertices> adj_{};
};

class Graph::Builder {
public:
    explicit Builder(int n);
    explicit Builder(const Graph& g) : g_(g) {}
    Builder& add_edge(int u, int v);
    Builder& remove_edge(int u, int v);
    int order() const { return g_.n_; }
    Graph build() const { return g_; }

private:
    Graph g_;
};

// Named families used throughout the tests and the CLI.
Graph complete_graph(int n);
Graph empty_graph(int n);
Graph cycle_graph(int n);
Graph path_graph(int n);
Graph star_graph(int leaves);
Graph disjoint_union(const Graph& a, const Graph& b);

Graph delete_vertex(const Graph& g, int v);
Graph delete_edge(const Graph& g, const EdgeRef& e);
Graph delete_edge_set(const Graph& g, std::span<const EdgeRef> edges);

// Induced subgraph G[S], re-indexed in increasing vertex order.
Graph induced_subgraph(const Graph& g, VertexSet s);

// Intersection of the open neighborhoods of the members of S. S must be nonempty.
VertexSet common_neighborhood(const Graph& g, VertexSet s);

bool is_connected(const Graph& g);

// One vertex per triangle (lexicographic by vertex triple); adjacent when two
// triangles share an edge.
Graph triangle_graph(const Graph& g);

} // namespace cliquepoly
