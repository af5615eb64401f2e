#include "cliquepoly/cliques.hpp"

#include <algorithm>
#include <string>

namespace cliquepoly {

std::vector<EdgeRef> Clique::edges() const {
    std::vector<EdgeRef> out;
    for (int u : vertices)
        for (int v : vertices)
            if (u < v) out.emplace_back(u, v);
    return out;
}

bool operator<(const Clique& a, const Clique& b) {
    auto x = a.vertices.to_vector();
    auto y = b.vertices.to_vector();
    return std::lexicographical_compare(x.begin(), x.end(), y.begin(), y.end());
}

bool is_clique(const Graph& g, VertexSet s) {
    if (!s.is_subset_of(g.vertices())) return false;
    for (int v : s)
        if (!(s - VertexSet{v}).is_subset_of(g.neighbors(v))) return false;
    return true;
}

std::string to_string(const Clique& q) {
    std::string out;
    for (int v : q.vertices) {
        if (!out.empty()) out += '-';
        out += std::to_string(v);
    }
    return out;
}

const std::vector<Clique>& CliqueCatalog::of_size(int k) const {
    static const std::vector<Clique> kEmpty;
    if (k < 1 || k > max_size()) return kEmpty;
    return by_size_[static_cast<std::size_t>(k - 1)];
}

namespace {

// Vertices of g strictly above v.
VertexSet above(const Graph& g, int v) {
    return g.vertices() - VertexSet::first_n(v + 1);
}

template <typename Visit>
void extend(const Graph& g, VertexSet current, VertexSet candidates, int depth, int limit, Visit& visit) {
    for (int v : candidates) {
        auto next = current;
        next.insert(v);
        visit(next, depth + 1);
        if (depth + 1 < limit) extend(g, next, candidates & g.neighbors(v) & above(g, v), depth + 1, limit, visit);
    }
}

} // namespace

CliqueCatalog enumerate_cliques(const Graph& g, std::optional<int> k_max) {
    const int limit = k_max ? std::min(*k_max, g.order()) : g.order();
    std::vector<std::vector<Clique>> by_size;
    auto visit = [&](VertexSet q, int k) {
        if (static_cast<int>(by_size.size()) < k) by_size.resize(static_cast<std::size_t>(k));
        by_size[static_cast<std::size_t>(k - 1)].push_back(Clique{q});
    };
    if (limit >= 1) extend(g, VertexSet{}, g.vertices(), 0, limit, visit);
    // DFS order interleaves sizes; within one size it is already lexicographic.
    return CliqueCatalog(std::move(by_size));
}

std::vector<Clique> cliques_of_size(const Graph& g, int k) {
    if (k < 1) return {};
    return enumerate_cliques(g, k).of_size(k);
}

namespace {

void count_extensions(const Graph& g, VertexSet candidates, int depth, std::vector<Count>& counts) {
    for (int v : candidates) {
        if (static_cast<int>(counts.size()) <= depth + 1) counts.resize(static_cast<std::size_t>(depth) + 2, 0);
        counts[static_cast<std::size_t>(depth) + 1] = checked_add(counts[static_cast<std::size_t>(depth) + 1], Count{1});
        auto rest = candidates & g.neighbors(v) & above(g, v);
        if (!rest.empty()) count_extensions(g, rest, depth + 1, counts);
    }
}

} // namespace

CliquePolynomial clique_polynomial(const Graph& g) {
    CliquePolynomial p;
    count_extensions(g, g.vertices(), 0, p.coeffs);
    return p;
}

Polynomial CliquePolynomial::as_polynomial() const {
    std::vector<Int> out;
    out.reserve(coeffs.size());
    for (auto c : coeffs) out.push_back(to_signed(c));
    return Polynomial(std::move(out));
}

int clique_number(const Graph& g) { return clique_polynomial(g).degree(); }

int clique_value(const Graph& g, const Clique& q) {
    if (q.vertices.empty() || !is_clique(g, q.vertices))
        throw PreconditionError("{" + to_string(q) + "} is not a clique of the graph");
    return common_neighborhood(g, q.vertices).size();
}

std::vector<Count> brute_force_counts(const Graph& g) {
    const int n = g.order();
    if (n > kBruteForceMaxVertices)
        throw PreconditionError("brute-force oracle limited to " + std::to_string(kBruteForceMaxVertices) + " vertices");
    std::vector<Count> counts(static_cast<std::size_t>(n), 0);
    for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << n); ++mask) {
        bool complete = true;
        for (int u = 0; u < n && complete; ++u) {
            if (!((mask >> u) & 1U)) continue;
            for (int v = u + 1; v < n; ++v)
                if (((mask >> v) & 1U) && !g.adjacent(u, v)) {
                    complete = false;
                    break;
                }
        }
        if (complete) ++counts[static_cast<std::size_t>(std::popcount(mask)) - 1];
    }
    while (!counts.empty() && counts.back() == 0) counts.pop_back();
    return counts;
}

} // namespace cliquepoly
