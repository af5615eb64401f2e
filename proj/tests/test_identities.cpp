#include <doctest.h>

#include "cliquepoly/identities.hpp"
#include "cliquepoly/random.hpp"
#include "oracle.hpp"

using namespace cliquepoly;

namespace {

const Value& note(const IdentityReport& r, std::string_view key) {
    for (const auto& [k, v] : r.notes)
        if (k == key) return v;
    FAIL("missing note " << key);
    throw std::logic_error("unreachable");
}

Polynomial as_poly(const Value& v) { return std::get<Polynomial>(v); }
Int as_int(const Value& v) { return std::get<Int>(v); }

std::vector<Graph> corpus() {
    auto out = oracle::seeded_corpus(120, 3, 11, {0.3, 0.5, 0.8}, 9001);
    out.push_back(complete_graph(4));
    out.push_back(cycle_graph(5));
    out.push_back(oracle::diamond());
    out.push_back(oracle::two_triangles());
    out.push_back(empty_graph(3));
    return out;
}

std::vector<Clique> all_triangles(const Graph& g) {
    std::vector<Clique> out;
    for (auto [a, b, c] : oracle::triangles(g)) out.push_back(Clique{VertexSet{a, b, c}});
    return out;
}

} // namespace

TEST_SUITE("identities") {

TEST_CASE("vertex recurrence") {
    auto k3 = check_vertex_recurrence(complete_graph(3), 0);
    CHECK(k3.holds);
    CHECK(as_poly(k3.lhs) == Polynomial{1, 3, 3, 1});
    CHECK(as_poly(k3.rhs) == Polynomial{1, 3, 3, 1});
    CHECK(check_vertex_recurrence(Graph(3, {{0, 1}}), 2).holds);
    for (int v = 0; v < 5; ++v) CHECK(check_vertex_recurrence(cycle_graph(5), v).holds);
    CHECK_THROWS_AS(check_vertex_recurrence(complete_graph(3), 3), PreconditionError);
}

TEST_CASE("edge recurrence") {
    for (const auto& e : complete_graph(3).edges()) CHECK(check_edge_recurrence(complete_graph(3), e).holds);
    for (const auto& e : complete_graph(4).edges()) CHECK(check_edge_recurrence(complete_graph(4), e).holds);
    CHECK(check_edge_recurrence(path_graph(3), EdgeRef(0, 1)).holds);
    CHECK_THROWS_AS(check_edge_recurrence(path_graph(3), EdgeRef(0, 2)), PreconditionError);
}

TEST_CASE("deck identities on named graphs") {
    auto c5 = check_vertex_deck_identity(cycle_graph(5), 2);
    CHECK(c5.holds);
    CHECK(as_int(c5.lhs) == 15);
    CHECK(as_int(check_vertex_deck_identity(complete_graph(4), 4).lhs) == 0);
    auto k4_3 = check_edge_deck_identity(complete_graph(4), 3);
    CHECK(as_int(k4_3.lhs) == 12);
    CHECK(as_int(k4_3.rhs) == 12);
    auto k4_2 = check_edge_deck_identity(complete_graph(4), 2);
    CHECK(as_int(k4_2.lhs) == 30);
    CHECK(k4_2.holds);
    CHECK(as_int(check_edge_deck_identity(cycle_graph(6), 3).rhs) == 0);
}

TEST_CASE("derivative theorems on named graphs") {
    auto cube = Polynomial{1, 1} * Polynomial{1, 1} * Polynomial{1, 1};
    auto first = check_first_derivative(complete_graph(4));
    CHECK(first.holds);
    CHECK(as_poly(first.lhs) == Int{4} * cube);
    auto second = check_second_derivative(complete_graph(4));
    CHECK(as_poly(second.rhs) == Int{6} * (Polynomial{1, 1} * Polynomial{1, 1}));
    CHECK(as_poly(check_first_derivative(empty_graph(5)).rhs) == Polynomial{5});
    auto c5 = check_first_derivative(cycle_graph(5));
    CHECK(as_poly(c5.lhs) == Polynomial{5, 10});
    CHECK(c5.holds);
    auto diamond = check_second_derivative(oracle::diamond());
    CHECK(as_poly(diamond.lhs) == Polynomial{5, 6});
    CHECK(diamond.holds);
    CHECK(as_poly(check_second_derivative(cycle_graph(7)).lhs) == Polynomial{7});
}

TEST_CASE("proved identities hold on the corpus") {
    for (const auto& g : corpus()) {
        const int omega = oracle::clique_poly(g).degree();
        for (int v = 0; v < g.order(); ++v) REQUIRE(check_vertex_recurrence(g, v).holds);
        for (const auto& e : g.edges()) REQUIRE(check_edge_recurrence(g, e).holds);
        for (int k = 1; k <= omega + 1; ++k) {
            REQUIRE(check_handshake(g, k).holds);
            REQUIRE(check_vertex_deck_identity(g, k).holds);
            if (k >= 2) REQUIRE(check_edge_deck_identity(g, k).holds);
        }
        REQUIRE(check_first_derivative(g).holds);
        REQUIRE(check_second_derivative(g).holds);
        for (const auto& t : all_triangles(g)) REQUIRE(triangle_identity(g, t).first.holds);
        if (omega <= 4) {
            REQUIRE(check_third_derivative_k5free(g).holds);
            for (const auto& t : all_triangles(g)) REQUIRE(triangle_deletion_counts(g, t).second.matches);
        }
    }
}

TEST_CASE("deck sums and derivatives agree coefficient-wise") {
    // n C(G) - x C'(G) = sum_v C(G - v)
    for (const auto& g : corpus()) {
        auto p = oracle::clique_poly(g);
        Polynomial deck;
        for (int v = 0; v < g.order(); ++v) deck += oracle::clique_poly(oracle::remove_vertex(g, v));
        REQUIRE(Int{g.order()} * p - derivative(p, 1).shifted(1) == deck);
    }
}

TEST_CASE("kth derivative specialisations") {
    Rng rng(RngSpec{61});
    for (int trial = 0; trial < 30; ++trial) {
        auto g = random_gnp(rng.uniform_int(2, 10), 0.6, rng);
        REQUIRE(values_equal(check_kth_derivative_general(g, 1).lhs, check_first_derivative(g).lhs));
        REQUIRE(values_equal(check_kth_derivative_general(g, 1).rhs, check_first_derivative(g).rhs));
        REQUIRE(values_equal(check_kth_derivative_general(g, 2).rhs, check_second_derivative(g).rhs));
    }
    auto k5 = check_kth_derivative_general(complete_graph(5), 3);
    CHECK(as_poly(k5.lhs) == Int{10} * (Polynomial{1, 1} * Polynomial{1, 1}));
}

TEST_CASE("clique-deletion expansion") {
    auto k4 = complete_graph(4);
    std::vector<EdgeRef> one{{0, 1}};
    CHECK(clique_deletion_expansion(path_graph(3), one, ExpansionInterpretation::CliqueSubsets).holds);
    CHECK(clique_deletion_expansion(k4, one, ExpansionInterpretation::EdgeSubsets).holds);

    std::vector<EdgeRef> tri{{0, 1}, {0, 2}, {1, 2}};
    auto a = clique_deletion_expansion(k4, tri, ExpansionInterpretation::EdgeSubsets);
    auto b = clique_deletion_expansion(k4, tri, ExpansionInterpretation::CliqueSubsets);
    CHECK(a.holds);
    CHECK(b.holds);
    CHECK(values_equal(a.rhs, b.rhs));

    auto six = k4.edges();
    auto cliques = clique_deletion_expansion(k4, six, ExpansionInterpretation::CliqueSubsets);
    auto subsets = clique_deletion_expansion(k4, six, ExpansionInterpretation::EdgeSubsets);
    CHECK(cliques.holds);
    CHECK_FALSE(subsets.holds);
    CHECK(as_poly(subsets.lhs) == Polynomial{1, 4, 6, 4, 1});

    std::vector<EdgeRef> path{{0, 1}, {1, 2}};
    CHECK_THROWS_AS(clique_deletion_expansion(k4, path, ExpansionInterpretation::CliqueSubsets), PreconditionError);
    std::vector<EdgeRef> none;
    CHECK_THROWS_AS(clique_deletion_expansion(k4, none, ExpansionInterpretation::CliqueSubsets), PreconditionError);
    std::vector<EdgeRef> absent{{0, 2}};
    CHECK_THROWS_AS(clique_deletion_expansion(path_graph(3), absent, ExpansionInterpretation::CliqueSubsets),
                    PreconditionError);
}

TEST_CASE("clique-deletion expansion over every clique of the corpus") {
    for (const auto& g : oracle::seeded_corpus(40, 4, 9, {0.6, 0.8}, 71)) {
        for (int k = 2; k <= 5; ++k)
            for (const auto& q : cliques_of_size(g, k)) {
                auto m = q.edges();
                REQUIRE(clique_deletion_expansion(g, m, ExpansionInterpretation::CliqueSubsets).holds);
            }
    }
}

TEST_CASE("triangle identity") {
    auto [report, parts] = triangle_identity(complete_graph(4), Clique{VertexSet{0, 1, 2}});
    CHECK(report.holds);
    CHECK(parts.edge_terms == Polynomial{3, 6, 3});
    CHECK(parts.triangle_term == Polynomial{1, 1});
    CHECK(as_poly(report.rhs) == Polynomial{1, 4, 6, 4, 1});

    auto iso = triangle_identity(oracle::two_triangles(), Clique{VertexSet{3, 4, 5}});
    CHECK(iso.first.holds);
    CHECK(iso.second.edge_terms == Polynomial{3, 3});
    CHECK(iso.second.triangle_term == Polynomial{1});

    CHECK(triangle_identity(oracle::diamond(), Clique{VertexSet{0, 1, 2}}).first.holds);
    CHECK(triangle_identity(oracle::diamond(), Clique{VertexSet{1, 2, 3}}).first.holds);
    CHECK_THROWS_AS(triangle_identity(cycle_graph(5), Clique{VertexSet{0, 1, 2}}), PreconditionError);
}

TEST_CASE("triangle recurrence is reported, not asserted") {
    auto r = check_triangle_recurrence(complete_graph(3), Clique{VertexSet{0, 1, 2}});
    CHECK_FALSE(r.holds);
    CHECK(as_poly(r.lhs) == Polynomial{1, 3, 3, 1});
    CHECK(as_poly(r.rhs) == Polynomial{1, 3, 0, 1});
    CHECK(as_poly(note(r, "condition_lhs")) == Polynomial{3, 3});
    CHECK(as_poly(note(r, "condition_rhs")) == Polynomial{0, 3});
    CHECK_FALSE(std::get<bool>(note(r, "condition_holds")));
    CHECK_FALSE(check_triangle_recurrence(complete_graph(4), Clique{VertexSet{0, 1, 3}}).holds);
}

TEST_CASE("third derivative on K5-free graphs") {
    auto k4 = check_third_derivative_k5free(complete_graph(4));
    CHECK(k4.holds);
    CHECK(as_poly(k4.lhs) == Polynomial{4, 4});
    CHECK(check_third_derivative_k5free(cycle_graph(5)).holds);
    auto diamond = check_third_derivative_k5free(oracle::diamond());
    CHECK(as_poly(diamond.rhs) == Polynomial{2});
    auto split = check_third_derivative_k5free(oracle::two_triangles());
    CHECK(split.holds);
    CHECK_FALSE(std::get<bool>(note(split, "connected")));
    CHECK_THROWS_AS(check_third_derivative_k5free(complete_graph(5)), PreconditionError);
}

TEST_CASE("triangle deletion counts") {
    auto k4 = triangle_deletion_counts(complete_graph(4), Clique{VertexSet{0, 1, 2}}).second;
    CHECK(k4.matches);
    CHECK(k4.predicted == std::array<Int, 4>{4, 3, 0, 0});
    CHECK(k4.direct == k4.predicted);
    auto iso = triangle_deletion_counts(complete_graph(3), Clique{VertexSet{0, 1, 2}}).second;
    CHECK(iso.predicted == std::array<Int, 4>{3, 0, 0, 0});
    CHECK(triangle_deletion_counts(oracle::diamond(), Clique{VertexSet{0, 1, 2}}).second.matches);
    CHECK_THROWS_AS(triangle_deletion_counts(complete_graph(5), Clique{VertexSet{0, 1, 2}}), PreconditionError);
}

TEST_CASE("value helpers") {
    CHECK(values_equal(Value{Int{3}}, Value{Int{3}}));
    CHECK_FALSE(values_equal(Value{Int{3}}, Value{Polynomial{3}}));
    CHECK(values_equal(Value{Polynomial{1, 0}}, Value{Polynomial{1}}));
    CHECK(to_string(Value{true}) == "true");
    CHECK(to_string(Value{Polynomial{1, 2}}) == "1 + 2x");
    CHECK(neighborhood_polynomial(complete_graph(4), VertexSet{0}) == Polynomial{1, 3, 3, 1});
}

}
