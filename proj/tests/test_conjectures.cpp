#include <doctest.h>

#include "cliquepoly/conjectures.hpp"
#include "cliquepoly/graph_io.hpp"
#include "cliquepoly/json_io.hpp"
#include "oracle.hpp"

using namespace cliquepoly;

namespace {

Polynomial as_poly(const Value& v) { return std::get<Polynomial>(v); }
Int as_int(const Value& v) { return std::get<Int>(v); }

CampaignConfig small_campaign(std::vector<std::string> checks, std::size_t count, std::uint64_t seed) {
    CampaignConfig cfg;
    cfg.n_min = 3;
    cfg.n_max = 8;
    cfg.count = count;
    cfg.rng = RngSpec{seed};
    cfg.checks = std::move(checks);
    return cfg;
}

} // namespace

TEST_SUITE("conjectures") {

TEST_CASE("conjecture 1 on K2") {
    auto [first, second] = check_conjecture1(complete_graph(2), false);
    CHECK(first.holds);
    CHECK(as_poly(first.lhs) == Polynomial{2, 2});
    CHECK(as_poly(first.rhs) == Polynomial{2, 2});
    auto [unit_first, unit_second] = check_conjecture1(complete_graph(2), true);
    CHECK_FALSE(unit_first.holds);
    CHECK(as_poly(unit_first.lhs) == Polynomial{2, 2});
    CHECK(as_poly(unit_first.rhs) == Polynomial{4, 2});
    (void)second;
    (void)unit_second;
}

TEST_CASE("triangle-deck identity") {
    auto two = check_triangle_deck_identity(oracle::two_triangles(), 3);
    CHECK(two.holds);
    CHECK(as_int(two.lhs) == 2);
    auto k4 = check_triangle_deck_identity(complete_graph(4), 3);
    CHECK_FALSE(k4.holds);
    CHECK(as_int(k4.lhs) == 12);
    CHECK(as_int(k4.rhs) == 0);
    auto c6 = check_triangle_deck_identity(cycle_graph(6), 3);
    CHECK(c6.holds);
    CHECK(as_int(c6.lhs) == 0);
}

TEST_CASE("conjecture 2 applicability") {
    CHECK(check_conjecture2(oracle::two_triangles()).applicable);
    CHECK(check_conjecture2(oracle::two_triangles()).holds);
    CHECK_FALSE(check_conjecture2(complete_graph(4)).applicable);
    CHECK_FALSE(check_conjecture2(oracle::diamond()).applicable);
    auto c5 = check_conjecture2(cycle_graph(5));
    CHECK(c5.applicable);
    CHECK(c5.holds);
}

TEST_CASE("conjecture 2 on seeded graphs with edgeless triangle graph") {
    std::size_t kept = 0;
    for (const auto& g : oracle::seeded_corpus(400, 4, 12, {0.2, 0.3, 0.4}, 515)) {
        if (triangle_graph(g).size() != 0) continue;
        ++kept;
        auto r = check_conjecture2(g);
        REQUIRE(r.applicable);
        REQUIRE(r.holds);
    }
    CHECK(kept > 50);
}

TEST_CASE("conjecture 3") {
    auto k4 = check_conjecture3(complete_graph(4));
    CHECK_FALSE(k4.holds);
    CHECK(as_poly(k4.lhs) == Polynomial{4, 4});
    CHECK(as_poly(k4.rhs) == Polynomial{4, 16, 12});
    auto k3 = check_conjecture3(complete_graph(3));
    CHECK_FALSE(k3.holds);
    CHECK(as_poly(k3.lhs) == Polynomial{1});
    CHECK(as_poly(k3.rhs) == Polynomial{1, 3});
    CHECK(check_conjecture3(cycle_graph(5)).holds);
}

TEST_CASE("incidence sums on the corpus") {
    for (const auto& g : oracle::seeded_corpus(60, 3, 10, {0.4, 0.7}, 88)) {
        auto outcome = evaluate_check(find_check("incidence-sums"), g);
        REQUIRE(outcome.verdict == Verdict::Holds);
    }
}

TEST_CASE("catalog") {
    CHECK(find_check("handshake").check_class == CheckClass::Theorem);
    CHECK(find_check("conjecture3").check_class == CheckClass::Conjecture);
    CHECK_THROWS_AS(find_check("nosuch"), PreconditionError);
    auto theorems = expand_check_ids({"all-theorems"});
    for (const auto& id : theorems) CHECK(find_check(id).check_class == CheckClass::Theorem);
    CHECK(expand_check_ids({"conjecture3", "handshake", "conjecture3"}) ==
          std::vector<std::string>{"handshake", "conjecture3"});
    CHECK(expand_check_ids({"all"}).size() == check_catalog().size());
}

TEST_CASE("theorem checks hold on K3 and K4; verdict classes") {
    for (const auto& g : {complete_graph(3), complete_graph(4), oracle::diamond()})
        for (const auto& id : expand_check_ids({"all-theorems"})) {
            INFO(id);
            CHECK(evaluate_check(find_check(id), g).verdict != Verdict::Fails);
        }
    CHECK(evaluate_check(find_check("conjecture2"), complete_graph(4)).verdict == Verdict::Inapplicable);
    CHECK(evaluate_check(find_check("triangle-identity"), cycle_graph(5)).verdict == Verdict::Holds);
    auto fail = evaluate_check(find_check("conjecture3"), complete_graph(4));
    CHECK(fail.verdict == Verdict::Fails);
    REQUIRE(fail.witness.has_value());
    CHECK(fail.witness->identity == "conjecture3");
}

TEST_CASE("shrinking") {
    // K4 plus a pendant path shrinks to a failing graph on at most 4 vertices.
    Graph g(7, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}, {3, 4}, {4, 5}, {5, 6}});
    auto small = shrink_counterexample(g, "conjecture3");
    CHECK(small.order() <= 4);
    CHECK(evaluate_check(find_check("conjecture3"), small).verdict == Verdict::Fails);
    // Every single deletion of the result passes.
    for (int v = 0; v < small.order(); ++v)
        CHECK(evaluate_check(find_check("conjecture3"), delete_vertex(small, v)).verdict != Verdict::Fails);
    for (const auto& e : small.edges())
        CHECK(evaluate_check(find_check("conjecture3"), delete_edge(small, e)).verdict != Verdict::Fails);
    // Already minimal: unchanged.
    CHECK(shrink_counterexample(small, "conjecture3") == small);
    CHECK_THROWS_AS(shrink_counterexample(cycle_graph(5), "conjecture3"), PreconditionError);
}

TEST_CASE("campaign config validation") {
    auto cfg = small_campaign({"handshake"}, 10, 1);
    CHECK_NOTHROW(validate(cfg));
    auto bad = cfg;
    bad.n_min = 9;
    CHECK_THROWS_AS(validate(bad), PreconditionError);
    bad = cfg;
    bad.p_max = 1.5;
    CHECK_THROWS_AS(validate(bad), PreconditionError);
    bad = cfg;
    bad.checks = {"nosuch"};
    CHECK_THROWS_AS(validate(bad), PreconditionError);
    bad = cfg;
    bad.checks.clear();
    CHECK_THROWS_AS(validate(bad), PreconditionError);
}

TEST_CASE("theorem campaign has zero fails") {
    CampaignConfig cfg;
    cfg.n_min = 4;
    cfg.n_max = 12;
    cfg.p_min = 0.2;
    cfg.p_max = 0.8;
    cfg.count = 500;
    cfg.rng = RngSpec{7};
    cfg.checks = {"vertex-deck", "edge-deck", "first-derivative", "second-derivative"};
    auto report = run_campaign(cfg);
    CHECK_FALSE(report.theorem_failure());
    CHECK(report.counterexamples.empty());
    for (const auto& t : report.tallies) {
        CHECK(t.tested == 500);
        CHECK(t.fails == 0);
    }
}

TEST_CASE("campaign counterexamples replay") {
    auto cfg = small_campaign({"conjecture3", "triangle-deck"}, 60, 11);
    auto report = run_campaign(cfg);
    std::uint64_t fails = 0;
    for (const auto& t : report.tallies) fails += t.fails;
    CHECK(fails == report.counterexamples.size());
    CHECK_FALSE(report.counterexamples.empty());
    for (const auto& cx : report.counterexamples) {
        auto g = parse_graph6(cx.report.graph6);
        CHECK(g == campaign_sample(cfg, cx.sample));
        auto again = evaluate_check(find_check(cx.check), g, cfg.options);
        REQUIRE(again.verdict == Verdict::Fails);
        CHECK(values_equal(again.witness->lhs, cx.report.lhs));
        CHECK(values_equal(again.witness->rhs, cx.report.rhs));
    }
}

TEST_CASE("campaign is deterministic across runs and thread counts") {
    auto cfg = small_campaign({"conjecture3", "conjecture2", "handshake"}, 80, 7);
    cfg.shrink = true;
    cfg.threads = 1;
    auto a = to_json(run_campaign(cfg)).dump();
    cfg.threads = 4;
    auto b = to_json(run_campaign(cfg)).dump();
    auto c = to_json(run_campaign(cfg)).dump();
    CHECK(a == b);
    CHECK(b == c);
    cfg.rng = RngSpec{8};
    CHECK(to_json(run_campaign(cfg)).dump() != a);
}

TEST_CASE("campaign json shape") {
    auto cfg = small_campaign({"conjecture3"}, 20, 3);
    cfg.shrink = true;
    auto j = to_json(run_campaign(cfg));
    CHECK(j.contains("config"));
    CHECK(j.contains("tallies"));
    CHECK(j.contains("counterexamples"));
    CHECK_FALSE(j.contains("elapsed_seconds"));
    CHECK(j["theorem_failure"] == false);
    CHECK(to_json(run_campaign(cfg), true).contains("elapsed_seconds"));
}

}
