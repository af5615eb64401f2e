#include "cliquepoly/conjectures.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <mutex>
#include <string>
#include <thread>

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

IdentityReport not_applicable(std::string id, const Graph& g, std::string reason) {
    IdentityReport r;
    r.identity = std::move(id);
    r.graph6 = to_graph6(g);
    r.lhs = Int{0};
    r.rhs = Int{0};
    r.holds = false;
    r.applicable = false;
    r.notes.emplace_back("reason", std::move(reason));
    return r;
}

// T(G) has an edge iff two triangles share an edge iff some edge lies in two
// triangles. Avoids the 64-vertex bound of triangle_graph.
bool triangle_graph_edgeless(const Graph& g) {
    for (const auto& e : g.edges())
        if (common_neighborhood(g, VertexSet{e.u, e.v}).size() >= 2) return false;
    return true;
}

} // namespace

std::pair<IdentityReport, IdentityReport> check_conjecture1(const Graph& g, bool include_unit) {
    const int n = g.order();
    const Fields params{{"include_unit", include_unit}};
    auto reversed = reverse(poly_of(g), n, include_unit);

    Polynomial vertex_rhs;
    for (int v = 0; v < n; ++v) vertex_rhs += reverse(poly_of(delete_vertex(g, v)), n - 1, include_unit);
    auto first = make_report("conjecture1-first", g, params, derivative(reversed, 1), vertex_rhs);
    first.notes.emplace_back("reversed", reversed);
    first.notes.emplace_back("deck_base", Int{n - 1});

    Polynomial edge_rhs;
    for (const auto& e : g.edges()) edge_rhs += reverse(poly_of(delete_edge(g, e)), n, include_unit);
    auto second = make_report("conjecture1-second", g, params, normalized_derivative(reversed, 2), edge_rhs);
    second.notes.emplace_back("reversed", reversed);
    second.notes.emplace_back("deck_base", Int{n});
    return {std::move(first), std::move(second)};
}

IdentityReport check_triangle_deck_identity(const Graph& g, int k) {
    if (k < 3) throw PreconditionError("triangle-deck identity needs k >= 3");
    auto p = clique_polynomial(g);
    const auto triangles = cliques_of_size(g, 3);
    Int lhs = checked_mul(checked_sub(to_signed(p[3]), binomial(k, 3)), to_signed(p[k]));
    Int rhs = 0;
    for (const auto& t : triangles) rhs = checked_add(rhs, to_signed(clique_polynomial(delete_edge_set(g, t.edges()))[k]));
    return make_report("triangle-deck", g, {{"k", Int{k}}}, lhs, rhs);
}

IdentityReport check_conjecture2(const Graph& g) {
    if (!triangle_graph_edgeless(g)) return not_applicable("conjecture2", g, "triangle graph has edges");
    const int omega = clique_number(g);
    IdentityReport combined;
    combined.identity = "conjecture2";
    combined.graph6 = to_graph6(g);
    combined.holds = true;
    Polynomial lhs;
    Polynomial rhs;
    // Coefficient k of lhs/rhs holds the two sides of the k-th identity.
    for (int k = 3; k <= omega; ++k) {
        auto r = check_triangle_deck_identity(g, k);
        lhs += Polynomial::monomial(std::get<Int>(r.lhs), k);
        rhs += Polynomial::monomial(std::get<Int>(r.rhs), k);
        combined.holds = combined.holds && r.holds;
    }
    combined.lhs = lhs;
    combined.rhs = rhs;
    combined.notes.emplace_back("k_max", Int{omega});
    return combined;
}

IdentityReport check_conjecture3(const Graph& g) {
    auto lhs = normalized_derivative(poly_of(g), 3);
    Polynomial rhs;
    for (const auto& t : cliques_of_size(g, 3)) rhs += poly_of(delete_edge_set(g, t.edges()));
    return make_report("conjecture3", g, {}, lhs, rhs);
}

IdentityReport check_incidence_sums(const Graph& g, IncidenceKind kind, int k) {
    auto m = build_incidence(kind, g, k);
    auto [by_rows, by_cols] = double_count(m);
    const auto rows = m.row_sums();
    const auto cols = m.column_sums();

    bool rows_ok = true;
    bool cols_ok = true;
    Count predicted_total = 0;
    switch (kind) {
    case IncidenceKind::SubcliqueSuperclique:
        for (std::size_t r = 0; r < rows.size(); ++r)
            rows_ok = rows_ok && rows[r] == static_cast<Count>(clique_value(g, m.row_labels()[r]));
        for (auto c : cols) cols_ok = cols_ok && c == static_cast<Count>(k + 1);
        predicted_total = checked_mul(static_cast<Count>(k + 1), static_cast<Count>(m.cols()));
        break;
    case IncidenceKind::VertexDeck:
        for (auto r : rows) rows_ok = rows_ok && r == static_cast<Count>(g.order() - k);
        for (std::size_t c = 0; c < cols.size(); ++c)
            cols_ok = cols_ok && cols[c] == clique_polynomial(delete_vertex(g, static_cast<int>(c)))[k];
        predicted_total = checked_mul(static_cast<Count>(std::max(g.order() - k, 0)), static_cast<Count>(m.rows()));
        break;
    case IncidenceKind::EdgeDeck: {
        const auto edges = g.edges();
        for (auto r : rows) rows_ok = rows_ok && r == static_cast<Count>(g.size() - k * (k - 1) / 2);
        for (std::size_t c = 0; c < cols.size(); ++c)
            cols_ok = cols_ok && cols[c] == clique_polynomial(delete_edge(g, edges[c]))[k];
        predicted_total = m.rows() == 0 ? 0
                                        : checked_mul(static_cast<Count>(g.size() - k * (k - 1) / 2),
                                                      static_cast<Count>(m.rows()));
        break;
    }
    case IncidenceKind::TriangleDeck: {
        for (std::size_t c = 0; c < cols.size(); ++c) {
            auto deleted = delete_edge_set(g, Clique{m.column_labels()[c]}.edges());
            cols_ok = cols_ok && cols[c] == clique_polynomial(deleted)[k];
        }
        predicted_total = by_cols;
        break;
    }
    }

    auto report = make_report("incidence-sums", g, {{"kind", std::string(to_string(kind))}, {"k", Int{k}}},
                              to_signed(by_rows), to_signed(by_cols));
    report.holds = report.holds && rows_ok && cols_ok && by_rows == predicted_total;
    report.notes.emplace_back("rows_as_predicted", rows_ok);
    report.notes.emplace_back("columns_as_predicted", cols_ok);
    report.notes.emplace_back("predicted_total", to_signed(predicted_total));
    if (kind == IncidenceKind::TriangleDeck)
        report.notes.emplace_back("rows_constant", std::adjacent_find(rows.begin(), rows.end(), std::not_equal_to<>()) == rows.end());
    return report;
}

std::string_view to_string(CheckClass c) { return c == CheckClass::Theorem ? "theorem" : "conjecture"; }

std::string_view to_string(Verdict v) {
    switch (v) {
    case Verdict::Holds: return "holds";
    case Verdict::Fails: return "fails";
    case Verdict::Inapplicable: return "inapplicable";
    }
    return "unknown";
}

namespace {

using Reports = std::vector<IdentityReport>;

// Clique sizes the expansion checks use for M; the edge-subset reading grows
// combinatorially with |M|.
constexpr int kExpansionMaxClique = 5;

int k_lo(const CheckOptions& o, int floor) { return std::max(o.k_min, floor); }
int k_hi(const CheckOptions& o, int omega) { return std::min(o.k_max, omega); }

std::vector<Clique> triangles_of(const Graph& g) { return cliques_of_size(g, 3); }

Reports per_k(const Graph& g, const CheckOptions& o, int floor, IdentityReport (*check)(const Graph&, int)) {
    Reports out;
    const int omega = clique_number(g);
    for (int k = k_lo(o, floor); k <= k_hi(o, omega); ++k) out.push_back(check(g, k));
    return out;
}

Reports expansions(const Graph& g, ExpansionInterpretation interpretation) {
    Reports out;
    auto catalog = enumerate_cliques(g, kExpansionMaxClique);
    for (int size = 2; size <= catalog.max_size(); ++size)
        for (const auto& q : catalog.of_size(size)) {
            auto edges = q.edges();
            out.push_back(clique_deletion_expansion(g, edges, interpretation));
        }
    return out;
}

std::vector<CheckInfo> build_catalog() {
    using C = CheckClass;
    std::vector<CheckInfo> out;
    auto add = [&](std::string id, C cls, std::string summary, decltype(CheckInfo::run) run) {
        out.push_back(CheckInfo{std::move(id), cls, std::move(summary), std::move(run)});
    };

    add("handshake", C::Theorem, "sum of clique-values over Delta_k equals (k+1) c_{k+1}",
        [](const Graph& g, const CheckOptions& o) { return per_k(g, o, 1, check_handshake); });
    add("vertex-recurrence", C::Theorem, "C(G) = C(G-v) + x C(G[N(v)])", [](const Graph& g, const CheckOptions&) {
        Reports out;
        for (int v = 0; v < g.order(); ++v) out.push_back(check_vertex_recurrence(g, v));
        return out;
    });
    add("edge-recurrence", C::Theorem, "C(G) = C(G-e) + x^2 C(G[N(e)])", [](const Graph& g, const CheckOptions&) {
        Reports out;
        for (const auto& e : g.edges()) out.push_back(check_edge_recurrence(g, e));
        return out;
    });
    add("vertex-deck", C::Theorem, "(n-k) c_k(G) = sum_v c_k(G-v)",
        [](const Graph& g, const CheckOptions& o) { return per_k(g, o, 1, check_vertex_deck_identity); });
    add("edge-deck", C::Theorem, "(m-C(k,2)) c_k(G) = sum_e c_k(G-e)",
        [](const Graph& g, const CheckOptions& o) { return per_k(g, o, 2, check_edge_deck_identity); });
    add("incidence-sums", C::Theorem, "row/column sums of the subclique-superclique, vertex-deck, edge-deck and triangle-deck matrices",
        [](const Graph& g, const CheckOptions& o) {
            Reports out;
            const int omega = clique_number(g);
            for (int k = k_lo(o, 1); k <= k_hi(o, omega); ++k) {
                out.push_back(check_incidence_sums(g, IncidenceKind::SubcliqueSuperclique, k));
                out.push_back(check_incidence_sums(g, IncidenceKind::VertexDeck, k));
                if (k >= 2) out.push_back(check_incidence_sums(g, IncidenceKind::EdgeDeck, k));
                if (k >= 3) out.push_back(check_incidence_sums(g, IncidenceKind::TriangleDeck, k));
            }
            return out;
        });
    add("first-derivative", C::Theorem, "C'(G) = sum_v C(G[N(v)])",
        [](const Graph& g, const CheckOptions&) { return Reports{check_first_derivative(g)}; });
    add("second-derivative", C::Theorem, "C''(G)/2 = sum_e C(G[N(e)])",
        [](const Graph& g, const CheckOptions&) { return Reports{check_second_derivative(g)}; });
    add("clique-deletion", C::Theorem, "clique-deletion expansion, inner sum over r-cliques of M (M up to K5)",
        [](const Graph& g, const CheckOptions&) { return expansions(g, ExpansionInterpretation::CliqueSubsets); });
    add("triangle-identity", C::Theorem, "C(G) = C(G-delta) + x^2 I2 - 2 x^3 I3", [](const Graph& g, const CheckOptions&) {
        Reports out;
        for (const auto& t : triangles_of(g)) out.push_back(triangle_identity(g, t).first);
        return out;
    });
    add("third-derivative-k5free", C::Theorem, "C'''(G)/3! = sum_delta C(G[N(delta)]) for K5-free G",
        [](const Graph& g, const CheckOptions&) {
            if (clique_number(g) >= 5) return Reports{not_applicable("third-derivative-k5free", g, "omega >= 5")};
            return Reports{check_third_derivative_k5free(g)};
        });
    add("triangle-deletion-counts", C::Theorem, "c_1..c_4 of G-delta predicted from counts of G (omega <= 4)",
        [](const Graph& g, const CheckOptions&) {
            if (clique_number(g) >= 5) return Reports{not_applicable("triangle-deletion-counts", g, "omega >= 5")};
            Reports out;
            for (const auto& t : triangles_of(g)) out.push_back(triangle_deletion_counts(g, t).first);
            return out;
        });

    add("kth-derivative", C::Conjecture, "C^(k)(G)/k! = sum over k-cliques Q of C(G[N(Q)])",
        [](const Graph& g, const CheckOptions& o) { return per_k(g, o, 1, check_kth_derivative_general); });
    add("clique-deletion-edge-subsets", C::Conjecture,
        "clique-deletion expansion, inner sum over all C(r,2)-edge subsets of M (M up to K5)",
        [](const Graph& g, const CheckOptions&) { return expansions(g, ExpansionInterpretation::EdgeSubsets); });
    add("triangle-recurrence", C::Conjecture, "C(G) = C(G-delta) + x^3 C(G[N(delta)])",
        [](const Graph& g, const CheckOptions&) {
            Reports out;
            for (const auto& t : triangles_of(g)) out.push_back(check_triangle_recurrence(g, t));
            return out;
        });
    add("conjecture1", C::Conjecture, "derivatives of the reversed clique polynomial against its decks",
        [](const Graph& g, const CheckOptions&) {
            auto [a, b] = check_conjecture1(g, false);
            return Reports{std::move(a), std::move(b)};
        });
    add("conjecture1-unit", C::Conjecture, "as conjecture1 with the extra leading unit term",
        [](const Graph& g, const CheckOptions&) {
            auto [a, b] = check_conjecture1(g, true);
            return Reports{std::move(a), std::move(b)};
        });
    add("triangle-deck", C::Conjecture, "(t-C(k,3)) c_k(G) = sum_delta c_k(G-delta)",
        [](const Graph& g, const CheckOptions& o) { return per_k(g, o, 3, check_triangle_deck_identity); });
    add("conjecture2", C::Conjecture, "triangle-deck identity whenever T(G) is edgeless",
        [](const Graph& g, const CheckOptions&) { return Reports{check_conjecture2(g)}; });
    add("conjecture3", C::Conjecture, "C'''(G)/3! = sum_delta C(G-delta)",
        [](const Graph& g, const CheckOptions&) { return Reports{check_conjecture3(g)}; });
    return out;
}

} // namespace

const std::vector<CheckInfo>& check_catalog() {
    static const std::vector<CheckInfo> catalog = build_catalog();
    return catalog;
}

const CheckInfo& find_check(std::string_view id) {
    for (const auto& c : check_catalog())
        if (c.id == id) return c;
    throw PreconditionError("unknown check id '" + std::string(id) + "'");
}

std::vector<std::string> expand_check_ids(const std::vector<std::string>& ids) {
    std::vector<bool> wanted(check_catalog().size(), false);
    for (const auto& id : ids) {
        const bool theorems = id == "all-theorems" || id == "all";
        const bool conjectures = id == "all-conjectures" || id == "all";
        if (theorems || conjectures) {
            for (std::size_t i = 0; i < check_catalog().size(); ++i) {
                auto cls = check_catalog()[i].check_class;
                if ((theorems && cls == CheckClass::Theorem) || (conjectures && cls == CheckClass::Conjecture))
                    wanted[i] = true;
            }
            continue;
        }
        const auto& info = find_check(id);
        wanted[static_cast<std::size_t>(&info - check_catalog().data())] = true;
    }
    std::vector<std::string> out;
    for (std::size_t i = 0; i < wanted.size(); ++i)
        if (wanted[i]) out.push_back(check_catalog()[i].id);
    return out;
}

CheckOutcome evaluate_check(const CheckInfo& check, const Graph& g, const CheckOptions& options) {
    auto reports = check.run(g, options);
    bool any_applicable = reports.empty();
    for (auto& r : reports) {
        if (!r.applicable) continue;
        any_applicable = true;
        if (!r.holds) return CheckOutcome{Verdict::Fails, std::move(r)};
    }
    return CheckOutcome{any_applicable ? Verdict::Holds : Verdict::Inapplicable, std::nullopt};
}

Graph shrink_counterexample(const Graph& g, std::string_view check_id, const CheckOptions& options) {
    const auto& check = find_check(check_id);
    auto fails = [&](const Graph& h) { return evaluate_check(check, h, options).verdict == Verdict::Fails; };
    if (!fails(g)) throw PreconditionError("check '" + std::string(check_id) + "' does not fail on the input graph");

    Graph current = g;
    bool progressed = true;
    while (progressed) {
        progressed = false;
        for (int v = 0; v < current.order() && !progressed; ++v) {
            auto candidate = delete_vertex(current, v);
            if (fails(candidate)) {
                current = std::move(candidate);
                progressed = true;
            }
        }
        if (progressed) continue;
        for (const auto& e : current.edges()) {
            auto candidate = delete_edge(current, e);
            if (fails(candidate)) {
                current = std::move(candidate);
                progressed = true;
                break;
            }
        }
    }
    return current;
}

void validate(const CampaignConfig& cfg) {
    if (cfg.n_min < 0 || cfg.n_max > kMaxVertices || cfg.n_min > cfg.n_max)
        throw PreconditionError("vertex range must satisfy 0 <= min <= max <= 64");
    if (!(cfg.p_min >= 0.0 && cfg.p_max <= 1.0 && cfg.p_min <= cfg.p_max))
        throw PreconditionError("probability range must satisfy 0 <= min <= max <= 1");
    if (cfg.count < 1) throw PreconditionError("sample count must be at least 1");
    if (cfg.checks.empty()) throw PreconditionError("no checks selected");
    if (cfg.options.k_min > cfg.options.k_max) throw PreconditionError("empty k range");
    for (const auto& id : cfg.checks) find_check(id);
}

Graph campaign_sample(const CampaignConfig& cfg, std::size_t index) {
    Rng rng(RngSpec{derive_seed(cfg.rng.seed, index)});
    const int n = rng.uniform_int(cfg.n_min, cfg.n_max);
    const double u = rng.unit();
    const double p = cfg.p_min == cfg.p_max ? cfg.p_min : cfg.p_min + u * (cfg.p_max - cfg.p_min);
    return random_gnp(n, std::clamp(p, 0.0, 1.0), rng);
}

bool CampaignReport::theorem_failure() const {
    return std::any_of(tallies.begin(), tallies.end(), [](const CheckTally& t) {
        return t.check_class == CheckClass::Theorem && (t.fails > 0 || t.errors > 0);
    });
}

namespace {

struct SampleCheckResult {
    Verdict verdict = Verdict::Holds;
    std::optional<IdentityReport> witness;
    std::optional<IdentityReport> shrunk;
    std::optional<std::string> error;
};

SampleCheckResult run_one(const CheckInfo& check, const Graph& g, const CampaignConfig& cfg) {
    SampleCheckResult out;
    try {
        auto outcome = evaluate_check(check, g, cfg.options);
        out.verdict = outcome.verdict;
        out.witness = std::move(outcome.witness);
        if (out.verdict == Verdict::Fails && cfg.shrink) {
            auto small = shrink_counterexample(g, check.id, cfg.options);
            out.shrunk = evaluate_check(check, small, cfg.options).witness;
        }
    } catch (const OverflowError& e) {
        out.error = e.what();
    }
    return out;
}

} // namespace

CampaignReport run_campaign(const CampaignConfig& cfg) {
    validate(cfg);
    const auto start = std::chrono::steady_clock::now();
    const auto ids = expand_check_ids(cfg.checks);
    std::vector<const CheckInfo*> checks;
    for (const auto& id : ids) checks.push_back(&find_check(id));

    std::vector<std::vector<SampleCheckResult>> results(cfg.count);
    std::vector<std::string> graph6(cfg.count);
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < cfg.count; i = next++) {
            auto g = campaign_sample(cfg, i);
            graph6[i] = to_graph6(g);
            results[i].reserve(checks.size());
            for (const auto* c : checks) results[i].push_back(run_one(*c, g, cfg));
        }
    };
    unsigned threads = cfg.threads != 0 ? cfg.threads : std::max(1U, std::thread::hardware_concurrency());
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, cfg.count));
    {
        std::vector<std::jthread> pool;
        for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
        worker();
    }

    CampaignReport report;
    report.config = cfg;
    report.config.checks = ids;
    for (const auto* c : checks) report.tallies.push_back(CheckTally{c->id, c->check_class});
    for (std::size_t i = 0; i < cfg.count; ++i) {
        for (std::size_t j = 0; j < checks.size(); ++j) {
            auto& tally = report.tallies[j];
            auto& r = results[i][j];
            ++tally.tested;
            if (r.error) {
                ++tally.errors;
                report.errors.push_back(CampaignError{checks[j]->id, i, graph6[i], *r.error});
                continue;
            }
            switch (r.verdict) {
            case Verdict::Holds: ++tally.holds; break;
            case Verdict::Inapplicable: ++tally.inapplicable; break;
            case Verdict::Fails:
                ++tally.fails;
                report.counterexamples.push_back(
                    Counterexample{checks[j]->id, checks[j]->check_class, i, std::move(*r.witness), std::move(r.shrunk)});
                break;
            }
        }
    }
    report.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

} // namespace cliquepoly
