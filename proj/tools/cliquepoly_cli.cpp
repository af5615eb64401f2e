// cliquepoly: command-line front end for clique polynomial computations
// and seeded conjecture campaigns.
//
// Exit codes: 0 success, 1 a theorem-class check failed, 2 usage or input error.

#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cliquepoly/cliques.hpp"
#include "cliquepoly/conjectures.hpp"
#include "cliquepoly/graph_io.hpp"
#include "cliquepoly/identities.hpp"
#include "cliquepoly/incidence.hpp"
#include "cliquepoly/json_io.hpp"
#include "cliquepoly/random.hpp"

namespace cp = cliquepoly;

namespace {

constexpr int kExitTheoremFailure = 1;
constexpr int kExitUsage = 2;

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct InputOptions {
    std::string graph6;
    std::string edge_list_path;
};

void add_input_options(CLI::App* cmd, InputOptions& in) {
    cmd->add_option("-g,--graph6", in.graph6, "graph in graph6 format");
    cmd->add_option("-i,--input", in.edge_list_path, "edge-list file (first line n, then \"u v\" lines)");
}

cp::Graph load_graph(const InputOptions& in) {
    if (!in.graph6.empty() && !in.edge_list_path.empty()) throw UsageError("give either -g or -i, not both");
    if (!in.graph6.empty()) return cp::parse_graph6(in.graph6);
    if (!in.edge_list_path.empty()) {
        std::ifstream file(in.edge_list_path);
        if (!file) throw UsageError("cannot open " + in.edge_list_path);
        std::string text((std::istreambuf_iterator<char>(file)), std::istreambuf_iterator<char>());
        return cp::parse_edge_list(text);
    }
    std::string line;
    if (!std::getline(std::cin, line)) throw UsageError("no graph given (use -g, -i or graph6 on stdin)");
    return cp::parse_graph6(line);
}

std::pair<double, double> parse_real_range(const std::string& text) {
    auto dots = text.find("..");
    try {
        if (dots == std::string::npos) {
            double v = std::stod(text);
            return {v, v};
        }
        return {std::stod(text.substr(0, dots)), std::stod(text.substr(dots + 2))};
    } catch (const std::exception&) {
        throw UsageError("malformed range '" + text + "'");
    }
}

std::pair<int, int> parse_int_range(const std::string& text) {
    auto [lo, hi] = parse_real_range(text);
    if (lo != static_cast<int>(lo) || hi != static_cast<int>(hi)) throw UsageError("range '" + text + "' must be integral");
    return {static_cast<int>(lo), static_cast<int>(hi)};
}

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> out;
    std::stringstream ss(text);
    for (std::string item; std::getline(ss, item, sep);)
        if (!item.empty()) out.push_back(item);
    return out;
}

std::vector<int> parse_vertex_tuple(const std::string& text) {
    std::vector<int> out;
    for (const auto& part : split(text, '-')) {
        try {
            std::size_t used = 0;
            out.push_back(std::stoi(part, &used));
            if (used != part.size()) throw std::invalid_argument(part);
        } catch (const std::exception&) {
            throw UsageError("malformed vertex tuple '" + text + "'");
        }
    }
    return out;
}

cp::EdgeRef parse_edge(const std::string& text) {
    auto v = parse_vertex_tuple(text);
    if (v.size() != 2) throw UsageError("edge must be written u-v, got '" + text + "'");
    return cp::EdgeRef(v[0], v[1]);
}

cp::Clique parse_clique(const std::string& text) {
    cp::VertexSet s;
    for (int v : parse_vertex_tuple(text)) {
        if (v < 0 || v >= cp::kMaxVertices) throw UsageError("vertex id out of range in '" + text + "'");
        s.insert(v);
    }
    return cp::Clique{s};
}

// ---- poly ------------------------------------------------------------------

struct PolyOptions {
    InputOptions in;
    int derivative = 0;
    bool reversed = false;
    bool with_unit = false;
    bool json = false;
};

int run_poly(const PolyOptions& o) {
    auto g = load_graph(o.in);
    auto p = cp::clique_polynomial(g);
    auto poly = p.as_polynomial();
    std::string what = "clique polynomial";
    if (o.reversed) {
        poly = cp::reverse(poly, g.order(), o.with_unit);
        what = o.with_unit ? "reversed with unit" : "reversed";
    }
    if (o.derivative > 0) poly = cp::normalized_derivative(poly, o.derivative);

    if (o.json) {
        cp::Json out;
        out["graph6"] = cp::to_graph6(g);
        out["n"] = g.order();
        out["m"] = g.size();
        out["omega"] = p.degree();
        out["polynomial"] = what;
        out["derivative"] = o.derivative;
        out["coefficients"] = cp::to_json(poly);
        std::cout << out.dump() << "\n";
    } else {
        std::cout << cp::to_coefficient_string(poly) << "\n";
        std::cout << "omega " << p.degree() << "\n";
    }
    return 0;
}

// ---- matrix ----------------------------------------------------------------

struct MatrixOptions {
    InputOptions in;
    std::string kind;
    int k = 1;
    std::string format = "csv";
};

cp::IncidenceKind parse_kind(const std::string& kind) {
    for (auto k : {cp::IncidenceKind::SubcliqueSuperclique, cp::IncidenceKind::VertexDeck, cp::IncidenceKind::EdgeDeck,
                   cp::IncidenceKind::TriangleDeck})
        if (cp::to_string(k) == kind) return k;
    throw UsageError("unknown matrix kind '" + kind + "' (expected super, vdeck, edeck or tdeck)");
}

int run_matrix(const MatrixOptions& o) {
    auto kind = parse_kind(o.kind);
    auto g = load_graph(o.in);
    auto m = cp::build_incidence(kind, g, o.k);
    if (o.format == "json") {
        std::cout << cp::to_json(m).dump() << "\n";
        return 0;
    }
    // CSV body, then the sums as a trailing column and row.
    auto rows = m.row_sums();
    auto cols = m.column_sums();
    auto [by_rows, by_cols] = cp::double_count(m);
    std::string body = cp::to_csv(m);
    std::istringstream lines(body);
    std::string line;
    std::getline(lines, line);
    std::cout << line << ",sum\n";
    for (std::size_t r = 0; std::getline(lines, line); ++r) std::cout << line << "," << cp::to_string(rows[r]) << "\n";
    std::cout << "sum";
    for (auto c : cols) std::cout << "," << cp::to_string(c);
    std::cout << "," << cp::to_string(by_rows) << "\n";
    std::cerr << "double count: rows " << cp::to_string(by_rows) << ", columns " << cp::to_string(by_cols) << "\n";
    return 0;
}

// ---- verify ----------------------------------------------------------------

struct VerifyOptions {
    InputOptions in;
    std::vector<std::string> identities;
    bool all_theorems = false;
    bool all_conjectures = false;
    std::optional<int> v;
    std::optional<std::string> e;
    std::optional<int> k;
    std::optional<std::string> delta;
    std::optional<std::string> edge_set;
    bool json = false;
};

std::vector<cp::IdentityReport> instances(const cp::CheckInfo& check, const cp::Graph& g, const VerifyOptions& o) {
    using R = std::vector<cp::IdentityReport>;
    const auto& id = check.id;
    if (o.v && id == "vertex-recurrence") return R{cp::check_vertex_recurrence(g, *o.v)};
    if (o.e && id == "edge-recurrence") return R{cp::check_edge_recurrence(g, parse_edge(*o.e))};
    if (o.k) {
        if (id == "handshake") return R{cp::check_handshake(g, *o.k)};
        if (id == "vertex-deck") return R{cp::check_vertex_deck_identity(g, *o.k)};
        if (id == "edge-deck") return R{cp::check_edge_deck_identity(g, *o.k)};
        if (id == "kth-derivative") return R{cp::check_kth_derivative_general(g, *o.k)};
        if (id == "triangle-deck") return R{cp::check_triangle_deck_identity(g, *o.k)};
        if (id == "incidence-sums") {
            R out{cp::check_incidence_sums(g, cp::IncidenceKind::SubcliqueSuperclique, *o.k),
                  cp::check_incidence_sums(g, cp::IncidenceKind::VertexDeck, *o.k)};
            if (*o.k >= 2) out.push_back(cp::check_incidence_sums(g, cp::IncidenceKind::EdgeDeck, *o.k));
            if (*o.k >= 3) out.push_back(cp::check_incidence_sums(g, cp::IncidenceKind::TriangleDeck, *o.k));
            return out;
        }
    }
    if (o.delta) {
        auto t = parse_clique(*o.delta);
        if (id == "triangle-identity") return R{cp::triangle_identity(g, t).first};
        if (id == "triangle-recurrence") return R{cp::check_triangle_recurrence(g, t)};
        if (id == "triangle-deletion-counts") return R{cp::triangle_deletion_counts(g, t).first};
    }
    if (o.edge_set && (id == "clique-deletion" || id == "clique-deletion-edge-subsets")) {
        std::vector<cp::EdgeRef> edges;
        for (const auto& part : split(*o.edge_set, ',')) edges.push_back(parse_edge(part));
        auto reading = id == "clique-deletion" ? cp::ExpansionInterpretation::CliqueSubsets
                                               : cp::ExpansionInterpretation::EdgeSubsets;
        return R{cp::clique_deletion_expansion(g, edges, reading)};
    }
    return check.run(g, cp::CheckOptions{});
}

std::string describe(const cp::IdentityReport& r) {
    std::string status = !r.applicable ? "n/a" : r.holds ? "holds" : "fails";
    std::string params;
    for (const auto& [key, value] : r.params) params += (params.empty() ? "" : " ") + key + "=" + cp::to_string(value);
    std::string out = "[" + status + "] " + r.identity;
    if (!params.empty()) out += " (" + params + ")";
    if (r.applicable) out += ": lhs = " + cp::to_string(r.lhs) + "; rhs = " + cp::to_string(r.rhs);
    for (const auto& [key, value] : r.notes) out += "; " + key + " = " + cp::to_string(value);
    return out;
}

int run_verify(VerifyOptions o) {
    if (o.all_theorems) o.identities.push_back("all-theorems");
    if (o.all_conjectures) o.identities.push_back("all-conjectures");
    std::vector<std::string> requested;
    for (const auto& item : o.identities)
        for (auto& id : split(item, ',')) requested.push_back(id);
    if (requested.empty()) throw UsageError("no identity selected (use --identity, --all-theorems or --all-conjectures)");
    std::vector<std::string> ids;
    try {
        ids = cp::expand_check_ids(requested);
    } catch (const cp::PreconditionError& e) {
        throw UsageError(e.what());
    }

    auto g = load_graph(o.in);
    bool theorem_failed = false;
    cp::Json all = cp::Json::array();
    for (const auto& id : ids) {
        const auto& check = cp::find_check(id);
        for (const auto& r : instances(check, g, o)) {
            if (check.check_class == cp::CheckClass::Theorem && r.applicable && !r.holds) theorem_failed = true;
            if (o.json) {
                auto j = cp::to_json(r);
                j["class"] = std::string(cp::to_string(check.check_class));
                all.push_back(j);
            } else {
                std::cout << describe(r) << "\n";
            }
        }
    }
    if (o.json) std::cout << all.dump() << "\n";
    return theorem_failed ? kExitTheoremFailure : 0;
}

// ---- fuzz ------------------------------------------------------------------

struct FuzzOptions {
    std::string n = "4..10";
    std::string p = "0.5";
    std::size_t count = 100;
    std::uint64_t seed = 0;
    std::vector<std::string> checks;
    std::optional<std::string> k;
    bool shrink = false;
    bool json = false;
    bool timing = false;
    unsigned threads = 0;
};

void print_text(const cp::CampaignReport& r, bool timing) {
    std::cout << "campaign: n " << r.config.n_min << ".." << r.config.n_max << ", p " << r.config.p_min << ".."
              << r.config.p_max << ", " << r.config.count << " graphs, seed " << r.config.rng.seed << "\n";
    for (const auto& t : r.tallies)
        std::cout << "  " << t.check << " [" << cp::to_string(t.check_class) << "]: tested " << t.tested << ", holds "
                  << t.holds << ", fails " << t.fails << ", inapplicable " << t.inapplicable << ", errors " << t.errors
                  << "\n";
    for (const auto& c : r.counterexamples) {
        std::cout << "counterexample " << c.check << " sample " << c.sample << " " << c.report.graph6 << "\n";
        std::cout << "  " << describe(c.report) << "\n";
        if (c.shrunk) std::cout << "  shrunk " << c.shrunk->graph6 << ": " << describe(*c.shrunk) << "\n";
    }
    for (const auto& e : r.errors)
        std::cout << "error " << e.check << " sample " << e.sample << " " << e.graph6 << ": " << e.message << "\n";
    std::cout << (r.theorem_failure() ? "THEOREM FAILURE\n" : "no theorem failures\n");
    if (timing) std::cout << "elapsed " << r.elapsed_seconds << " s\n";
}

int run_fuzz(const FuzzOptions& o) {
    cp::CampaignConfig cfg;
    std::tie(cfg.n_min, cfg.n_max) = parse_int_range(o.n);
    std::tie(cfg.p_min, cfg.p_max) = parse_real_range(o.p);
    cfg.count = o.count;
    cfg.rng.seed = o.seed;
    for (const auto& item : o.checks)
        for (auto& id : split(item, ',')) cfg.checks.push_back(id);
    if (o.k) std::tie(cfg.options.k_min, cfg.options.k_max) = parse_int_range(*o.k);
    cfg.shrink = o.shrink;
    cfg.threads = o.threads;
    try {
        cfg.checks = cp::expand_check_ids(cfg.checks);
        cp::validate(cfg);
    } catch (const cp::PreconditionError& e) {
        throw UsageError(e.what());
    }
    auto report = cp::run_campaign(cfg);
    if (o.json)
        std::cout << cp::to_json(report, o.timing).dump(2) << "\n";
    else
        print_text(report, o.timing);
    return report.theorem_failure() ? kExitTheoremFailure : 0;
}

// ---- gen / list ------------------------------------------------------------

int run_gen(int n, double p, std::uint64_t seed) {
    if (!(p >= 0.0 && p <= 1.0)) throw UsageError("probability must lie in [0, 1]");
    if (n < 0 || n > cp::kMaxVertices) throw UsageError("vertex count must lie in [0, 64]");
    std::cout << cp::to_graph6(cp::random_gnp(n, p, cp::RngSpec{seed})) << "\n";
    return 0;
}

int run_list() {
    for (const auto& c : cp::check_catalog())
        std::cout << c.id << " [" << cp::to_string(c.check_class) << "] " << c.summary << "\n";
    std::cout << "groups: all-theorems, all-conjectures, all\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Clique polynomials, clique incidence matrices and clique-counting identity checks"};
    app.require_subcommand(1);

    PolyOptions poly;
    auto* poly_cmd = app.add_subcommand("poly", "print the clique polynomial coefficients and clique number");
    add_input_options(poly_cmd, poly.in);
    poly_cmd->add_option("--derivative", poly.derivative, "print C^(k)/k! instead")->check(CLI::NonNegativeNumber);
    poly_cmd->add_flag("--reversed", poly.reversed, "coefficient-reversed polynomial sum_k c_k x^(n-k)");
    poly_cmd->add_flag("--with-unit", poly.with_unit, "with --reversed: add the extra leading 1");
    poly_cmd->add_flag("--json", poly.json, "JSON output");

    MatrixOptions matrix;
    auto* matrix_cmd = app.add_subcommand("matrix", "print a clique incidence matrix with its sums");
    add_input_options(matrix_cmd, matrix.in);
    matrix_cmd->add_option("--kind", matrix.kind, "super | vdeck | edeck | tdeck")->required();
    matrix_cmd->add_option("--k", matrix.k, "clique order of the rows")->required();
    matrix_cmd->add_option("--format", matrix.format, "csv | json")->check(CLI::IsMember({"csv", "json"}));

    VerifyOptions verify;
    auto* verify_cmd = app.add_subcommand("verify", "check identities on one graph");
    add_input_options(verify_cmd, verify.in);
    verify_cmd->add_option("--identity", verify.identities, "identity id(s), comma separated or repeated");
    verify_cmd->add_flag("--all-theorems", verify.all_theorems, "every theorem-class identity");
    verify_cmd->add_flag("--all-conjectures", verify.all_conjectures, "every conjecture-class identity");
    verify_cmd->add_option("--v", verify.v, "vertex parameter");
    verify_cmd->add_option("--e", verify.e, "edge parameter u-v");
    verify_cmd->add_option("--k", verify.k, "clique order parameter");
    verify_cmd->add_option("--delta", verify.delta, "triangle parameter a-b-c");
    verify_cmd->add_option("--M", verify.edge_set, "edge set u-v,u-v,... inducing a clique");
    verify_cmd->add_flag("--json", verify.json, "JSON array of reports");

    FuzzOptions fuzz;
    auto* fuzz_cmd = app.add_subcommand("fuzz", "run a seeded campaign over random graphs");
    fuzz_cmd->add_option("--n", fuzz.n, "vertex range A..B")->capture_default_str();
    fuzz_cmd->add_option("--p", fuzz.p, "edge probability X or range X..Y")->capture_default_str();
    fuzz_cmd->add_option("--count", fuzz.count, "number of graphs")->capture_default_str();
    fuzz_cmd->add_option("--seed", fuzz.seed, "campaign seed")->capture_default_str();
    fuzz_cmd->add_option("--check", fuzz.checks, "check id(s) or group, comma separated")->required();
    fuzz_cmd->add_option("--k", fuzz.k, "restrict k-parameterised checks to A..B");
    fuzz_cmd->add_flag("--shrink", fuzz.shrink, "shrink every counterexample");
    fuzz_cmd->add_flag("--json", fuzz.json, "JSON report");
    fuzz_cmd->add_flag("--timing", fuzz.timing, "include wall-clock time (output no longer byte-stable)");
    fuzz_cmd->add_option("--threads", fuzz.threads, "worker threads, 0 = all cores");

    int gen_n = 0;
    double gen_p = 0.0;
    std::uint64_t gen_seed = 0;
    auto* gen_cmd = app.add_subcommand("gen", "print a seeded G(n,p) graph in graph6");
    gen_cmd->add_option("n", gen_n, "vertex count")->required();
    gen_cmd->add_option("p", gen_p, "edge probability")->required();
    gen_cmd->add_option("seed", gen_seed, "seed")->required();

    auto* list_cmd = app.add_subcommand("checks", "list identity and conjecture ids");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (poly_cmd->parsed()) return run_poly(poly);
        if (matrix_cmd->parsed()) return run_matrix(matrix);
        if (verify_cmd->parsed()) return run_verify(verify);
        if (fuzz_cmd->parsed()) return run_fuzz(fuzz);
        if (gen_cmd->parsed()) return run_gen(gen_n, gen_p, gen_seed);
        if (list_cmd->parsed()) return run_list();
    } catch (const cp::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const cp::PreconditionError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const cp::OverflowError& e) {
        std::cerr << "overflow: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
