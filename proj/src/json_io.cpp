#include "cliquepoly/json_io.hpp"

#include <limits>

namespace cliquepoly {

std::string label(VertexSet s) {
    std::string out;
    for (int v : s) {
        if (!out.empty()) out += '-';
        out += std::to_string(v);
    }
    return out;
}

Json to_json(Int v) {
    if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max())
        return static_cast<std::int64_t>(v);
    return cliquepoly::to_string(v);
}

Json to_json(const Polynomial& p) {
    Json out = Json::array();
    for (int i = 0; i <= p.degree(); ++i) out.push_back(to_json(p[i]));
    return out;
}

Json to_json(const Value& v) {
    return std::visit(
        [](const auto& x) -> Json {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, bool> || std::is_same_v<T, std::string>)
                return x;
            else
                return to_json(x);
        },
        v);
}

Json to_json(const Fields& f) {
    Json out = Json::object();
    for (const auto& [k, v] : f) out[k] = to_json(v);
    return out;
}

Json to_json(const IdentityReport& r) {
    Json out;
    out["identity"] = r.identity;
    out["graph6"] = r.graph6;
    out["params"] = to_json(r.params);
    out["lhs"] = to_json(r.lhs);
    out["rhs"] = to_json(r.rhs);
    out["holds"] = r.holds;
    out["applicable"] = r.applicable;
    if (!r.notes.empty()) out["notes"] = to_json(r.notes);
    return out;
}

Json to_json(const IncidenceMatrix& m) {
    Json out;
    out["kind"] = std::string(to_string(m.kind()));
    out["k"] = m.order();
    Json rows = Json::array();
    for (const auto& q : m.row_labels()) rows.push_back(label(q.vertices));
    Json cols = Json::array();
    for (const auto& c : m.column_labels()) cols.push_back(label(c));
    out["rows"] = rows;
    out["columns"] = cols;
    Json entries = Json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        Json row = Json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m.at(r, c) ? 1 : 0);
        entries.push_back(row);
    }
    out["entries"] = entries;
    Json row_sums = Json::array();
    for (auto s : m.row_sums()) row_sums.push_back(to_json(to_signed(s)));
    Json col_sums = Json::array();
    for (auto s : m.column_sums()) col_sums.push_back(to_json(to_signed(s)));
    out["row_sums"] = row_sums;
    out["column_sums"] = col_sums;
    auto [by_rows, by_cols] = double_count(m);
    out["double_count"] = {{"rows", to_json(to_signed(by_rows))}, {"columns", to_json(to_signed(by_cols))}};
    return out;
}

std::string to_csv(const IncidenceMatrix& m) {
    std::string out;
    for (const auto& c : m.column_labels()) out += "," + label(c);
    out += "\n";
    for (std::size_t r = 0; r < m.rows(); ++r) {
        out += label(m.row_labels()[r].vertices);
        for (std::size_t c = 0; c < m.cols(); ++c) out += m.at(r, c) ? ",1" : ",0";
        out += "\n";
    }
    return out;
}

Json to_json(const CampaignReport& r, bool include_timing) {
    Json cfg;
    cfg["n"] = {r.config.n_min, r.config.n_max};
    cfg["p"] = {r.config.p_min, r.config.p_max};
    cfg["count"] = r.config.count;
    cfg["seed"] = r.config.rng.seed;
    cfg["rng"] = "mt19937_64";
    cfg["checks"] = r.config.checks;
    cfg["shrink"] = r.config.shrink;
    cfg["k"] = {r.config.options.k_min, r.config.options.k_max};

    Json out;
    out["config"] = cfg;
    Json tallies = Json::array();
    for (const auto& t : r.tallies) {
        tallies.push_back({{"check", t.check},
                           {"class", std::string(to_string(t.check_class))},
                           {"tested", t.tested},
                           {"holds", t.holds},
                           {"fails", t.fails},
                           {"inapplicable", t.inapplicable},
                           {"errors", t.errors}});
    }
    out["tallies"] = tallies;
    Json examples = Json::array();
    for (const auto& c : r.counterexamples) {
        Json e;
        e["check"] = c.check;
        e["class"] = std::string(to_string(c.check_class));
        e["sample"] = c.sample;
        e["report"] = to_json(c.report);
        e["shrunk"] = c.shrunk ? to_json(*c.shrunk) : Json(nullptr);
        examples.push_back(e);
    }
    out["counterexamples"] = examples;
    Json errors = Json::array();
    for (const auto& e : r.errors)
        errors.push_back({{"check", e.check}, {"sample", e.sample}, {"graph6", e.graph6}, {"message", e.message}});
    out["errors"] = errors;
    out["theorem_failure"] = r.theorem_failure();
    if (include_timing) out["elapsed_seconds"] = r.elapsed_seconds;
    return out;
}

} // namespace cliquepoly
