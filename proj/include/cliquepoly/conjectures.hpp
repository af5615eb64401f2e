#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cliquepoly/graph.hpp"
#include "cliquepoly/identities.hpp"
#include "cliquepoly/incidence.hpp"
#include "cliquepoly/random.hpp"

namespace cliquepoly {

// d/dx c(G,x) = sum_v c(G-v,x) and c''(G,x)/2 = sum_e c(G-e,x), where c is the
// coefficient-reversed clique polynomial. Vertex-deck members are reversed at
// base n-1, edge-deck members at base n.
std::pair<IdentityReport, IdentityReport> check_conjecture1(const Graph& g, bool include_unit);

// (t - C(k,3)) c_k(G) = sum_delta c_k(G - delta), t = c_3(G), k >= 3.
IdentityReport check_triangle_deck_identity(const Graph& g, int k);

// Applicable only when the triangle graph is edgeless; then the triangle-deck
// identity for every k in 3..omega.
IdentityReport check_conjecture2(const Graph& g);

// C'''(G)/3! = sum_delta C(G - delta)
IdentityReport check_conjecture3(const Graph& g);

// Row/column sums of one incidence matrix against their predicted values, and
// the two grand totals against each other.
IdentityReport check_incidence_sums(const Graph& g, IncidenceKind kind, int k);

enum class CheckClass { Theorem, Conjecture };
std::string_view to_string(CheckClass c);

// Restricts k-parameterised checks.
struct CheckOptions {
    int k_min = 1;
    int k_max = kMaxVertices;
};

struct CheckInfo {
    std::string id;
    CheckClass check_class;
    std::string summary;
    // Every parameter instance of the check on one graph.
    std::function<std::vector<IdentityReport>(const Graph&, const CheckOptions&)> run;
};

const std::vector<CheckInfo>& check_catalog();
// Throws PreconditionError for unknown ids.
const CheckInfo& find_check(std::string_view id);
// Expands the group names "all-theorems", "all-conjectures" and "all";
// preserves catalog order and drops duplicates.
std::vector<std::string> expand_check_ids(const std::vector<std::string>& ids);

enum class Verdict { Holds, Fails, Inapplicable };
std::string_view to_string(Verdict v);

struct CheckOutcome {
    Verdict verdict = Verdict::Holds;
    // First failing instance when verdict is Fails.
    std::optional<IdentityReport> witness;
};

// Holds when every applicable instance holds (including the vacuous case of no
// instances); Inapplicable when instances exist and none applies.
CheckOutcome evaluate_check(const CheckInfo& check, const Graph& g, const CheckOptions& options = {});

// Greedy descent: repeatedly applies the first single-vertex deletion (lowest
// index) that keeps the check failing, then the first single-edge deletion, until
// no deletion does. Throws PreconditionError when the check does not fail on g.
Graph shrink_counterexample(const Graph& g, std::string_view check_id, const CheckOptions& options = {});

struct CampaignConfig {
    int n_min = 4;
    int n_max = 10;
    double p_min = 0.5;
    double p_max = 0.5;
    std::size_t count = 100;
    RngSpec rng;
    std::vector<std::string> checks;
    bool shrink = false;
    CheckOptions options;
    // 0 = hardware concurrency. Never affects the report content.
    unsigned threads = 0;
};

// Throws PreconditionError describing the first violated constraint.
void validate(const CampaignConfig& cfg);

// Sample i is drawn from its own stream seeded by derive_seed(seed, i): first
// n and p, then the graph.
Graph campaign_sample(const CampaignConfig& cfg, std::size_t index);

struct CheckTally {
    std::string check;
    CheckClass check_class = CheckClass::Theorem;
    std::uint64_t tested = 0;
    std::uint64_t holds = 0;
    std::uint64_t fails = 0;
    std::uint64_t inapplicable = 0;
    std::uint64_t errors = 0;
};

struct Counterexample {
    std::string check;
    CheckClass check_class = CheckClass::Theorem;
    std::size_t sample = 0;
    IdentityReport report;
    std::optional<IdentityReport> shrunk;
};

struct CampaignError {
    std::string check;
    std::size_t sample = 0;
    std::string graph6;
    std::string message;
};

struct CampaignReport {
    CampaignConfig config;
    std::vector<CheckTally> tallies;
    std::vector<Counterexample> counterexamples;
    std::vector<CampaignError> errors;
    double elapsed_seconds = 0.0;

    bool theorem_failure() const;
};

CampaignReport run_campaign(const CampaignConfig& cfg);

} // namespace cliquepoly
