#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "cliquepoly/conjectures.hpp"
#include "cliquepoly/identities.hpp"
#include "cliquepoly/incidence.hpp"

namespace cliquepoly {

using Json = nlohmann::ordered_json;

// Integers that fit 64 bits become JSON numbers, larger ones decimal strings.
Json to_json(Int v);
// Coefficient array, lowest degree first.
Json to_json(const Polynomial& p);
Json to_json(const Value& v);
Json to_json(const Fields& f);

// {identity, graph6, params, lhs, rhs, holds, applicable, notes}
Json to_json(const IdentityReport& r);

// {kind, k, rows, columns, entries, row_sums, column_sums, double_count}; labels
// are vertex tuples joined by '-', entries a dense 0/1 array of rows.
Json to_json(const IncidenceMatrix& m);

// First row: empty corner cell then column labels; each following row: row
// label then 0/1 entries.
std::string to_csv(const IncidenceMatrix& m);

// Wall-clock time is included only on request so equal seeds give equal bytes.
Json to_json(const CampaignReport& r, bool include_timing = false);

std::string label(VertexSet s);

} // namespace cliquepoly
