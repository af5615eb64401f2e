#pragma once

#include <string>
#include <string_view>

#include "cliquepoly/graph.hpp"

namespace cliquepoly {

// graph6: size prefix then the upper triangle in column-major order, packed
// six bits per printable byte (value + 63). An optional ">>graph6<<" header and
// a trailing newline are accepted.
Graph parse_graph6(std::string_view text);
std::string to_graph6(const Graph& g);

// Edge list: first line is the vertex count, then one "u v" pair per line with
// 0-based ids. Blank lines and '#' comments are ignored; repeated edges are
// idempotent.
Graph parse_edge_list(std::string_view text);
std::string to_edge_list(const Graph& g);

} // namespace cliquepoly
