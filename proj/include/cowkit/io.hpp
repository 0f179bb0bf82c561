#pragma once

#include <string>
#include <string_view>

#include "cowkit/graph.hpp"

namespace cowkit {

// graph6: 6-bit big-endian encoding of the upper adjacency triangle, bytes
// offset by 63. Sizes below 63 take one byte; larger sizes (up to 258047)
// use the '~'-prefixed 18-bit form.
std::string emit_graph6(const Graph& g);
Graph parse_graph6(std::string_view line);

// Plain text edge list: lines "u v", optional first line "n <count>",
// '#' comments. Duplicate edges are idempotent; self-loops are rejected.
Graph parse_edge_list(std::string_view text);

// Either format, decided by content: graph6 bytes never contain whitespace
// or digits outside [63,126]-range tokens.
Graph parse_any(std::string_view text);

} // namespace cowkit
