#pragma once

#include <iosfwd>
#include <string>

#include "holeforge/graph.hpp"

namespace holeforge {

// Repo-wide interchange format:
//   first line "n m", then m lines "u v" (0-based indices, ASCII, LF),
//   then optional comment lines "# label u <string>".
// Writing renumbers vertices to 0..n-1 in increasing id order (the
// canonical form); parse . print is the identity on canonical graphs.
std::string write_edge_list(const Graph& g);
Graph parse_edge_list(const std::string& text);
Graph read_edge_list_file(const std::string& path);
void write_edge_list_file(const Graph& g, const std::string& path);

// Mapping used when canonicalising: sorted original ids -> 0..n-1.
std::vector<int> canonical_order(const Graph& g);

std::string write_dot(const Graph& g);

}  // namespace holeforge
