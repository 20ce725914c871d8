#pragma once

#include <optional>
#include <vector>

#include "holeforge/detectors.hpp"
#include "holeforge/graph.hpp"

namespace holeforge {

struct CliqueSeparator {
    VertexSet clique;                    // may be empty (disconnected graph)
    std::vector<VertexSet> components;   // components of G - clique
};

// Smallest clique S with |S| <= max_size whose removal disconnects G,
// lexicographically least among those; max_size in 0..4.
std::optional<CliqueSeparator> find_clique_separator(const Graph& g, int max_size);

// Proper separation ({a,b}, X, Y), conditions (i)-(vii) of the definition.
struct ProperSeparation {
    int a = -1, b = -1;
    VertexSet x, y;
};

// Each condition individually; empty iff all hold.
std::vector<std::string> proper_separation_violations(const Graph& g, const ProperSeparation& ps);
bool validate_proper_separation(const Graph& g, const ProperSeparation& ps);

std::optional<ProperSeparation> find_proper_separation(const Graph& g);

struct TwoJoin {
    VertexSet x1, x2;
    VertexSet a1, b1, a2, b2;
};

bool validate_2join(const Graph& g, const TwoJoin& tj);

// Exhaustive over partitions; |V| <= 20, inconclusive beyond.
Search<TwoJoin> find_2join(const Graph& g, Deadline deadline = Deadline::none());

}  // namespace holeforge
