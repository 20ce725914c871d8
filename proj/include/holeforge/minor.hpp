#pragma once

#include <optional>
#include <vector>

#include "holeforge/graph.hpp"

namespace holeforge {

// Model of a K_l minor: disjoint branch sets, each connected, every pair
// joined by at least one edge.
struct MinorWitness {
    std::vector<VertexSet> branch_sets;
};

// Exhaustive branch-set search for a K_l minor, l in 2..6.
// Size caps: |V| <= 18 for l = 6, |V| <= 20 otherwise.
std::optional<MinorWitness> has_minor(const Graph& g, int l);

bool validate_minor_witness(const Graph& g, int l, const MinorWitness& w);

}  // namespace holeforge
