#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "holeforge/graph.hpp"

namespace holeforge {

// Tree decomposition: bags indexed by node id, tree edges between nodes.
struct TreeDecomposition {
    std::vector<VertexSet> bags;
    std::vector<std::pair<int, int>> tree_edges;  // between bag indices

    int width() const {
        int w = -1;
        for (auto& b : bags) w = std::max(w, static_cast<int>(b.size()) - 1);
        return w;
    }
};

struct TdValidation {
    bool valid = false;
    int width = -1;
    std::vector<std::string> violations;
};

// Checks the three axioms (vertex coverage, edge coverage, subtree
// connectivity per vertex) plus tree shape; width reported regardless.
TdValidation validate_tree_decomposition(const Graph& g, const TreeDecomposition& td);

// Exact tree-width by dynamic programming over vertex subsets along
// elimination orderings. Hard cap |V| <= 20.
int exact_treewidth(const Graph& g);
constexpr int kTreewidthCap = 20;

// Optimal tree decomposition recovered from the same DP (traceback to an
// elimination ordering, then the usual bags-from-elimination construction).
TreeDecomposition exact_tree_decomposition(const Graph& g);

// PACE-style .td text format:
//   s td <#bags> <width+1> <n>
//   b <bag id, 1-based> <vertices...>
//   <tree edges as "i j">
std::string write_td(const Graph& g, const TreeDecomposition& td);
TreeDecomposition parse_td(const std::string& text);

}  // namespace holeforge
