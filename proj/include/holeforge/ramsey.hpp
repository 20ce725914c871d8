#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "holeforge/graph.hpp"

namespace holeforge {

// Edge coloring of a complete bipartite graph: color(row, col) with colors
// 0..c-1, rows x cols.
struct BipartiteColoring {
    int rows = 0, cols = 0, colors = 2;
    std::vector<int> color;  // row * cols + col

    int at(int r, int c) const { return color[r * cols + c]; }
    int& at(int r, int c) { return color[r * cols + c]; }
    static BipartiteColoring uniform(int rows, int cols, int colors, int fill = 0) {
        return {rows, cols, colors, std::vector<int>(rows * cols, fill)};
    }
};

struct MonoBiclique {
    int color = -1;
    std::vector<int> rows, cols;  // r of each side
};

// Largest-first exhaustive search for a monochromatic K_{r,r}; none when no
// color admits one. Deterministic (lexicographically least rows, then cols).
std::optional<MonoBiclique> find_monochromatic_biclique(const BipartiteColoring& col, int r);

// The bipartite Ramsey bound n(r) <= 2^r (r-1) + 1 for two colors.
long long bipartite_ramsey_bound_2(int r);

}  // namespace holeforge
