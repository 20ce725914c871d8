#pragma once

#include <optional>

#include "holeforge/ramsey.hpp"
#include "holeforge/walls.hpp"

namespace holeforge {

// Result of homogenization: an induced subgraph of the stone wall that is a
// wall (is_wall) or the line graph of a chordless wall, together with the
// dimensions it was built to and the recognizer's confirmation.
struct HomogeneousExtraction {
    VertexSet vertices;  // subset of the input stone wall's vertex ids
    Graph induced;       // input graph induced on `vertices`
    bool is_wall = true;
    int rows = 0, cols = 0;  // dimensions of the extracted structure
    StoneWallShape shape;    // recognizer confirmation
};

// The 4-coloring of the crossing grid used by the tidying argument:
// 0 = green (both branch vertices intact), 1 = red (both replaced),
// 2 = white (intact before replaced along the row), 3 = black (reverse).
// Rows are interior wall rows 2..n-1, columns interior wall columns 2..m-1.
BipartiteColoring crossing_coloring(const StoneWall& w);

// Smallest wall side for which homogenize_stone_wall(w, r) commits to
// succeed on uniformly random replacement sets: the expected number of
// green monochromatic K_{2r-1,2r-1} sub-bicliques of a uniform 4-coloring
// of the crossing grid is then at least 16, and the white/black surgery
// has room to operate as a fallback. The exact formula is
//   smallest n with C(n-2, 2r-1)^2 >= 16 * 4^((2r-1)^2),
// floored at 6(r+1) + 2.
int required_size(int r);

// The distribution-free sufficiency bound by the bipartite Ramsey route
// (majority color + Kovari-Sos-Turan): any 4-coloring of the crossing grid
// of an (n x n)-stone wall with n >= this contains the bicliques the
// pipeline needs. Astronomically larger than required_size; exposed for
// reference and checked numerically in tests.
long long ramsey_guarantee_size(int r);

// Extract an induced homogeneous stone wall of dimensions >= r x r.
// Pipeline: color the crossings; find a monochromatic biclique (green and
// red first, then white/black); green/red: thin to pairwise non-adjacent
// rows/columns and take the subwall; white/black: reroute around each
// kept crossing so both final branch vertices are intact, per the tidying
// lemma's rerouting figure. Throws std::invalid_argument when the wall is
// too small (message reports required_size(r)).
HomogeneousExtraction homogenize_stone_wall(const StoneWall& w, int r);

}  // namespace holeforge
