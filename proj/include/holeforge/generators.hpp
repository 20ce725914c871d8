#pragma once

#include <vector>

#include "holeforge/graph.hpp"

namespace holeforge {

// (n x m)-grid; vertex (i,j) (1-based) gets id (i-1)*m + (j-1) and label "i,j".
Graph grid(int n, int m);

// grid(n,m) plus the diagonals {(i,j),(i-1,j+1)}; corners labelled.
Graph triangulated_grid(int n, int m);

// Coordinate helpers shared by grid-based generators.
int grid_id(int i, int j, int m);

// Two vertices joined by three internally disjoint chordless paths of
// lengths l1,l2,l3 >= 2, no other edges. Path interiors are fresh vertices.
Graph make_theta(int l1, int l2, int l3);

// Two triangles abc, a'b'c' joined by three disjoint chordless paths of
// lengths >= 1, no other edges.
Graph make_prism(int l1, int l2, int l3);

// Apex x joined to triangle abc by three paths, at most one of length 1.
Graph make_pyramid(int l1, int l2, int l3);

// Hole of length rim_length plus a center adjacent to the rim at the given
// positions (0-based, at least 3 of them).
Graph make_wheel(int rim_length, const std::vector<int>& spoke_positions);

// Five paths A=a..x, A'=x..a', B=b..y, B'=y..b', C=c..c' with triangles
// abc, a'b'c' and the extra edge xy, no other edges.
Graph make_extended_prism(int la, int la2, int lb, int lb2, int lc);

// Hole v1..v6 plus x adjacent to v1,v3,v5 and y adjacent to v2,v4,v6.
Graph make_cube();

struct RingSpec {
    std::vector<int> clique_sizes;  // k >= 3 entries, each >= 1
};

// Ring realizing the four defining conditions. Vertex t of clique i (t is
// 1-based, t=1 outermost) is adjacent to vertex s of clique i+1 iff
// t + s <= max(|X_i|, |X_{i+1}|) + 1, which nests the closed
// neighborhoods inside each clique.
Graph make_ring(const RingSpec& spec);
// Ids of clique i under make_ring's numbering.
std::vector<VertexSet> ring_parts(const RingSpec& spec);

// 7 cliques, X_i complete to everything except X_{i-1}, X_i, X_{i+1} and
// anticomplete to X_{i-1}, X_{i+1}.
Graph make_7hyperantihole(const std::vector<int>& sizes);
std::vector<VertexSet> hyperantihole_parts(const std::vector<int>& sizes);

// Complete graph on n vertices.
Graph complete_graph(int n);
// Cycle on n >= 3 vertices.
Graph cycle_graph(int n);
// Path on n >= 1 vertices.
Graph path_graph(int n);

}  // namespace holeforge
