#pragma once

#include <array>
#include <map>
#include <optional>
#include <vector>

#include "holeforge/graph.hpp"

namespace holeforge {

using WallCoord = std::pair<int, int>;            // (row, column) in the elementary wall
using WallEdge = std::pair<WallCoord, WallCoord>; // canonical: first < second

WallEdge make_wall_edge(WallCoord a, WallCoord b);

// A wall: subdivision of an elementary (n x m)-wall, together with its n
// horizontal and m vertical paths (subdivision vertices included) and its
// degree-3 vertices.
struct Wall {
    Graph graph;
    int rows = 0, cols = 0;
    std::vector<std::vector<int>> horizontal_paths;
    std::vector<std::vector<int>> vertical_paths;
    VertexSet branch_vertices;
    // Coordinate bookkeeping, present on generated walls (empty for walls
    // produced by extraction).
    std::map<WallCoord, int> coord_to_id;
    std::map<int, WallCoord> id_to_coord;

    int id_at(WallCoord c) const {
        auto it = coord_to_id.find(c);
        if (it == coord_to_id.end()) throw std::invalid_argument("no vertex at that wall coordinate");
        return it->second;
    }
    bool has_coord(WallCoord c) const { return coord_to_id.count(c) != 0; }
};

// The elementary (n x m)-wall, vertex and edge sets straight from their
// set-builder definitions. Vertices are labelled "i,j".
Wall elementary_wall(int n, int m);

// Subdivision of the elementary wall; counts are keyed by elementary-wall
// edges (coordinate pairs), missing keys mean 0.
Wall make_wall(int n, int m, const std::map<WallEdge, int>& subdivision);

// All elementary-wall edges of an (n x m)-wall, canonical order.
std::vector<WallEdge> elementary_wall_edges(int n, int m);

struct NetReplacement {
    Graph graph;
    std::array<int, 3> triangle;  // new vertices x,y,z
    std::array<int, 3> attach;    // former neighbors a,b,c; x-a, y-b, z-c
};

// Net graph replacement at a degree-3 vertex v.
NetReplacement net_graph_replacement(const Graph& g, int v);

struct StoneWall {
    Graph graph;
    Wall base;
    VertexSet replaced;                         // base branch vertices replaced
    std::map<int, std::array<int, 3>> triangle; // replaced vertex -> x,y,z
    std::map<int, std::array<int, 3>> attach;   // replaced vertex -> a,b,c (x-a, y-b, z-c)

    // Triangle vertex of `rep` attached to base-neighbor `nbr`.
    int triangle_vertex_towards(int rep, int nbr) const;
};

// Stone wall on the elementary (n x m)-wall with replacements at X.
StoneWall stone_wall(int n, int m, const VertexSet& x);
StoneWall make_stone_wall(const Wall& w, const VertexSet& x);

// Lemma "subwalls": rows/cols are 1-based indices of pairwise non-adjacent
// horizontal/vertical paths; returns the induced (|rows| x |cols|)-wall
// found by deleting degree-<=1 vertices from the union of the chosen paths.
Wall extract_subwall(const Wall& w, std::vector<int> rows, std::vector<int> cols);

// --- recognizers -----------------------------------------------------------

// Is g a subdivision of the elementary (n x m)-wall?
bool recognize_wall_as(const Graph& g, int n, int m);

// Best dimensions g qualifies for (a graph can be a wall of several
// dimensions, e.g. the elementary (3x2)-wall subdivides the elementary
// (2x3)-wall). Maximizes min(n,m), then n*m, then n.
std::optional<std::pair<int, int>> recognize_wall(const Graph& g);

struct StoneWallShape {
    int rows = 0, cols = 0;
    int replaced = 0;      // net triangles found
    int branch_total = 0;  // degree-3 vertices of the underlying wall
    bool homogeneous() const { return replaced == 0 || replaced == branch_total; }
    bool is_line_graph_of_wall() const { return replaced > 0 && replaced == branch_total; }
};

std::optional<StoneWallShape> recognize_stone_wall(const Graph& g);

bool is_homogeneous_stone_wall(const Graph& g);

}  // namespace holeforge
