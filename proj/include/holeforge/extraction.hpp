#pragma once

#include <array>
#include <optional>

#include "holeforge/contraction.hpp"
#include "holeforge/graph.hpp"
#include "holeforge/walls.hpp"

namespace holeforge {

// The partitioned instance of the fork lemma: seven disjoint connected sets
// whose union induces a connected graph in the host, every edge inside one
// set or along A'-A, B'-B, C'-C, S-(A u B u C); tips a in A', b in B',
// c in C'.
struct SeptuplePartition {
    VertexSet A, A2, B, B2, C, C2, S;  // X2 denotes X'
    int a = -1, b = -1, c = -1;
};

// empty iff the partition invariants hold (in the host graph g)
std::vector<std::string> septuple_violations(const Graph& g, const SeptuplePartition& p);

struct ForkWitness {
    bool semi = false;                       // triangle center instead of a single vertex
    std::array<int, 3> tips{};               // a, b, c (the degree-1 vertices)
    std::array<int, 3> triangle{};           // semi only: w, u, v
    int center = -1;                         // fork only
    VertexSet vertices;                      // the whole fork / semi-fork
};

// Fork or semi-fork with degree-1 vertices exactly a, b, c, constructed by
// the proof's recipe (shortest b-c path through S, shortest a-side path to
// a neighbor of it, case split on u, v). Throws on invariant violations.
ForkWitness find_fork_or_semifork(const Graph& g, const SeptuplePartition& p);

// Checks only the shape: induced, three degree-1 vertices = tips, tree
// (fork) or exactly one triangle with pendant paths (semi-fork).
bool validate_fork_witness(const Graph& g, const ForkWitness& w);

// Result of the induced-grid-theorem pipeline: an induced stone wall.
struct ExtractedStoneWall {
    VertexSet vertices;  // subset of V(G)
    Graph induced;
    StoneWallShape shape;
};

// Extract an induced stone wall from a graph with a verified contraction
// onto triangulated_grid(k,k). Requires k >= 8h; assembles forks from
// every-second 4x4 subgrid pre-images (both directions) joined by induced
// corridor paths, falling back to a single induced hole when the grid is
// too small for the fork discipline. The assembled dimensions are
// (R x max(2, R/2)) for R = ceil(floor(k/4)/2).
ExtractedStoneWall extract_induced_stone_wall(const Graph& g, const ContractionMap& phi, int k, int h);

}  // namespace holeforge
