#pragma once

#include <optional>
#include <variant>
#include <vector>

#include "holeforge/detectors.hpp"
#include "holeforge/graph.hpp"
#include "holeforge/separators.hpp"
#include "holeforge/treewidth.hpp"

namespace holeforge {

// Certificate that a graph is basic: a chordless cycle, a clique of size at
// most 4, the cube, a proper wheel, a pyramid, or an extended prism.
struct BasicCertificate {
    enum class Kind { chordless_cycle, small_clique, cube, proper_wheel, pyramid, extended_prism };
    Kind kind{};
    std::vector<int> cycle;                       // chordless_cycle (ordered)
    VertexSet clique;                             // small_clique
    std::optional<WheelWitness> wheel;            // proper_wheel
    std::optional<PyramidWitness> pyramid;        // pyramid
    std::optional<ExtendedPrismWitness> eprism;   // extended_prism
};

const char* basic_kind_name(BasicCertificate::Kind k);

// Kinds are tried in the order of the basic-graph list; the first match wins.
std::optional<BasicCertificate> classify_basic(const Graph& g);
bool validate_basic_certificate(const Graph& g, const BasicCertificate& cert);

struct DecompositionNode {
    enum class Type { leaf, clique_cut, proper_cut };
    Type type{};
    Graph graph;  // the (sub)problem decomposed at this node
    std::optional<BasicCertificate> certificate;  // leaf
    VertexSet cut_clique;                         // clique_cut
    std::optional<ProperSeparation> separation;   // proper_cut
    int marker1 = -1, marker2 = -1;               // marker internal vertices in the children
    std::vector<int> children;                    // indices into the tree
};

struct DecompositionTree {
    std::vector<DecompositionNode> nodes;  // nodes[0] is the root
    int leaf_count() const {
        int c = 0;
        for (auto& n : nodes)
            if (n.type == DecompositionNode::Type::leaf) ++c;
        return c;
    }
};

// Outcome of the structure-theorem recursion: either a tree, or the graph
// on which neither branch of the theorem applied (a counterexample to the
// theorem if the input really was a subcubic (theta, prism)-free graph).
struct DecomposeResult {
    std::optional<DecompositionTree> tree;
    std::optional<Graph> violation;  // set iff tree is empty

    bool ok() const { return tree.has_value(); }
};

DecomposeResult decompose_subcubic(const Graph& g);

// Bottom-up reassembly; children keep host vertex ids, so this reproduces
// the node's graph exactly.
Graph reassemble(const DecompositionTree& tree, int node = 0);

// --- the two composition operations --------------------------------------

// Identify clique k1 of g1 with clique k2 of g2 pointwise (k1[i] = k2[i]).
// Vertices of g2 outside k2 are renamed where their ids collide with g1.
Graph glue_clique(const Graph& g1, const VertexSet& k1, const Graph& g2, const VertexSet& k2);

// The proper gluing recipe: remove the interiors of P1 and P2, identify
// a1 = a2 and b1 = b2. P1's internal vertices must all have degree 2 in g1
// and a1, b1 must be non-adjacent of degree 3; on the g2 side a2, b2 are
// non-adjacent of degree 2.
Graph proper_glue(const Graph& g1, int a1, int b1, const std::vector<int>& p1, const Graph& g2,
                  int a2, int b2, const std::vector<int>& p2);

// Candidate (a,b,path) triples usable as the G1 side / G2 side of a proper
// gluing, enumerated deterministically.
struct GlueSite {
    int a = -1, b = -1;
    std::vector<int> path;
};
std::vector<GlueSite> proper_glue_sites_g1(const Graph& g);
std::vector<GlueSite> proper_glue_sites_g2(const Graph& g);

// --- the width-3 pipeline --------------------------------------------------

// Tree decomposition of width <= 3 via the decomposition tree: optimal
// decompositions of chain-contracted leaf cores, clique-sum joins at clique
// cuts, marker splicing at proper cuts.
struct TreeDecompositionResult {
    std::optional<TreeDecomposition> td;
    std::optional<Graph> violation;
    bool ok() const { return td.has_value(); }
};
TreeDecompositionResult tree_decomposition_subcubic(const Graph& g);

}  // namespace holeforge
