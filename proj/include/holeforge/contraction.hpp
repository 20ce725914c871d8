#pragma once

#include <unordered_map>
#include <vector>

#include "holeforge/graph.hpp"

namespace holeforge {

// phi: V(G) -> V(H), witnessing that H is a contraction of G.
using ContractionMap = std::unordered_map<int, int>;

struct ContractionCheck {
    bool ok = false;
    std::vector<std::string> violations;  // empty iff ok
};

// Checks the three contraction-map conditions:
//   (1) every pre-image phi^-1(v) is connected in G,
//   (2) for every edge uv of H, G[phi^-1(u) u phi^-1(v)] is connected,
//   (3) every edge xy of G has phi(x) = phi(y) or phi(x)phi(y) in E(H).
// Non-surjectivity or a non-total map is reported as a violation.
ContractionCheck check_contraction_map(const Graph& g, const Graph& h, const ContractionMap& phi);

bool verify_contraction_map(const Graph& g, const Graph& h, const ContractionMap& phi);

VertexSet preimage(const ContractionMap& phi, int h_vertex);

}  // namespace holeforge
