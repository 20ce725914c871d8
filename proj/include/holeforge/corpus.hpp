#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "holeforge/graph.hpp"

namespace holeforge {

// Random basic graph of the subcubic (theta, prism)-free class.
Graph random_basic_subcubic(std::mt19937_64& rng);

// Random member of the class built by composing basic graphs with clique
// gluings and proper gluings, `depth` composition steps, keeping the result
// subcubic and at most max_vertices.
Graph random_inclass_subcubic(std::mt19937_64& rng, int depth, int max_vertices);

std::vector<Graph> inclass_corpus(uint64_t seed, int count, int depth, int max_vertices);

// Random (even-hole, pyramid)-free instance of maximum degree <= 4 built
// from odd wheels and clique gluings; verified in-class by the detectors
// (instances failing the check are re-rolled).
Graph random_ehf_pyramid_free_deg4(std::mt19937_64& rng, int max_vertices);

// Random max-degree-4 ring spec.
Graph random_deg4_ring(std::mt19937_64& rng, int max_vertices);

}  // namespace holeforge
