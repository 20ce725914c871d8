#pragma once

#include <array>
#include <chrono>
#include <functional>
#include <optional>
#include <vector>

#include "holeforge/graph.hpp"

namespace holeforge {

// Search deadline; detectors are exhaustive unless it expires, in which
// case they answer "inconclusive" rather than guessing.
struct Deadline {
    std::chrono::steady_clock::time_point tp{};
    bool unlimited = true;

    static Deadline none() { return {}; }
    static Deadline after(std::chrono::milliseconds ms) {
        return {std::chrono::steady_clock::now() + ms, false};
    }
    bool expired() const { return !unlimited && std::chrono::steady_clock::now() > tp; }
};

enum class SearchStatus { found, none, inconclusive };

template <class W>
struct Search {
    SearchStatus status = SearchStatus::none;
    std::optional<W> witness;

    bool found() const { return status == SearchStatus::found; }
};

enum class HoleParity { any, even, odd };

struct HoleWitness {
    std::vector<int> cycle;  // ordered, length >= 4
    int length() const { return static_cast<int>(cycle.size()); }
};

struct ThetaWitness {
    int a = -1, b = -1;
    std::array<std::vector<int>, 3> paths;  // each a..b inclusive, length >= 2
};

struct PrismWitness {
    std::array<int, 3> t1{}, t2{};          // triangles abc, a'b'c'
    std::array<std::vector<int>, 3> paths;  // paths[i] from t1[i] to t2[i]
};

struct PyramidWitness {
    int apex = -1;
    std::array<int, 3> triangle{};
    std::array<std::vector<int>, 3> paths;  // apex..triangle[i]
};

struct WheelWitness {
    std::vector<int> rim;  // a hole
    int center = -1;
};

// --- finders (exhaustive at desk scale, deterministic order) ---

Search<HoleWitness> find_hole(const Graph& g, HoleParity parity = HoleParity::any,
                              Deadline deadline = Deadline::none());
Search<ThetaWitness> find_theta(const Graph& g, Deadline deadline = Deadline::none());
Search<PrismWitness> find_prism(const Graph& g, Deadline deadline = Deadline::none());
Search<PyramidWitness> find_pyramid(const Graph& g, Deadline deadline = Deadline::none());
Search<WheelWitness> find_wheel(const Graph& g, bool proper_only = false,
                                Deadline deadline = Deadline::none());

// Visit every hole (canonical enumeration); callback returns false to stop.
// Returns false when the deadline expired before the enumeration finished.
bool for_each_hole(const Graph& g, const std::function<bool(const std::vector<int>&)>& visit,
                   Deadline deadline = Deadline::none());

// --- independent validators: check only the adjacency conditions of the
// definitions, without reusing any search code path ---

bool validate_hole(const Graph& g, const HoleWitness& w);
bool validate_theta(const Graph& g, const ThetaWitness& w);
bool validate_prism(const Graph& g, const PrismWitness& w);
bool validate_pyramid(const Graph& g, const PyramidWitness& w);
bool validate_wheel(const Graph& g, const WheelWitness& w);

// --- whole-graph recognizers (is G exactly this pattern?) ---

bool is_cycle_graph(const Graph& g);                 // chordless cycle (length >= 3)
bool is_complete_graph(const Graph& g);
bool is_cube_graph(const Graph& g);                  // the cube of the basic list
std::optional<WheelWitness> as_proper_wheel_graph(const Graph& g);
std::optional<PyramidWitness> as_pyramid_graph(const Graph& g);

struct ExtendedPrismWitness {
    std::array<int, 3> t1{}, t2{};                // abc, a'b'c'
    int x = -1, y = -1;
    std::vector<int> pa, pa2, pb, pb2, pc;        // A=a..x, A'=x..a', B=b..y, B'=y..b', C=c..c'
};
std::optional<ExtendedPrismWitness> as_extended_prism_graph(const Graph& g);
bool validate_extended_prism(const Graph& g, const ExtendedPrismWitness& w);

// --- major vertices and sectors (hole given as ordered cycle) ---

// Vertices outside H whose H-neighborhood is not inside any 3-vertex
// subpath of H.
VertexSet major_vertices(const Graph& g, const std::vector<int>& hole);

// The u-sectors of H, in cyclic order starting at u's first neighbor.
std::vector<std::vector<int>> sectors(const Graph& g, const std::vector<int>& hole, int u);

// For a major vertex v and a component C of G - N[v], the v-sector P=x..y
// with N(C) within {x,y} u (N(v) \ V(H)), if one exists.
std::optional<std::vector<int>> check_sector_containment(const Graph& g, const std::vector<int>& hole,
                                                         int v, const VertexSet& c);

// --- rings and 7-hyperantiholes ---

// A witness partition (ordered circularly), or nothing.
Search<std::vector<VertexSet>> is_ring(const Graph& g, Deadline deadline = Deadline::none());
Search<std::vector<VertexSet>> is_7hyperantihole(const Graph& g, Deadline deadline = Deadline::none());

bool validate_ring_partition(const Graph& g, const std::vector<VertexSet>& parts);
bool validate_7hyperantihole_partition(const Graph& g, const std::vector<VertexSet>& parts);

}  // namespace holeforge
