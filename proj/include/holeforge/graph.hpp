#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace holeforge {

using VertexSet = std::vector<int>;  // sorted, unique

// Simple undirected graph over arbitrary non-negative integer vertex ids.
// No self-loops, no parallel edges. Vertex ids are stable across induced
// subgraphs, which is what lets witnesses refer back to the host graph.
class Graph {
public:
    Graph() = default;

    static Graph with_vertices(int n) {
        Graph g;
        for (int v = 0; v < n; ++v) g.add_vertex(v);
        return g;
    }

    void add_vertex(int v) {
        if (v < 0) throw std::invalid_argument("vertex ids must be non-negative");
        if (adj_.count(v)) return;
        adj_.emplace(v, std::vector<int>{});
        auto it = std::lower_bound(verts_.begin(), verts_.end(), v);
        verts_.insert(it, v);
    }

    void add_edge(int u, int v) {
        if (u == v) throw std::invalid_argument("self-loops are not allowed");
        add_vertex(u);
        add_vertex(v);
        if (has_edge(u, v)) return;
        insert_sorted(adj_[u], v);
        insert_sorted(adj_[v], u);
        ++m_;
    }

    void remove_edge(int u, int v) {
        if (!has_edge(u, v)) return;
        erase_sorted(adj_[u], v);
        erase_sorted(adj_[v], u);
        --m_;
    }

    void remove_vertex(int v) {
        auto it = adj_.find(v);
        if (it == adj_.end()) return;
        for (int w : it->second) {
            erase_sorted(adj_[w], v);
            --m_;
        }
        adj_.erase(it);
        erase_sorted(verts_, v);
        labels_.erase(v);
    }

    bool has_vertex(int v) const { return adj_.count(v) != 0; }

    bool has_edge(int u, int v) const {
        auto it = adj_.find(u);
        if (it == adj_.end()) return false;
        return std::binary_search(it->second.begin(), it->second.end(), v);
    }

    const std::vector<int>& neighbors(int v) const {
        auto it = adj_.find(v);
        if (it == adj_.end()) throw std::invalid_argument("unknown vertex id " + std::to_string(v));
        return it->second;
    }

    int degree(int v) const { return static_cast<int>(neighbors(v).size()); }
    int max_degree() const {
        int d = 0;
        for (int v : verts_) d = std::max(d, degree(v));
        return d;
    }

    int vertex_count() const { return static_cast<int>(verts_.size()); }
    int edge_count() const { return m_; }

    const VertexSet& vertices() const { return verts_; }

    std::vector<std::pair<int, int>> edges() const {
        std::vector<std::pair<int, int>> es;
        es.reserve(m_);
        for (int u : verts_)
            for (int v : neighbors(u))
                if (u < v) es.emplace_back(u, v);
        return es;
    }

    void set_label(int v, std::string s) {
        if (!has_vertex(v)) throw std::invalid_argument("unknown vertex id");
        labels_[v] = std::move(s);
    }
    std::optional<std::string> label(int v) const {
        auto it = labels_.find(v);
        if (it == labels_.end()) return std::nullopt;
        return it->second;
    }
    const std::unordered_map<int, std::string>& labels() const { return labels_; }

    // Smallest id not currently in use; handy when operations add vertices.
    int fresh_vertex() const { return verts_.empty() ? 0 : verts_.back() + 1; }

    bool operator==(const Graph& o) const {
        if (verts_ != o.verts_ || m_ != o.m_) return false;
        for (int v : verts_)
            if (neighbors(v) != o.neighbors(v)) return false;
        return true;
    }
    bool operator!=(const Graph& o) const { return !(*this == o); }

private:
    static void insert_sorted(std::vector<int>& xs, int v) {
        xs.insert(std::lower_bound(xs.begin(), xs.end(), v), v);
    }
    static void erase_sorted(std::vector<int>& xs, int v) {
        auto it = std::lower_bound(xs.begin(), xs.end(), v);
        if (it != xs.end() && *it == v) xs.erase(it);
    }

    std::vector<int> verts_;
    std::unordered_map<int, std::vector<int>> adj_;
    std::unordered_map<int, std::string> labels_;
    int m_ = 0;
};

// --- vertex-set helpers (sets are sorted vectors) ---

VertexSet set_union(const VertexSet& a, const VertexSet& b);
VertexSet set_intersection(const VertexSet& a, const VertexSet& b);
VertexSet set_difference(const VertexSet& a, const VertexSet& b);
bool set_contains(const VertexSet& a, int v);
VertexSet make_set(std::vector<int> xs);

// --- core operations ---

// G[X]: exactly the edges of G with both ends in X. Ids and labels are kept.
Graph induced_subgraph(const Graph& g, const VertexSet& x);

// L(G): one vertex per edge of G, adjacent iff the edges share an endpoint.
// Returns the line graph plus the edge represented by each new vertex.
struct LineGraph {
    Graph graph;
    std::vector<std::pair<int, int>> edge_of;  // vertex id i of L(G) -> edge of G
};
LineGraph line_graph(const Graph& g);

// Replace edge e by a path with k new internal vertices (k = 0 is identity).
Graph subdivide(const Graph& g, std::pair<int, int> e, int k);

// Contract edge uv into u (neighbourhoods merged, parallel edges simplified).
Graph contract_edge(const Graph& g, int u, int v);

// Contract a connected vertex set into a single kept vertex.
Graph contract_set(const Graph& g, const VertexSet& s, int keep);

// True iff no cycle of length >= 4 has a chord. An edge uv is a chord of
// some such cycle exactly when G - uv still has two internally disjoint
// u-v paths, so we test the local vertex connectivity instead of listing
// cycles.
bool is_chordless_graph(const Graph& g);

// Connectivity / distance.
bool is_connected(const Graph& g);
std::vector<VertexSet> connected_components(const Graph& g);
std::vector<VertexSet> components_after_removing(const Graph& g, const VertexSet& removed);

constexpr int kInfDist = -1;
// min over x in X, y in Y of dist(x, y); kInfDist when no path.
int distance(const Graph& g, const VertexSet& x, const VertexSet& y);

// Shortest path between two vertices (inclusive ends), empty when none.
std::vector<int> shortest_path(const Graph& g, int from, int to);

// Shortest path from 'from' to any vertex of 'targets'; empty when none.
std::vector<int> shortest_path_to_set(const Graph& g, int from, const VertexSet& targets);

// N(X) \ X over the whole graph.
VertexSet open_neighborhood(const Graph& g, const VertexSet& x);
// N[X]
VertexSet closed_neighborhood(const Graph& g, const VertexSet& x);

bool is_clique(const Graph& g, const VertexSet& x);
bool is_independent_set(const Graph& g, const VertexSet& x);
bool anticomplete(const Graph& g, const VertexSet& a, const VertexSet& b);
bool complete_between(const Graph& g, const VertexSet& a, const VertexSet& b);

// Graph isomorphism by backtracking with degree refinement; fine at desk
// scale (|V| <= ~60).
bool isomorphic(const Graph& a, const Graph& b);

}  // namespace holeforge
