#include "holeforge/generators.hpp"

#include <string>

namespace holeforge {

int grid_id(int i, int j, int m) { return (i - 1) * m + (j - 1); }

Graph grid(int n, int m) {
    if (n < 2 || m < 2) throw std::invalid_argument("grid: n, m must be >= 2");
    Graph g;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= m; ++j) {
            int v = grid_id(i, j, m);
            g.add_vertex(v);
            g.set_label(v, std::to_string(i) + "," + std::to_string(j));
        }
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= m; ++j) {
            if (i < n) g.add_edge(grid_id(i, j, m), grid_id(i + 1, j, m));
            if (j < m) g.add_edge(grid_id(i, j, m), grid_id(i, j + 1, m));
        }
    return g;
}

Graph triangulated_grid(int n, int m) {
    Graph g = grid(n, m);
    for (int i = 2; i <= n; ++i)
        for (int j = 1; j < m; ++j) g.add_edge(grid_id(i, j, m), grid_id(i - 1, j + 1, m));
    for (auto [i, j] : {std::pair{1, 1}, {1, m}, {n, 1}, {n, m}})
        g.set_label(grid_id(i, j, m), "corner " + std::to_string(i) + "," + std::to_string(j));
    return g;
}

namespace {

// Appends a fresh path of `len` edges from `from` to `to`; returns interior.
std::vector<int> add_connecting_path(Graph& g, int from, int to, int len) {
    std::vector<int> interior;
    int prev = from;
    for (int i = 1; i < len; ++i) {
        int v = g.fresh_vertex();
        g.add_vertex(v);
        g.add_edge(prev, v);
        interior.push_back(v);
        prev = v;
    }
    g.add_edge(prev, to);
    return interior;
}

}  // namespace

Graph make_theta(int l1, int l2, int l3) {
    for (int l : {l1, l2, l3})
        if (l < 2) throw std::invalid_argument("make_theta: path lengths must be >= 2");
    Graph g;
    g.add_vertex(0);
    g.add_vertex(1);
    g.set_label(0, "a");
    g.set_label(1, "b");
    for (int l : {l1, l2, l3}) add_connecting_path(g, 0, 1, l);
    return g;
}

Graph make_prism(int l1, int l2, int l3) {
    for (int l : {l1, l2, l3})
        if (l < 1) throw std::invalid_argument("make_prism: path lengths must be >= 1");
    Graph g = Graph::with_vertices(6);
    // 0,1,2 = abc; 3,4,5 = a'b'c'
    g.add_edge(0, 1);
    g.add_edge(1, 2);
    g.add_edge(0, 2);
    g.add_edge(3, 4);
    g.add_edge(4, 5);
    g.add_edge(3, 5);
    int ls[3] = {l1, l2, l3};
    for (int i = 0; i < 3; ++i) add_connecting_path(g, i, i + 3, ls[i]);
    return g;
}

Graph make_pyramid(int l1, int l2, int l3) {
    int ones = (l1 == 1) + (l2 == 1) + (l3 == 1);
    for (int l : {l1, l2, l3})
        if (l < 1) throw std::invalid_argument("make_pyramid: path lengths must be >= 1");
    if (ones > 1) throw std::invalid_argument("make_pyramid: at most one path of length 1");
    Graph g = Graph::with_vertices(4);
    // 0 = apex x; 1,2,3 = triangle abc
    g.set_label(0, "apex");
    g.add_edge(1, 2);
    g.add_edge(2, 3);
    g.add_edge(1, 3);
    int ls[3] = {l1, l2, l3};
    for (int i = 0; i < 3; ++i) add_connecting_path(g, 0, i + 1, ls[i]);
    return g;
}

Graph make_wheel(int rim_length, const std::vector<int>& spoke_positions) {
    if (rim_length < 4) throw std::invalid_argument("make_wheel: rim must be a hole (length >= 4)");
    if (spoke_positions.size() < 3) throw std::invalid_argument("make_wheel: need at least 3 spokes");
    Graph g = cycle_graph(rim_length);
    int x = rim_length;
    g.add_vertex(x);
    g.set_label(x, "center");
    for (int p : spoke_positions) {
        if (p < 0 || p >= rim_length) throw std::invalid_argument("make_wheel: spoke position out of range");
        g.add_edge(x, p);
    }
    return g;
}

Graph make_extended_prism(int la, int la2, int lb, int lb2, int lc) {
    for (int l : {la, la2, lb, lb2, lc})
        if (l < 1) throw std::invalid_argument("make_extended_prism: path lengths must be >= 1");
    Graph g = Graph::with_vertices(8);
    // 0,1,2 = abc; 3,4,5 = a'b'c'; 6 = x; 7 = y
    g.set_label(6, "x");
    g.set_label(7, "y");
    g.add_edge(0, 1);
    g.add_edge(1, 2);
    g.add_edge(0, 2);
    g.add_edge(3, 4);
    g.add_edge(4, 5);
    g.add_edge(3, 5);
    add_connecting_path(g, 0, 6, la);   // A = a..x
    add_connecting_path(g, 6, 3, la2);  // A' = x..a'
    add_connecting_path(g, 1, 7, lb);   // B = b..y
    add_connecting_path(g, 7, 4, lb2);  // B' = y..b'
    add_connecting_path(g, 2, 5, lc);   // C = c..c'
    g.add_edge(6, 7);                   // xy
    return g;
}

Graph make_cube() {
    Graph g = cycle_graph(6);  // v1..v6 = 0..5
    g.add_vertex(6);
    g.add_vertex(7);
    g.set_label(6, "x");
    g.set_label(7, "y");
    for (int v : {0, 2, 4}) g.add_edge(6, v);
    for (int v : {1, 3, 5}) g.add_edge(7, v);
    return g;
}

std::vector<VertexSet> ring_parts(const RingSpec& spec) {
    std::vector<VertexSet> parts;
    int next = 0;
    for (int s : spec.clique_sizes) {
        VertexSet p;
        for (int t = 0; t < s; ++t) p.push_back(next++);
        parts.push_back(std::move(p));
    }
    return parts;
}

Graph make_ring(const RingSpec& spec) {
    const int k = static_cast<int>(spec.clique_sizes.size());
    if (k < 3) throw std::invalid_argument("make_ring: need k >= 3 cliques");
    for (int s : spec.clique_sizes)
        if (s < 1) throw std::invalid_argument("make_ring: clique sizes must be >= 1");
    auto parts = ring_parts(spec);
    Graph g;
    for (auto& p : parts)
        for (int v : p) g.add_vertex(v);
    for (int i = 0; i < k; ++i) {
        for (size_t a = 0; a < parts[i].size(); ++a)
            for (size_t b = a + 1; b < parts[i].size(); ++b) g.add_edge(parts[i][a], parts[i][b]);
        int j = (i + 1) % k;
        int cap = std::max(spec.clique_sizes[i], spec.clique_sizes[j]) + 1;
        for (size_t a = 0; a < parts[i].size(); ++a)
            for (size_t b = 0; b < parts[j].size(); ++b)
                if (static_cast<int>(a) + 1 + static_cast<int>(b) + 1 <= cap)
                    g.add_edge(parts[i][a], parts[j][b]);
    }
    for (int i = 0; i < k; ++i)
        for (size_t a = 0; a < parts[i].size(); ++a)
            g.set_label(parts[i][a], "X" + std::to_string(i + 1) + "." + std::to_string(a + 1));
    return g;
}

std::vector<VertexSet> hyperantihole_parts(const std::vector<int>& sizes) {
    std::vector<VertexSet> parts;
    int next = 0;
    for (int s : sizes) {
        VertexSet p;
        for (int t = 0; t < s; ++t) p.push_back(next++);
        parts.push_back(std::move(p));
    }
    return parts;
}

Graph make_7hyperantihole(const std::vector<int>& sizes) {
    if (sizes.size() != 7) throw std::invalid_argument("make_7hyperantihole: need exactly 7 sizes");
    for (int s : sizes)
        if (s < 1) throw std::invalid_argument("make_7hyperantihole: sizes must be >= 1");
    auto parts = hyperantihole_parts(sizes);
    Graph g;
    for (auto& p : parts)
        for (int v : p) g.add_vertex(v);
    for (int i = 0; i < 7; ++i)
        for (size_t a = 0; a < parts[i].size(); ++a)
            for (size_t b = a + 1; b < parts[i].size(); ++b) g.add_edge(parts[i][a], parts[i][b]);
    for (int i = 0; i < 7; ++i)
        for (int j = i + 1; j < 7; ++j) {
            bool consecutive = (j == i + 1) || (i == 0 && j == 6);
            if (consecutive) continue;
            for (int u : parts[i])
                for (int v : parts[j]) g.add_edge(u, v);
        }
    return g;
}

Graph complete_graph(int n) {
    Graph g = Graph::with_vertices(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
    return g;
}

Graph cycle_graph(int n) {
    if (n < 3) throw std::invalid_argument("cycle_graph: need n >= 3");
    Graph g = Graph::with_vertices(n);
    for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
    return g;
}

Graph path_graph(int n) {
    if (n < 1) throw std::invalid_argument("path_graph: need n >= 1");
    Graph g = Graph::with_vertices(n);
    for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
    return g;
}

}  // namespace holeforge
