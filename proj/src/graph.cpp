#include "holeforge/graph.hpp"

#include <deque>
#include <map>
#include <numeric>

namespace holeforge {

VertexSet set_union(const VertexSet& a, const VertexSet& b) {
    VertexSet out;
    out.reserve(a.size() + b.size());
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

VertexSet set_intersection(const VertexSet& a, const VertexSet& b) {
    VertexSet out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

VertexSet set_difference(const VertexSet& a, const VertexSet& b) {
    VertexSet out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

bool set_contains(const VertexSet& a, int v) {
    return std::binary_search(a.begin(), a.end(), v);
}

VertexSet make_set(std::vector<int> xs) {
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
    return xs;
}

Graph induced_subgraph(const Graph& g, const VertexSet& x) {
    Graph h;
    for (int v : x) {
        if (!g.has_vertex(v)) throw std::invalid_argument("induced_subgraph: unknown vertex id " + std::to_string(v));
        h.add_vertex(v);
        if (auto l = g.label(v)) h.set_label(v, *l);
    }
    for (int v : x)
        for (int w : g.neighbors(v))
            if (w > v && set_contains(x, w)) h.add_edge(v, w);
    return h;
}

LineGraph line_graph(const Graph& g) {
    LineGraph lg;
    lg.edge_of = g.edges();
    const int k = static_cast<int>(lg.edge_of.size());
    for (int i = 0; i < k; ++i) lg.graph.add_vertex(i);
    for (int i = 0; i < k; ++i) {
        auto [a, b] = lg.edge_of[i];
        for (int j = i + 1; j < k; ++j) {
            auto [c, d] = lg.edge_of[j];
            if (a == c || a == d || b == c || b == d) lg.graph.add_edge(i, j);
        }
    }
    return lg;
}

Graph subdivide(const Graph& g, std::pair<int, int> e, int k) {
    if (!g.has_edge(e.first, e.second)) throw std::invalid_argument("subdivide: edge absent");
    if (k < 0) throw std::invalid_argument("subdivide: negative count");
    Graph h = g;
    if (k == 0) return h;
    h.remove_edge(e.first, e.second);
    int prev = e.first;
    for (int i = 0; i < k; ++i) {
        int nv = h.fresh_vertex();
        h.add_vertex(nv);
        h.add_edge(prev, nv);
        prev = nv;
    }
    h.add_edge(prev, e.second);
    return h;
}

Graph contract_edge(const Graph& g, int u, int v) {
    if (!g.has_edge(u, v)) throw std::invalid_argument("contract_edge: edge absent");
    Graph h = g;
    for (int w : g.neighbors(v))
        if (w != u) h.add_edge(u, w);
    h.remove_vertex(v);
    return h;
}

Graph contract_set(const Graph& g, const VertexSet& s, int keep) {
    if (!set_contains(s, keep)) throw std::invalid_argument("contract_set: keep not in set");
    Graph h = g;
    for (int v : s) {
        if (v == keep) continue;
        for (int w : g.neighbors(v))
            if (!set_contains(s, w)) h.add_edge(keep, w);
        h.remove_vertex(v);
    }
    return h;
}

namespace {

// Are there two internally vertex-disjoint u-v paths in g? (u,v non-adjacent
// in the graph handed in here.) Unit vertex capacities via a tiny two-phase
// BFS flow; n is small so simplicity wins.
bool two_disjoint_paths(const Graph& g, int u, int v) {
    // Max-flow with vertex capacities 1 (split nodes), capacity 2 needed.
    // Node x -> x_in (2*idx), x_out (2*idx+1).
    std::map<int, int> idx;
    int n = 0;
    for (int x : g.vertices()) idx[x] = n++;
    const int N = 2 * n;
    std::vector<std::vector<int>> cap(N, std::vector<int>(N, 0));
    for (int x : g.vertices()) {
        int i = idx[x];
        cap[2 * i][2 * i + 1] = (x == u || x == v) ? 2 : 1;
        for (int y : g.neighbors(x)) cap[2 * i + 1][2 * idx[y]] = 2;
    }
    int s = 2 * idx[u], t = 2 * idx[v] + 1;
    int flow = 0;
    while (flow < 2) {
        std::vector<int> par(N, -1);
        std::deque<int> q{s};
        par[s] = s;
        while (!q.empty() && par[t] == -1) {
            int x = q.front();
            q.pop_front();
            for (int y = 0; y < N; ++y)
                if (cap[x][y] > 0 && par[y] == -1) {
                    par[y] = x;
                    q.push_back(y);
                }
        }
        if (par[t] == -1) break;
        for (int y = t; y != s; y = par[y]) {
            cap[par[y]][y] -= 1;
            cap[y][par[y]] += 1;
        }
        ++flow;
    }
    return flow >= 2;
}

}  // namespace

bool is_chordless_graph(const Graph& g) {
    // uv is a chord of a cycle of length >= 4 iff G - uv contains two
    // internally disjoint u-v paths (the two arcs of the cycle).
    for (auto [u, v] : g.edges()) {
        Graph h = g;
        h.remove_edge(u, v);
        if (two_disjoint_paths(h, u, v)) return false;
    }
    return true;
}

std::vector<VertexSet> connected_components(const Graph& g) {
    std::vector<VertexSet> comps;
    std::unordered_map<int, bool> seen;
    for (int s : g.vertices()) {
        if (seen[s]) continue;
        VertexSet comp;
        std::deque<int> q{s};
        seen[s] = true;
        while (!q.empty()) {
            int v = q.front();
            q.pop_front();
            comp.push_back(v);
            for (int w : g.neighbors(v))
                if (!seen[w]) {
                    seen[w] = true;
                    q.push_back(w);
                }
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;
}

std::vector<VertexSet> components_after_removing(const Graph& g, const VertexSet& removed) {
    return connected_components(induced_subgraph(g, set_difference(g.vertices(), removed)));
}

bool is_connected(const Graph& g) {
    return g.vertex_count() <= 1 || connected_components(g).size() == 1;
}

int distance(const Graph& g, const VertexSet& x, const VertexSet& y) {
    if (x.empty() || y.empty()) throw std::invalid_argument("distance: empty vertex set");
    for (int v : x)
        if (!g.has_vertex(v)) throw std::invalid_argument("distance: unknown vertex");
    for (int v : y)
        if (!g.has_vertex(v)) throw std::invalid_argument("distance: unknown vertex");
    std::unordered_map<int, int> dist;
    std::deque<int> q;
    for (int v : x) {
        dist[v] = 0;
        q.push_back(v);
    }
    while (!q.empty()) {
        int v = q.front();
        q.pop_front();
        if (set_contains(y, v)) return dist[v];
        for (int w : g.neighbors(v))
            if (!dist.count(w)) {
                dist[w] = dist[v] + 1;
                q.push_back(w);
            }
    }
    return kInfDist;
}

std::vector<int> shortest_path_to_set(const Graph& g, int from, const VertexSet& targets) {
    std::unordered_map<int, int> par;
    std::deque<int> q{from};
    par[from] = from;
    int hit = -1;
    if (set_contains(targets, from)) hit = from;
    while (!q.empty() && hit == -1) {
        int v = q.front();
        q.pop_front();
        for (int w : g.neighbors(v)) {
            if (par.count(w)) continue;
            par[w] = v;
            if (set_contains(targets, w)) {
                hit = w;
                break;
            }
            q.push_back(w);
        }
    }
    if (hit == -1) return {};
    std::vector<int> path{hit};
    while (path.back() != from) path.push_back(par[path.back()]);
    std::reverse(path.begin(), path.end());
    return path;
}

std::vector<int> shortest_path(const Graph& g, int from, int to) {
    return shortest_path_to_set(g, from, {to});
}

VertexSet open_neighborhood(const Graph& g, const VertexSet& x) {
    VertexSet out;
    for (int v : x)
        for (int w : g.neighbors(v))
            if (!set_contains(x, w)) out.push_back(w);
    return make_set(std::move(out));
}

VertexSet closed_neighborhood(const Graph& g, const VertexSet& x) {
    return set_union(x, open_neighborhood(g, x));
}

bool is_clique(const Graph& g, const VertexSet& x) {
    for (size_t i = 0; i < x.size(); ++i)
        for (size_t j = i + 1; j < x.size(); ++j)
            if (!g.has_edge(x[i], x[j])) return false;
    return true;
}

bool is_independent_set(const Graph& g, const VertexSet& x) {
    for (size_t i = 0; i < x.size(); ++i)
        for (size_t j = i + 1; j < x.size(); ++j)
            if (g.has_edge(x[i], x[j])) return false;
    return true;
}

bool anticomplete(const Graph& g, const VertexSet& a, const VertexSet& b) {
    for (int v : a)
        for (int w : g.neighbors(v))
            if (set_contains(b, w)) return false;
    return true;
}

bool complete_between(const Graph& g, const VertexSet& a, const VertexSet& b) {
    for (int v : a)
        for (int w : b)
            if (v != w && !g.has_edge(v, w)) return false;
    return true;
}

namespace {

bool iso_extend(const Graph& a, const Graph& b, const std::vector<int>& va,
                std::unordered_map<int, int>& map_ab, std::unordered_map<int, int>& map_ba,
                size_t i) {
    if (i == va.size()) return true;
    int u = va[i];
    for (int v : b.vertices()) {
        if (map_ba.count(v)) continue;
        if (a.degree(u) != b.degree(v)) continue;
        bool ok = true;
        for (int w : a.neighbors(u)) {
            auto it = map_ab.find(w);
            if (it != map_ab.end() && !b.has_edge(v, it->second)) {
                ok = false;
                break;
            }
        }
        if (ok) {
            // also require non-adjacency to be preserved
            for (auto& [w, x] : map_ab) {
                if (a.has_edge(u, w) != b.has_edge(v, x)) {
                    ok = false;
                    break;
                }
            }
        }
        if (!ok) continue;
        map_ab[u] = v;
        map_ba[v] = u;
        if (iso_extend(a, b, va, map_ab, map_ba, i + 1)) return true;
        map_ab.erase(u);
        map_ba.erase(v);
    }
    return false;
}

}  // namespace

bool isomorphic(const Graph& a, const Graph& b) {
    if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
    std::vector<int> da, db;
    for (int v : a.vertices()) da.push_back(a.degree(v));
    for (int v : b.vertices()) db.push_back(b.degree(v));
    std::sort(da.begin(), da.end());
    std::sort(db.begin(), db.end());
    if (da != db) return false;
    // order a's vertices by descending degree for faster failure
    std::vector<int> va = a.vertices();
    std::sort(va.begin(), va.end(), [&](int x, int y) { return a.degree(x) > a.degree(y); });
    std::unordered_map<int, int> map_ab, map_ba;
    return iso_extend(a, b, va, map_ab, map_ba, 0);
}

}  // namespace holeforge
