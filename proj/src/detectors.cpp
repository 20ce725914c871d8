#include "holeforge/detectors.hpp"

#include <set>

namespace holeforge {

namespace {

bool adjacent_to_any(const Graph& g, int v, const std::vector<int>& xs, size_t upto) {
    for (size_t i = 0; i < upto; ++i)
        if (g.has_edge(v, xs[i])) return true;
    return false;
}

// Canonical chordless cycle enumeration: the cycle's minimum vertex is the
// start, its smaller neighbor comes first. Every hole is visited once.
bool enumerate_holes(const Graph& g, const std::function<bool(const std::vector<int>&)>& visit,
                     Deadline dl) {
    std::vector<int> path;
    bool keep_going = true;

    std::function<bool(int)> extend = [&](int start) -> bool {
        if (dl.expired()) return false;
        int last = path.back();
        for (int v : g.neighbors(last)) {
            if (!keep_going) return true;
            if (dl.expired()) return false;
            if (v <= start) continue;
            if (std::find(path.begin(), path.end(), v) != path.end()) continue;
            // chordless: v may touch the path only at `last` (plus `start`
            // when closing)
            if (adjacent_to_any(g, v, path, path.size() - 1 > 0 ? path.size() - 1 : 0)) {
                // adjacency to start is allowed only as a closure; any other
                // adjacency kills this branch. adjacent_to_any checked
                // everything before `last`, including start at index 0.
                if (g.has_edge(v, start)) {
                    // does v touch anything strictly between start and last?
                    bool inner = false;
                    for (size_t i = 1; i + 1 < path.size(); ++i)
                        if (g.has_edge(v, path[i])) inner = true;
                    if (!inner && path.size() >= 3) {
                        // close: cycle start..last,v of length path.size()+1 >= 4
                        if (path[1] < v) {  // direction dedupe
                            path.push_back(v);
                            keep_going = visit(path);
                            path.pop_back();
                            if (!keep_going) return true;
                        }
                    }
                }
                continue;  // cannot extend through a vertex touching the path
            }
            path.push_back(v);
            if (!extend(start)) return false;
            path.pop_back();
            if (!keep_going) return true;
        }
        return true;
    };

    for (int s : g.vertices()) {
        if (dl.expired()) return false;
        path = {s};
        if (!extend(s)) return false;
        if (!keep_going) return true;
    }
    return true;
}

// DFS enumeration of induced u-v paths (inclusive, length >= 1).
bool enumerate_induced_paths(const Graph& g, int u, int v,
                             const std::function<bool(const std::vector<int>&)>& visit, Deadline dl) {
    if (!g.has_vertex(u) || !g.has_vertex(v) || u == v) return true;
    std::vector<int> path{u};
    bool keep_going = true;

    std::function<bool()> extend = [&]() -> bool {
        if (dl.expired()) return false;
        int last = path.back();
        for (int w : g.neighbors(last)) {
            if (!keep_going) return true;
            if (dl.expired()) return false;
            if (std::find(path.begin(), path.end(), w) != path.end()) continue;
            if (adjacent_to_any(g, w, path, path.size() - 1)) continue;  // chord
            path.push_back(w);
            if (w == v) {
                keep_going = visit(path);
            } else {
                if (!extend()) return false;
            }
            path.pop_back();
            if (!keep_going) return true;
        }
        return true;
    };
    return extend();
}

// g minus `removed`, minus neighbors of `adjacency_forbidden` except `keep`.
Graph search_residual(const Graph& g, const VertexSet& removed, const VertexSet& adjacency_forbidden,
                      const VertexSet& keep) {
    VertexSet gone = removed;
    for (int v : open_neighborhood(g, adjacency_forbidden)) gone.push_back(v);
    gone = set_difference(make_set(std::move(gone)), keep);
    return induced_subgraph(g, set_difference(g.vertices(), gone));
}

VertexSet interior_of(const std::vector<int>& path) {
    if (path.size() <= 2) return {};
    return make_set(std::vector<int>(path.begin() + 1, path.end() - 1));
}

std::vector<std::array<int, 3>> all_triangles(const Graph& g) {
    std::vector<std::array<int, 3>> tris;
    for (int u : g.vertices())
        for (int v : g.neighbors(u)) {
            if (v < u) continue;
            for (int w : g.neighbors(v)) {
                if (w < v) continue;
                if (g.has_edge(u, w)) tris.push_back({u, v, w});
            }
        }
    return tris;
}

// Expected-versus-induced equality: the union of `edges` over `verts` must
// be exactly the edge set of g restricted to verts.
bool induced_matches(const Graph& g, const VertexSet& verts,
                     const std::vector<std::pair<int, int>>& edges) {
    std::set<std::pair<int, int>> want;
    for (auto [a, b] : edges) want.insert(std::minmax(a, b));
    Graph sub = induced_subgraph(g, verts);
    if (sub.edge_count() != static_cast<int>(want.size())) return false;
    for (auto [a, b] : sub.edges())
        if (!want.count(std::minmax(a, b))) return false;
    return true;
}

void append_path_edges(std::vector<std::pair<int, int>>& edges, const std::vector<int>& p) {
    for (size_t i = 0; i + 1 < p.size(); ++i) edges.emplace_back(p[i], p[i + 1]);
}

bool path_ok(const Graph& g, const std::vector<int>& p) {
    if (p.size() < 2) return false;
    std::set<int> seen(p.begin(), p.end());
    if (seen.size() != p.size()) return false;
    for (size_t i = 0; i + 1 < p.size(); ++i)
        if (!g.has_edge(p[i], p[i + 1])) return false;
    return true;
}

}  // namespace

bool for_each_hole(const Graph& g, const std::function<bool(const std::vector<int>&)>& visit,
                   Deadline deadline) {
    return enumerate_holes(g, visit, deadline);
}

Search<HoleWitness> find_hole(const Graph& g, HoleParity parity, Deadline deadline) {
    Search<HoleWitness> res;
    bool complete = enumerate_holes(
        g,
        [&](const std::vector<int>& cyc) {
            int len = static_cast<int>(cyc.size());
            bool match = parity == HoleParity::any || (parity == HoleParity::even && len % 2 == 0) ||
                         (parity == HoleParity::odd && len % 2 == 1);
            if (match) {
                res.status = SearchStatus::found;
                res.witness = HoleWitness{cyc};
                return false;
            }
            return true;
        },
        deadline);
    if (res.status == SearchStatus::found) return res;
    res.status = complete ? SearchStatus::none : SearchStatus::inconclusive;
    return res;
}

Search<ThetaWitness> find_theta(const Graph& g, Deadline deadline) {
    Search<ThetaWitness> res;
    bool timed_out = false;
    for (int a : g.vertices()) {
        for (int b : g.vertices()) {
            if (b <= a || g.has_edge(a, b)) continue;
            bool complete = enumerate_induced_paths(
                g, a, b,
                [&](const std::vector<int>& p1) {
                    Graph h1 = search_residual(g, interior_of(p1), interior_of(p1), {a, b});
                    bool inner_complete = enumerate_induced_paths(
                        h1, a, b,
                        [&](const std::vector<int>& p2) {
                            Graph h2 = search_residual(h1, interior_of(p2), interior_of(p2), {a, b});
                            auto p3 = shortest_path(h2, a, b);
                            if (!p3.empty()) {
                                ThetaWitness w;
                                w.a = a;
                                w.b = b;
                                w.paths = {p1, p2, p3};
                                if (validate_theta(g, w)) {
                                    res.status = SearchStatus::found;
                                    res.witness = w;
                                    return false;
                                }
                            }
                            return true;
                        },
                        deadline);
                    if (!inner_complete) timed_out = true;
                    return res.status != SearchStatus::found && !timed_out;
                },
                deadline);
            if (!complete) timed_out = true;
            if (res.status == SearchStatus::found) return res;
        }
    }
    res.status = timed_out ? SearchStatus::inconclusive : SearchStatus::none;
    return res;
}

Search<PrismWitness> find_prism(const Graph& g, Deadline deadline) {
    Search<PrismWitness> res;
    bool timed_out = false;
    auto tris = all_triangles(g);
    for (size_t i = 0; i < tris.size() && res.status != SearchStatus::found; ++i) {
        for (size_t j = i + 1; j < tris.size() && res.status != SearchStatus::found; ++j) {
            VertexSet s1 = make_set({tris[i][0], tris[i][1], tris[i][2]});
            VertexSet s2 = make_set({tris[j][0], tris[j][1], tris[j][2]});
            if (!set_intersection(s1, s2).empty()) continue;
            std::array<int, 3> t1 = tris[i];
            std::array<int, 3> perm = tris[j];
            std::sort(perm.begin(), perm.end());
            do {
                if (deadline.expired()) {
                    timed_out = true;
                    break;
                }
                // cross edges only between matched corners
                bool bad = false;
                for (int x = 0; x < 3 && !bad; ++x)
                    for (int y = 0; y < 3 && !bad; ++y)
                        if (x != y && g.has_edge(t1[x], perm[y])) bad = true;
                if (bad) continue;
                int a = t1[0], b = t1[1], c = t1[2];
                int a2 = perm[0], b2 = perm[1], c2 = perm[2];
                Graph h1 = search_residual(g, make_set({b, c, b2, c2}), make_set({b, c, b2, c2}), {a, a2});
                bool complete = enumerate_induced_paths(
                    h1, a, a2,
                    [&](const std::vector<int>& p1) {
                        VertexSet u1 = make_set(std::vector<int>(p1.begin(), p1.end()));
                        Graph h2 = search_residual(g, set_union(u1, make_set({c, c2})),
                                                   set_union(u1, make_set({c, c2})), {b, b2});
                        bool inner_complete = enumerate_induced_paths(
                            h2, b, b2,
                            [&](const std::vector<int>& p2) {
                                VertexSet u2 = make_set(std::vector<int>(p2.begin(), p2.end()));
                                VertexSet used = set_union(u1, u2);
                                Graph h3 = search_residual(g, used, used, {c, c2});
                                auto p3 = shortest_path(h3, c, c2);
                                if (!p3.empty()) {
                                    PrismWitness w;
                                    w.t1 = {a, b, c};
                                    w.t2 = {a2, b2, c2};
                                    w.paths = {p1, p2, p3};
                                    if (validate_prism(g, w)) {
                                        res.status = SearchStatus::found;
                                        res.witness = w;
                                        return false;
                                    }
                                }
                                return true;
                            },
                            deadline);
                        if (!inner_complete) timed_out = true;
                        return res.status != SearchStatus::found && !timed_out;
                    },
                    deadline);
                if (!complete) timed_out = true;
                if (res.status == SearchStatus::found) break;
            } while (std::next_permutation(perm.begin(), perm.end()));
        }
    }
    if (res.status == SearchStatus::found) return res;
    res.status = timed_out ? SearchStatus::inconclusive : SearchStatus::none;
    return res;
}

Search<PyramidWitness> find_pyramid(const Graph& g, Deadline deadline) {
    Search<PyramidWitness> res;
    bool timed_out = false;
    auto tris = all_triangles(g);
    for (auto& t : tris) {
        for (int x : g.vertices()) {
            if (res.status == SearchStatus::found) break;
            if (x == t[0] || x == t[1] || x == t[2]) continue;
            int adj = g.has_edge(x, t[0]) + g.has_edge(x, t[1]) + g.has_edge(x, t[2]);
            if (adj > 1) continue;  // at most one length-1 path
            if (deadline.expired()) {
                timed_out = true;
                break;
            }
            int a = t[0], b = t[1], c = t[2];
            Graph h1 = search_residual(g, make_set({b, c}), make_set({b, c}), {x, a});
            bool complete = enumerate_induced_paths(
                h1, x, a,
                [&](const std::vector<int>& p1) {
                    VertexSet u1 = make_set(std::vector<int>(p1.begin(), p1.end()));
                    VertexSet f2 = set_union(set_difference(u1, {x}), make_set({c}));
                    Graph h2 = search_residual(g, f2, f2, {x, b});
                    bool inner_complete = enumerate_induced_paths(
                        h2, x, b,
                        [&](const std::vector<int>& p2) {
                            VertexSet u2 = make_set(std::vector<int>(p2.begin(), p2.end()));
                            VertexSet f3 = set_difference(set_union(u1, u2), {x});
                            Graph h3 = search_residual(g, f3, f3, {x, c});
                            auto p3 = shortest_path(h3, x, c);
                            if (!p3.empty()) {
                                PyramidWitness w;
                                w.apex = x;
                                w.triangle = {a, b, c};
                                w.paths = {p1, p2, p3};
                                if (validate_pyramid(g, w)) {
                                    res.status = SearchStatus::found;
                                    res.witness = w;
                                    return false;
                                }
                            }
                            return true;
                        },
                        deadline);
                    if (!inner_complete) timed_out = true;
                    return res.status != SearchStatus::found && !timed_out;
                },
                deadline);
            if (!complete) timed_out = true;
        }
        if (res.status == SearchStatus::found) break;
    }
    if (res.status == SearchStatus::found) return res;
    res.status = timed_out ? SearchStatus::inconclusive : SearchStatus::none;
    return res;
}

Search<WheelWitness> find_wheel(const Graph& g, bool proper_only, Deadline deadline) {
    Search<WheelWitness> res;
    bool complete = enumerate_holes(
        g,
        [&](const std::vector<int>& rim) {
            VertexSet rimset = make_set(std::vector<int>(rim.begin(), rim.end()));
            for (int x : g.vertices()) {
                if (set_contains(rimset, x)) continue;
                int cnt = 0;
                for (int r : rim)
                    if (g.has_edge(x, r)) ++cnt;
                if (cnt < 3) continue;
                if (proper_only) {
                    VertexSet all = set_union(rimset, {x});
                    if (as_pyramid_graph(induced_subgraph(g, all))) continue;
                }
                res.status = SearchStatus::found;
                res.witness = WheelWitness{rim, x};
                return false;
            }
            return true;
        },
        deadline);
    if (res.status == SearchStatus::found) return res;
    res.status = complete ? SearchStatus::none : SearchStatus::inconclusive;
    return res;
}

// --- validators -------------------------------------------------------------

bool validate_hole(const Graph& g, const HoleWitness& w) {
    const auto& c = w.cycle;
    if (c.size() < 4) return false;
    std::set<int> seen(c.begin(), c.end());
    if (seen.size() != c.size()) return false;
    std::vector<std::pair<int, int>> edges;
    for (size_t i = 0; i < c.size(); ++i) edges.emplace_back(c[i], c[(i + 1) % c.size()]);
    for (auto [u, v] : edges)
        if (!g.has_edge(u, v)) return false;
    return induced_matches(g, make_set(std::vector<int>(c.begin(), c.end())), edges);
}

bool validate_theta(const Graph& g, const ThetaWitness& w) {
    if (w.a == w.b || g.has_edge(w.a, w.b)) return false;
    VertexSet verts;
    std::vector<std::pair<int, int>> edges;
    std::set<int> interior_seen;
    for (auto& p : w.paths) {
        if (!path_ok(g, p) || p.size() < 3) return false;  // length >= 2
        if (p.front() != w.a || p.back() != w.b) return false;
        for (size_t i = 1; i + 1 < p.size(); ++i) {
            if (interior_seen.count(p[i])) return false;  // internally disjoint
            interior_seen.insert(p[i]);
        }
        append_path_edges(edges, p);
        for (int v : p) verts.push_back(v);
    }
    return induced_matches(g, make_set(std::move(verts)), edges);
}

bool validate_prism(const Graph& g, const PrismWitness& w) {
    VertexSet verts;
    std::vector<std::pair<int, int>> edges;
    std::set<int> seen;
    for (int i = 0; i < 3; ++i) {
        edges.emplace_back(w.t1[i], w.t1[(i + 1) % 3]);
        edges.emplace_back(w.t2[i], w.t2[(i + 1) % 3]);
    }
    for (int i = 0; i < 3; ++i) {
        const auto& p = w.paths[i];
        if (!path_ok(g, p)) return false;
        if (p.front() != w.t1[i] || p.back() != w.t2[i]) return false;
        for (int v : p) {
            if (seen.count(v)) return false;
            seen.insert(v);
            verts.push_back(v);
        }
        append_path_edges(edges, p);
    }
    return induced_matches(g, make_set(std::move(verts)), edges);
}

bool validate_pyramid(const Graph& g, const PyramidWitness& w) {
    VertexSet verts{w.apex};
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < 3; ++i) edges.emplace_back(w.triangle[i], w.triangle[(i + 1) % 3]);
    std::set<int> seen{w.apex};
    int short_paths = 0;
    for (int i = 0; i < 3; ++i) {
        const auto& p = w.paths[i];
        if (!path_ok(g, p)) return false;
        if (p.front() != w.apex || p.back() != w.triangle[i]) return false;
        if (p.size() == 2) ++short_paths;
        for (size_t t = 1; t < p.size(); ++t) {
            if (seen.count(p[t])) return false;
            seen.insert(p[t]);
            verts.push_back(p[t]);
        }
        append_path_edges(edges, p);
    }
    if (short_paths > 1) return false;  // two of the paths have length >= 2
    return induced_matches(g, make_set(std::move(verts)), edges);
}

bool validate_wheel(const Graph& g, const WheelWitness& w) {
    if (!validate_hole(g, HoleWitness{w.rim})) return false;
    if (std::find(w.rim.begin(), w.rim.end(), w.center) != w.rim.end()) return false;
    if (!g.has_vertex(w.center)) return false;
    int cnt = 0;
    for (int r : w.rim)
        if (g.has_edge(w.center, r)) ++cnt;
    return cnt >= 3;
}

// --- whole-graph recognizers -------------------------------------------------

bool is_cycle_graph(const Graph& g) {
    if (g.vertex_count() < 3 || !is_connected(g)) return false;
    for (int v : g.vertices())
        if (g.degree(v) != 2) return false;
    return true;
}

bool is_complete_graph(const Graph& g) {
    int n = g.vertex_count();
    return g.edge_count() == n * (n - 1) / 2;
}

bool is_cube_graph(const Graph& g) {
    static const Graph cube = [] {
        Graph c = Graph::with_vertices(8);
        for (int i = 0; i < 6; ++i) c.add_edge(i, (i + 1) % 6);
        for (int v : {0, 2, 4}) c.add_edge(6, v);
        for (int v : {1, 3, 5}) c.add_edge(7, v);
        return c;
    }();
    return g.vertex_count() == 8 && g.edge_count() == 12 && isomorphic(g, cube);
}

std::optional<PyramidWitness> as_pyramid_graph(const Graph& g) {
    if (g.vertex_count() < 6) return std::nullopt;
    auto walk_chain = [&](int corner_or_apex, int first) {
        // follow degree-2 vertices; return full path including both ends
        std::vector<int> p{corner_or_apex, first};
        int prev = corner_or_apex, cur = first;
        while (g.degree(cur) == 2) {
            int nxt = g.neighbors(cur)[0] == prev ? g.neighbors(cur)[1] : g.neighbors(cur)[0];
            prev = cur;
            cur = nxt;
            p.push_back(cur);
        }
        return p;
    };
    for (auto& t : all_triangles(g)) {
        for (int x : g.vertices()) {
            if (x == t[0] || x == t[1] || x == t[2] || g.degree(x) != 3) continue;
            PyramidWitness w;
            w.apex = x;
            w.triangle = t;
            bool ok = true;
            std::vector<std::vector<int>> chains;
            for (int first : g.neighbors(x)) chains.push_back(walk_chain(x, first));
            // match each chain to a distinct triangle corner
            std::array<bool, 3> used{};
            for (auto& ch : chains) {
                int end = ch.back();
                int idx = -1;
                for (int i = 0; i < 3; ++i)
                    if (t[i] == end && !used[i]) idx = i;
                if (idx == -1) {
                    ok = false;
                    break;
                }
                used[idx] = true;
                w.paths[idx] = ch;
            }
            if (!ok) continue;
            // whole graph must be covered
            std::set<int> verts{x, t[0], t[1], t[2]};
            for (auto& p : w.paths)
                for (int v : p) verts.insert(v);
            if (static_cast<int>(verts.size()) != g.vertex_count()) continue;
            if (validate_pyramid(g, w)) return w;
        }
    }
    return std::nullopt;
}

std::optional<WheelWitness> as_proper_wheel_graph(const Graph& g) {
    if (g.vertex_count() < 5) return std::nullopt;
    if (as_pyramid_graph(g)) return std::nullopt;  // a wheel that is a pyramid is not proper
    for (int x : g.vertices()) {
        if (g.degree(x) < 3) continue;
        VertexSet rest = set_difference(g.vertices(), {x});
        Graph rim = induced_subgraph(g, rest);
        if (!is_cycle_graph(rim) || rim.vertex_count() < 4) continue;
        // order the rim
        std::vector<int> cyc{rest[0]};
        int prev = -1;
        while (static_cast<int>(cyc.size()) < rim.vertex_count()) {
            int cur = cyc.back();
            for (int w : rim.neighbors(cur))
                if (w != prev) {
                    prev = cur;
                    cyc.push_back(w);
                    break;
                }
        }
        WheelWitness w{cyc, x};
        if (validate_wheel(g, w)) return w;
    }
    return std::nullopt;
}

std::optional<ExtendedPrismWitness> as_extended_prism_graph(const Graph& g) {
    if (g.vertex_count() < 8) return std::nullopt;
    auto walk_from = [&](int corner, const VertexSet& triangle) -> std::vector<int> {
        // the unique neighbor outside the triangle, then along degree-2s
        if (g.degree(corner) != 3) return {};
        int first = -1;
        for (int w : g.neighbors(corner))
            if (!set_contains(triangle, w)) first = w;
        if (first < 0) return {};
        std::vector<int> p{corner, first};
        int prev = corner, cur = first;
        while (g.degree(cur) == 2) {
            int nxt = g.neighbors(cur)[0] == prev ? g.neighbors(cur)[1] : g.neighbors(cur)[0];
            prev = cur;
            cur = nxt;
            p.push_back(cur);
        }
        return p;
    };
    auto tris = all_triangles(g);
    for (size_t i = 0; i < tris.size(); ++i)
        for (size_t j = 0; j < tris.size(); ++j) {
            if (i == j) continue;
            VertexSet s1 = make_set({tris[i][0], tris[i][1], tris[i][2]});
            VertexSet s2 = make_set({tris[j][0], tris[j][1], tris[j][2]});
            if (!set_intersection(s1, s2).empty()) continue;
            std::array<int, 3> t1 = tris[i];
            std::array<int, 3> t2s = tris[j];
            std::sort(t1.begin(), t1.end());
            std::sort(t2s.begin(), t2s.end());
            do {
                do {
                    int a = t1[0], b = t1[1], c = t1[2];
                    int a2 = t2s[0], b2 = t2s[1], c2 = t2s[2];
                    auto pa = walk_from(a, s1);
                    auto pb = walk_from(b, s1);
                    auto pc = walk_from(c, s1);
                    auto pa2 = walk_from(a2, s2);
                    auto pb2 = walk_from(b2, s2);
                    if (pa.empty() || pb.empty() || pc.empty() || pa2.empty() || pb2.empty()) continue;
                    if (pc.back() != c2) continue;             // C runs corner to corner
                    int x = pa.back(), y = pb.back();
                    if (x == y || !g.has_edge(x, y)) continue;  // xy edge
                    if (pa2.back() != x || pb2.back() != y) continue;
                    ExtendedPrismWitness w;
                    w.t1 = {a, b, c};
                    w.t2 = {a2, b2, c2};
                    w.x = x;
                    w.y = y;
                    w.pa = pa;
                    std::reverse(pa2.begin(), pa2.end());
                    w.pa2 = pa2;  // x..a'
                    w.pb = pb;
                    std::reverse(pb2.begin(), pb2.end());
                    w.pb2 = pb2;  // y..b'
                    w.pc = pc;
                    if (validate_extended_prism(g, w)) return w;
                } while (std::next_permutation(t2s.begin(), t2s.end()));
            } while (std::next_permutation(t1.begin(), t1.end()));
        }
    return std::nullopt;
}

bool validate_extended_prism(const Graph& g, const ExtendedPrismWitness& w) {
    // all five paths are non-trivial
    for (auto* p : {&w.pa, &w.pa2, &w.pb, &w.pb2, &w.pc})
        if (!path_ok(g, *p)) return false;
    if (w.pa.front() != w.t1[0] || w.pa.back() != w.x) return false;
    if (w.pa2.front() != w.x || w.pa2.back() != w.t2[0]) return false;
    if (w.pb.front() != w.t1[1] || w.pb.back() != w.y) return false;
    if (w.pb2.front() != w.y || w.pb2.back() != w.t2[1]) return false;
    if (w.pc.front() != w.t1[2] || w.pc.back() != w.t2[2]) return false;
    if (!g.has_edge(w.x, w.y)) return false;
    // disjointness: paths share only the prescribed junctions
    std::set<int> seen;
    auto add_all = [&](const std::vector<int>& p, std::set<int> allow_shared) {
        for (int v : p) {
            if (seen.count(v) && !allow_shared.count(v)) return false;
            seen.insert(v);
        }
        return true;
    };
    if (!add_all(w.pa, {})) return false;
    if (!add_all(w.pa2, {w.x})) return false;
    if (!add_all(w.pb, {})) return false;
    if (!add_all(w.pb2, {w.y})) return false;
    if (!add_all(w.pc, {})) return false;

    VertexSet verts(seen.begin(), seen.end());
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < 3; ++i) {
        edges.emplace_back(w.t1[i], w.t1[(i + 1) % 3]);
        edges.emplace_back(w.t2[i], w.t2[(i + 1) % 3]);
    }
    edges.emplace_back(w.x, w.y);
    for (auto* p : {&w.pa, &w.pa2, &w.pb, &w.pb2, &w.pc}) append_path_edges(edges, *p);
    return induced_matches(g, verts, edges);
}

// --- major vertices and sectors ----------------------------------------------

namespace {

std::vector<int> hole_neighbor_positions(const Graph& g, const std::vector<int>& hole, int u) {
    std::vector<int> pos;
    for (size_t i = 0; i < hole.size(); ++i)
        if (g.has_edge(u, hole[i])) pos.push_back(static_cast<int>(i));
    return pos;
}

}  // namespace

VertexSet major_vertices(const Graph& g, const std::vector<int>& hole) {
    if (!validate_hole(g, HoleWitness{hole})) throw std::invalid_argument("major_vertices: not a hole");
    const int n = static_cast<int>(hole.size());
    VertexSet majors;
    VertexSet holeset = make_set(std::vector<int>(hole.begin(), hole.end()));
    for (int u : g.vertices()) {
        if (set_contains(holeset, u)) continue;
        auto pos = hole_neighbor_positions(g, hole, u);
        if (pos.empty()) continue;
        // is N_H(u) inside some 3-vertex subpath of H?
        bool inside = false;
        for (int s = 0; s < n; ++s) {
            bool all = true;
            for (int p : pos) {
                int d = (p - s + n) % n;
                if (d > 2) all = false;
            }
            if (all) inside = true;
        }
        if (!inside) majors.push_back(u);
    }
    return majors;
}

std::vector<std::vector<int>> sectors(const Graph& g, const std::vector<int>& hole, int u) {
    if (!validate_hole(g, HoleWitness{hole})) throw std::invalid_argument("sectors: not a hole");
    VertexSet holeset = make_set(std::vector<int>(hole.begin(), hole.end()));
    if (set_contains(holeset, u)) throw std::invalid_argument("sectors: u lies on the hole");
    auto pos = hole_neighbor_positions(g, hole, u);
    if (pos.size() < 2) throw std::invalid_argument("sectors: fewer than 2 neighbors on the hole");
    const int n = static_cast<int>(hole.size());
    std::vector<std::vector<int>> out;
    for (size_t t = 0; t < pos.size(); ++t) {
        int from = pos[t];
        int to = pos[(t + 1) % pos.size()];
        std::vector<int> sector;
        for (int p = from;; p = (p + 1) % n) {
            sector.push_back(hole[p]);
            if (p == to) break;
        }
        out.push_back(std::move(sector));
    }
    return out;
}

std::optional<std::vector<int>> check_sector_containment(const Graph& g, const std::vector<int>& hole,
                                                         int v, const VertexSet& c) {
    VertexSet nv = closed_neighborhood(g, {v});
    auto comps = components_after_removing(g, nv);
    bool is_comp = false;
    for (auto& comp : comps)
        if (comp == c) is_comp = true;
    if (!is_comp) throw std::invalid_argument("check_sector_containment: C is not a component of G - N[v]");
    VertexSet holeset = make_set(std::vector<int>(hole.begin(), hole.end()));
    VertexSet outside = set_difference(set_difference(nv, {v}), holeset);  // N(v) \ V(H)
    VertexSet nc = open_neighborhood(g, c);
    for (auto& sector : sectors(g, hole, v)) {
        VertexSet allowed = set_union(make_set({sector.front(), sector.back()}), outside);
        if (set_difference(nc, allowed).empty()) return sector;
    }
    return std::nullopt;
}

// --- rings and 7-hyperantiholes -----------------------------------------------

bool validate_ring_partition(const Graph& g, const std::vector<VertexSet>& parts) {
    const int k = static_cast<int>(parts.size());
    if (k < 3) return false;
    VertexSet all;
    for (auto& p : parts) {
        if (p.empty()) return false;
        for (int v : p) all.push_back(v);
    }
    all = make_set(std::move(all));
    if (all != g.vertices()) return false;
    for (auto& p : parts)
        if (!is_clique(g, p)) return false;
    for (int i = 0; i < k; ++i) {
        VertexSet far;
        for (int j = 0; j < k; ++j) {
            if (j == i || j == (i + 1) % k || j == (i + k - 1) % k) continue;
            for (int v : parts[j]) far.push_back(v);
        }
        if (!anticomplete(g, parts[i], make_set(std::move(far)))) return false;
        VertexSet around = set_union(parts[(i + 1) % k], parts[(i + k - 1) % k]);
        bool some = false;
        for (int v : parts[i])
            if (complete_between(g, {v}, around)) some = true;
        if (!some) return false;
        for (size_t a = 0; a < parts[i].size(); ++a)
            for (size_t b = a + 1; b < parts[i].size(); ++b) {
                VertexSet na = closed_neighborhood(g, {parts[i][a]});
                VertexSet nb = closed_neighborhood(g, {parts[i][b]});
                if (!set_difference(na, nb).empty() && !set_difference(nb, na).empty()) return false;
            }
    }
    return true;
}

bool validate_7hyperantihole_partition(const Graph& g, const std::vector<VertexSet>& parts) {
    if (parts.size() != 7) return false;
    VertexSet all;
    for (auto& p : parts) {
        if (p.empty()) return false;
        for (int v : p) all.push_back(v);
    }
    all = make_set(std::move(all));
    if (all != g.vertices()) return false;
    for (auto& p : parts)
        if (!is_clique(g, p)) return false;
    for (int i = 0; i < 7; ++i) {
        VertexSet far;
        for (int j = 0; j < 7; ++j) {
            if (j == i || j == (i + 1) % 7 || j == (i + 6) % 7) continue;
            for (int v : parts[j]) far.push_back(v);
        }
        if (!complete_between(g, parts[i], make_set(std::move(far)))) return false;
        if (!anticomplete(g, parts[i], parts[(i + 1) % 7])) return false;
        if (!anticomplete(g, parts[i], parts[(i + 6) % 7])) return false;
    }
    return true;
}

namespace {

// Backtracking over circular class assignments. Classes are cliques;
// `near_required` constrains adjacency towards circularly consecutive
// classes (nullopt = unconstrained), `far_required` towards all others.
struct CircularAssign {
    const Graph& g;
    int k;
    std::optional<bool> near_required;
    bool far_required;
    std::vector<int> verts;
    std::vector<int> cls;
    Deadline dl;
    bool timed_out = false;

    CircularAssign(const Graph& g_, int k_, std::optional<bool> near_req, bool far_req, Deadline dl_)
        : g(g_), k(k_), near_required(near_req), far_required(far_req), verts(g_.vertices()),
          cls(g_.vertices().size(), -1), dl(dl_) {}

    bool compatible(size_t i, int c) const {
        for (size_t j = 0; j < i; ++j) {
            bool adj = g.has_edge(verts[i], verts[j]);
            int d = std::abs(c - cls[j]);
            d = std::min(d, k - d);
            if (d == 0 && !adj) return false;
            if (d == 1 && near_required && *near_required != adj) return false;
            if (d >= 2 && far_required != adj) return false;
        }
        return true;
    }

    template <class Accept>
    bool run(const Accept& accept, std::vector<VertexSet>& out) {
        std::function<bool(size_t)> go = [&](size_t i) -> bool {
            if (dl.expired()) {
                timed_out = true;
                return false;
            }
            if (i == verts.size()) {
                std::vector<VertexSet> parts(k);
                for (size_t t = 0; t < verts.size(); ++t) parts[cls[t]].push_back(verts[t]);
                for (auto& p : parts)
                    if (p.empty()) return false;
                if (accept(parts)) {
                    out = parts;
                    return true;
                }
                return false;
            }
            int empty = 0;
            std::vector<bool> used(k, false);
            for (size_t j = 0; j < i; ++j) used[cls[j]] = true;
            for (int c = 0; c < k; ++c)
                if (!used[c]) ++empty;
            if (static_cast<int>(verts.size() - i) < empty) return false;
            int limit = (i == 0) ? 1 : k;  // rotation canonicalization
            for (int c = 0; c < limit; ++c) {
                if (!compatible(i, c)) continue;
                cls[i] = c;
                if (go(i + 1)) return true;
                cls[i] = -1;
                if (timed_out) return false;
            }
            return false;
        };
        return go(0);
    }
};

}  // namespace

Search<std::vector<VertexSet>> is_ring(const Graph& g, Deadline deadline) {
    Search<std::vector<VertexSet>> res;
    const int n = g.vertex_count();
    if (n < 3) {
        res.status = SearchStatus::none;
        return res;
    }
    bool timed_out = false;
    for (int k = 3; k <= n; ++k) {
        CircularAssign ca(g, k, /*near*/ std::nullopt, /*far: anticomplete*/ false, deadline);
        std::vector<VertexSet> parts;
        if (ca.run([&](const std::vector<VertexSet>& p) { return validate_ring_partition(g, p); }, parts)) {
            res.status = SearchStatus::found;
            res.witness = parts;
            return res;
        }
        if (ca.timed_out) timed_out = true;
    }
    res.status = timed_out ? SearchStatus::inconclusive : SearchStatus::none;
    return res;
}

Search<std::vector<VertexSet>> is_7hyperantihole(const Graph& g, Deadline deadline) {
    Search<std::vector<VertexSet>> res;
    if (g.vertex_count() < 7) {
        res.status = SearchStatus::none;
        return res;
    }
    CircularAssign ca(g, 7, /*near: anticomplete*/ false, /*far: complete*/ true, deadline);
    std::vector<VertexSet> parts;
    bool found = ca.run(
        [&](const std::vector<VertexSet>& p) { return validate_7hyperantihole_partition(g, p); }, parts);
    if (found) {
        res.status = SearchStatus::found;
        res.witness = parts;
        return res;
    }
    res.status = ca.timed_out ? SearchStatus::inconclusive : SearchStatus::none;
    return res;
}

}  // namespace holeforge
