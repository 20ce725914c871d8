#include "holeforge/walls.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace holeforge {

WallEdge make_wall_edge(WallCoord a, WallCoord b) {
    return a < b ? WallEdge{a, b} : WallEdge{b, a};
}

namespace {

bool wall_vertex_exists(int n, int m, int i, int j) {
    if (j < 1 || j > 2 * m) return false;
    if (i == 1) return j % 2 == 1 && j <= 2 * m - 1;
    if (i == n) return (n % 2 == 0) ? (j % 2 == 1) : (j % 2 == 0);
    return i > 1 && i < n;
}

std::vector<WallCoord> wall_row_coords(int n, int m, int i) {
    std::vector<WallCoord> row;
    for (int j = 1; j <= 2 * m; ++j)
        if (wall_vertex_exists(n, m, i, j)) row.push_back({i, j});
    return row;
}

// Zigzag coordinates of the j-th vertical path, top to bottom.
std::vector<WallCoord> wall_column_coords(int n, int m, int j) {
    std::vector<WallCoord> col;
    int c = 2 * j - 1;  // row 1 vertex is (1, 2j-1)
    col.push_back({1, c});
    for (int i = 1; i < n; ++i) {
        if ((i % 2) != (c % 2)) {
            // step sideways to the column of matching parity, then down
            c = (c == 2 * j - 1) ? 2 * j : 2 * j - 1;
            col.push_back({i, c});
        }
        col.push_back({i + 1, c});
    }
    return col;
}

}  // namespace

std::vector<WallEdge> elementary_wall_edges(int n, int m) {
    std::vector<WallEdge> es;
    // top row
    for (int j = 1; j <= m - 1; ++j) es.push_back(make_wall_edge({1, 2 * j - 1}, {1, 2 * j + 1}));
    // middle rows
    for (int i = 2; i < n; ++i)
        for (int j = 1; j < 2 * m; ++j) es.push_back(make_wall_edge({i, j}, {i, j + 1}));
    // bottom row
    if (n % 2 == 1)
        for (int j = 1; j < m; ++j) es.push_back(make_wall_edge({n, 2 * j}, {n, 2 * j + 2}));
    else
        for (int j = 1; j < m; ++j) es.push_back(make_wall_edge({n, 2 * j - 1}, {n, 2 * j + 1}));
    // vertical edges: i, j of equal parity
    for (int i = 1; i < n; ++i)
        for (int j = 1; j <= 2 * m; ++j)
            if ((i % 2) == (j % 2) && wall_vertex_exists(n, m, i, j) && wall_vertex_exists(n, m, i + 1, j))
                es.push_back(make_wall_edge({i, j}, {i + 1, j}));
    std::sort(es.begin(), es.end());
    es.erase(std::unique(es.begin(), es.end()), es.end());
    return es;
}

Wall elementary_wall(int n, int m) {
    if (n < 2 || m < 2) throw std::invalid_argument("elementary_wall: n, m must be >= 2");
    Wall w;
    w.rows = n;
    w.cols = m;
    int next = 0;
    for (int i = 1; i <= n; ++i)
        for (auto c : wall_row_coords(n, m, i)) {
            w.coord_to_id[c] = next;
            w.id_to_coord[next] = c;
            w.graph.add_vertex(next);
            w.graph.set_label(next, std::to_string(c.first) + "," + std::to_string(c.second));
            ++next;
        }
    for (auto& [a, b] : elementary_wall_edges(n, m)) w.graph.add_edge(w.coord_to_id[a], w.coord_to_id[b]);
    for (int i = 1; i <= n; ++i) {
        std::vector<int> hp;
        for (auto c : wall_row_coords(n, m, i)) hp.push_back(w.coord_to_id[c]);
        w.horizontal_paths.push_back(std::move(hp));
    }
    for (int j = 1; j <= m; ++j) {
        std::vector<int> vp;
        for (auto c : wall_column_coords(n, m, j)) vp.push_back(w.coord_to_id[c]);
        w.vertical_paths.push_back(std::move(vp));
    }
    for (int v : w.graph.vertices())
        if (w.graph.degree(v) == 3) w.branch_vertices.push_back(v);
    return w;
}

Wall make_wall(int n, int m, const std::map<WallEdge, int>& subdivision) {
    Wall base = elementary_wall(n, m);
    auto known = elementary_wall_edges(n, m);
    for (auto& [e, k] : subdivision) {
        if (!std::binary_search(known.begin(), known.end(), e))
            throw std::invalid_argument("make_wall: unknown elementary-wall edge key");
        if (k < 0) throw std::invalid_argument("make_wall: negative subdivision count");
    }

    Wall w;
    w.rows = n;
    w.cols = m;
    w.graph = base.graph;
    w.coord_to_id = base.coord_to_id;
    w.id_to_coord = base.id_to_coord;

    // chains[(u,v)] with u < v: interior vertices ordered from u to v
    std::map<std::pair<int, int>, std::vector<int>> chains;
    for (auto& e : known) {
        auto it = subdivision.find(e);
        int k = it == subdivision.end() ? 0 : it->second;
        int u = base.coord_to_id[e.first], v = base.coord_to_id[e.second];
        auto key = std::minmax(u, v);
        if (k == 0) {
            chains[{key.first, key.second}] = {};
            continue;
        }
        w.graph.remove_edge(u, v);
        std::vector<int> chain;
        int prev = key.first;
        for (int t = 0; t < k; ++t) {
            int nv = w.graph.fresh_vertex();
            w.graph.add_vertex(nv);
            w.graph.add_edge(prev, nv);
            chain.push_back(nv);
            prev = nv;
        }
        w.graph.add_edge(prev, key.second);
        chains[{key.first, key.second}] = std::move(chain);
    }

    auto expand = [&](const std::vector<int>& path) {
        std::vector<int> out;
        out.push_back(path.front());
        for (size_t t = 0; t + 1 < path.size(); ++t) {
            int u = path[t], v = path[t + 1];
            auto key = std::minmax(u, v);
            auto& chain = chains.at({key.first, key.second});
            if (u < v)
                for (int c : chain) out.push_back(c);
            else
                for (auto it = chain.rbegin(); it != chain.rend(); ++it) out.push_back(*it);
            out.push_back(v);
        }
        return out;
    };
    for (auto& hp : base.horizontal_paths) w.horizontal_paths.push_back(expand(hp));
    for (auto& vp : base.vertical_paths) w.vertical_paths.push_back(expand(vp));
    for (int v : w.graph.vertices())
        if (w.graph.degree(v) == 3) w.branch_vertices.push_back(v);
    return w;
}

NetReplacement net_graph_replacement(const Graph& g, int v) {
    if (!g.has_vertex(v)) throw std::invalid_argument("net_graph_replacement: unknown vertex");
    if (g.degree(v) != 3) throw std::invalid_argument("net_graph_replacement: vertex degree must be 3");
    NetReplacement out;
    auto nbrs = g.neighbors(v);
    out.attach = {nbrs[0], nbrs[1], nbrs[2]};
    out.graph = g;
    out.graph.remove_vertex(v);
    for (int t = 0; t < 3; ++t) {
        int nv = out.graph.fresh_vertex();
        out.graph.add_vertex(nv);
        out.triangle[t] = nv;
    }
    for (int t = 0; t < 3; ++t) {
        out.graph.add_edge(out.triangle[t], out.attach[t]);
        out.graph.add_edge(out.triangle[t], out.triangle[(t + 1) % 3]);
    }
    return out;
}

int StoneWall::triangle_vertex_towards(int rep, int nbr) const {
    auto& tri = triangle.at(rep);
    auto& att = attach.at(rep);
    for (int t = 0; t < 3; ++t)
        if (att[t] == nbr) return tri[t];
    throw std::invalid_argument("triangle_vertex_towards: not an attachment of that replacement");
}

StoneWall make_stone_wall(const Wall& w, const VertexSet& x) {
    for (int v : x)
        if (!set_contains(w.branch_vertices, v))
            throw std::invalid_argument("stone_wall: chosen vertex is not a branch vertex");
    StoneWall sw;
    sw.base = w;
    sw.graph = w.graph;
    sw.replaced = x;
    // In-place replacements; attachments recorded against *base* vertices
    // (owner maps a triangle vertex back to the branch vertex it replaced,
    // so neighboring replacements stay addressable).
    std::unordered_map<int, int> owner;
    for (int v : x) {
        auto nbrs = sw.graph.neighbors(v);  // copy before mutating
        std::array<int, 3> tri{}, att{};
        for (int t = 0; t < 3; ++t) {
            auto it = owner.find(nbrs[t]);
            att[t] = it == owner.end() ? nbrs[t] : it->second;
        }
        sw.graph.remove_vertex(v);
        for (int t = 0; t < 3; ++t) {
            tri[t] = sw.graph.fresh_vertex();
            sw.graph.add_vertex(tri[t]);
            owner[tri[t]] = v;
        }
        for (int t = 0; t < 3; ++t) {
            sw.graph.add_edge(tri[t], nbrs[t]);
            sw.graph.add_edge(tri[t], tri[(t + 1) % 3]);
        }
        sw.triangle[v] = tri;
        sw.attach[v] = att;
    }
    return sw;
}

StoneWall stone_wall(int n, int m, const VertexSet& x) {
    return make_stone_wall(elementary_wall(n, m), x);
}

Wall extract_subwall(const Wall& w, std::vector<int> rows, std::vector<int> cols) {
    std::sort(rows.begin(), rows.end());
    std::sort(cols.begin(), cols.end());
    if (rows.size() < 2 || cols.size() < 2)
        throw std::invalid_argument("extract_subwall: need at least two rows and two columns");
    for (int r : rows)
        if (r < 1 || r > w.rows) throw std::invalid_argument("extract_subwall: row index out of range");
    for (int c : cols)
        if (c < 1 || c > w.cols) throw std::invalid_argument("extract_subwall: column index out of range");

    auto path_set = [](const std::vector<int>& p) { return make_set(std::vector<int>(p.begin(), p.end())); };
    for (size_t a = 0; a < rows.size(); ++a)
        for (size_t b = a + 1; b < rows.size(); ++b)
            if (rows[a] == rows[b] ||
                !anticomplete(w.graph, path_set(w.horizontal_paths[rows[a] - 1]), path_set(w.horizontal_paths[rows[b] - 1])))
                throw std::invalid_argument("extract_subwall: adjacent rows supplied");
    for (size_t a = 0; a < cols.size(); ++a)
        for (size_t b = a + 1; b < cols.size(); ++b)
            if (cols[a] == cols[b] ||
                !anticomplete(w.graph, path_set(w.vertical_paths[cols[a] - 1]), path_set(w.vertical_paths[cols[b] - 1])))
                throw std::invalid_argument("extract_subwall: adjacent columns supplied");

    VertexSet keep;
    for (int r : rows)
        for (int v : w.horizontal_paths[r - 1]) keep.push_back(v);
    for (int c : cols)
        for (int v : w.vertical_paths[c - 1]) keep.push_back(v);
    keep = make_set(std::move(keep));

    Graph h = induced_subgraph(w.graph, keep);
    bool changed = true;
    while (changed) {
        changed = false;
        for (int v : h.vertices())
            if (h.degree(v) <= 1) {
                h.remove_vertex(v);
                changed = true;
                break;
            }
    }

    Wall out;
    out.rows = static_cast<int>(rows.size());
    out.cols = static_cast<int>(cols.size());
    out.graph = h;
    auto kept_run = [&](const std::vector<int>& p) {
        std::vector<int> run;
        for (int v : p)
            if (h.has_vertex(v)) run.push_back(v);
        return run;
    };
    for (int r : rows) out.horizontal_paths.push_back(kept_run(w.horizontal_paths[r - 1]));
    for (int c : cols) out.vertical_paths.push_back(kept_run(w.vertical_paths[c - 1]));
    for (int v : h.vertices())
        if (h.degree(v) == 3) out.branch_vertices.push_back(v);
    return out;
}

// --- recognizers ------------------------------------------------------------

namespace {

// Topological core: branch vertices plus, for every maximal chain of
// degree-2 vertices between branch vertices, one core edge recording the
// chain length. Parallel chains are kept separately.
struct MultiCore {
    std::vector<int> branch;                                    // original ids, sorted
    std::map<std::pair<int, int>, std::vector<int>> chain_lens; // (bi,bj) i<=j -> sorted lengths
    std::map<int, int> index;                                   // id -> position in branch
    std::vector<int> deg;                                       // chain-degree per branch vertex

    int n() const { return static_cast<int>(branch.size()); }
};

std::optional<MultiCore> smooth_to_core(const Graph& g) {
    MultiCore core;
    for (int v : g.vertices()) {
        int d = g.degree(v);
        if (d != 2 && d != 3) return std::nullopt;
        if (d == 3) core.branch.push_back(v);
    }
    if (core.branch.empty()) return std::nullopt;  // pure cycle handled by caller
    for (size_t i = 0; i < core.branch.size(); ++i) core.index[core.branch[i]] = static_cast<int>(i);
    core.deg.assign(core.branch.size(), 0);

    std::set<std::pair<int, int>> walked;  // (branch id, first step) pairs already used
    for (int b : core.branch) {
        for (int first : g.neighbors(b)) {
            if (walked.count({b, first})) continue;
            // walk the chain b - first - ... - b'
            int prev = b, cur = first, len = 1;
            while (g.degree(cur) == 2) {
                int nxt = g.neighbors(cur)[0] == prev ? g.neighbors(cur)[1] : g.neighbors(cur)[0];
                prev = cur;
                cur = nxt;
                ++len;
            }
            if (cur == b && len == 1) return std::nullopt;  // self-loop via direct edge (impossible anyway)
            walked.insert({b, first});
            walked.insert({cur, prev});
            if (cur == b) return std::nullopt;  // chain returning to its start: not a wall shape
            int bi = core.index[b], bj = core.index[cur];
            auto key = std::minmax(bi, bj);
            core.chain_lens[{key.first, key.second}].push_back(len);
            core.deg[bi]++;
            core.deg[bj]++;
        }
    }
    for (auto& [k, lens] : core.chain_lens) std::sort(lens.begin(), lens.end());
    for (int d : core.deg)
        if (d != 3) return std::nullopt;
    return core;
}

// Does a mapping of cores exist under which every candidate chain is at
// least as long as the matching reference chain? (candidate must be a
// subdivision of the reference.)
bool core_dominates(const MultiCore& cand, const MultiCore& ref) {
    if (cand.n() != ref.n()) return false;
    // total chain counts must agree
    size_t ec = 0, er = 0;
    for (auto& [k, v] : cand.chain_lens) ec += v.size();
    for (auto& [k, v] : ref.chain_lens) er += v.size();
    if (ec != er) return false;

    const int n = cand.n();
    std::vector<int> map_cr(n, -1), map_rc(n, -1);

    // adjacency (with multiplicities) as lookup
    auto mult = [](const MultiCore& c, int i, int j) -> const std::vector<int>* {
        auto key = std::minmax(i, j);
        auto it = c.chain_lens.find({key.first, key.second});
        return it == c.chain_lens.end() ? nullptr : &it->second;
    };
    auto compatible_edge = [&](int ci, int cj, int ri, int rj) {
        const auto* lc = mult(cand, ci, cj);
        const auto* lr = mult(ref, ri, rj);
        if ((lc == nullptr) != (lr == nullptr)) return false;
        if (!lc) return true;
        if (lc->size() != lr->size()) return false;
        for (size_t t = 0; t < lc->size(); ++t)
            if ((*lc)[t] < (*lr)[t]) return false;  // both sorted; need domination
        return true;
    };

    // BFS order over the candidate core for connected extension
    std::vector<int> order;
    {
        std::vector<bool> seen(n, false);
        std::vector<int> q{0};
        seen[0] = true;
        while (!q.empty()) {
            int v = q.front();
            q.erase(q.begin());
            order.push_back(v);
            for (auto& [key, lens] : cand.chain_lens) {
                int other = -1;
                if (key.first == v) other = key.second;
                else if (key.second == v) other = key.first;
                if (other >= 0 && !seen[other]) {
                    seen[other] = true;
                    q.push_back(other);
                }
            }
        }
        if (static_cast<int>(order.size()) != n) return false;  // disconnected core
    }

    std::function<bool(size_t)> extend = [&](size_t pos) -> bool {
        if (pos == order.size()) return true;
        int cv = order[pos];
        for (int rv = 0; rv < n; ++rv) {
            if (map_rc[rv] != -1) continue;
            bool ok = true;
            for (int cu = 0; cu < n && ok; ++cu) {
                if (map_cr[cu] == -1 || cu == cv) continue;
                ok = compatible_edge(cv, cu, rv, map_cr[cu]);
            }
            if (!ok) continue;
            map_cr[cv] = rv;
            map_rc[rv] = cv;
            if (extend(pos + 1)) return true;
            map_cr[cv] = -1;
            map_rc[rv] = -1;
        }
        return false;
    };
    return extend(0);
}

int wall_branch_count(int n, int m) {
    if (n == 2) return 2 * (m - 2);
    return 2 * (m - 2) + (n - 2) * (2 * m - 2);
}

bool is_plain_cycle(const Graph& g, int min_len) {
    if (!is_connected(g) || g.vertex_count() < min_len) return false;
    for (int v : g.vertices())
        if (g.degree(v) != 2) return false;
    return g.edge_count() == g.vertex_count();
}

}  // namespace

bool recognize_wall_as(const Graph& g, int n, int m) {
    if (n < 2 || m < 2) return false;
    if (g.vertex_count() == 0 || !is_connected(g)) return false;
    if (n == 2 && m == 2) return is_plain_cycle(g, 4);
    auto core = smooth_to_core(g);
    if (!core || core->n() != wall_branch_count(n, m)) return false;
    auto ref_core = smooth_to_core(elementary_wall(n, m).graph);
    return ref_core && core_dominates(*core, *ref_core);
}

std::optional<std::pair<int, int>> recognize_wall(const Graph& g) {
    if (g.vertex_count() == 0 || !is_connected(g)) return std::nullopt;
    if (is_plain_cycle(g, 4)) return std::make_pair(2, 2);
    auto core = smooth_to_core(g);
    if (!core) return std::nullopt;

    int b = core->n();
    int cap = b + 4;
    std::optional<std::pair<int, int>> best;
    auto better = [](std::pair<int, int> a, std::pair<int, int> b2) {
        auto key = [](std::pair<int, int> p) {
            return std::tuple(std::min(p.first, p.second), p.first * p.second, p.first);
        };
        return key(a) > key(b2);
    };
    for (int n = 2; n <= cap; ++n)
        for (int m = 2; m <= cap; ++m) {
            if (n == 2 && m == 2) continue;
            if (wall_branch_count(n, m) != b) continue;
            Wall ref = elementary_wall(n, m);
            auto ref_core = smooth_to_core(ref.graph);
            if (!ref_core) continue;
            if (core_dominates(*core, *ref_core)) {
                std::pair<int, int> dims{n, m};
                if (!best || better(dims, *best)) best = dims;
            }
        }
    return best;
}

std::optional<StoneWallShape> recognize_stone_wall(const Graph& g) {
    if (g.vertex_count() == 0 || !is_connected(g)) return std::nullopt;
    for (int v : g.vertices()) {
        int d = g.degree(v);
        if (d != 2 && d != 3) return std::nullopt;
    }
    // collect triangles
    std::vector<std::array<int, 3>> tris;
    for (int u : g.vertices())
        for (int v : g.neighbors(u)) {
            if (v < u) continue;
            for (int w : g.neighbors(v)) {
                if (w < v) continue;
                if (g.has_edge(u, w)) tris.push_back({u, v, w});
            }
        }
    // triangles must be pairwise vertex-disjoint net triangles
    std::set<int> in_tri;
    for (auto& t : tris)
        for (int v : t) {
            if (in_tri.count(v)) return std::nullopt;
            in_tri.insert(v);
        }
    Graph h = g;
    for (auto& t : tris) {
        for (int v : t)
            if (h.degree(v) != 3) return std::nullopt;
        VertexSet s = make_set({t[0], t[1], t[2]});
        int keep = s[0];
        h = contract_set(h, s, keep);
        if (h.degree(keep) != 3) return std::nullopt;  // attachments collided
    }
    std::optional<std::pair<int, int>> dims = recognize_wall(h);
    if (!dims) return std::nullopt;
    StoneWallShape shape;
    shape.rows = dims->first;
    shape.cols = dims->second;
    shape.replaced = static_cast<int>(tris.size());
    int threes = 0;
    for (int v : h.vertices())
        if (h.degree(v) == 3) ++threes;
    shape.branch_total = threes;
    return shape;
}

bool is_homogeneous_stone_wall(const Graph& g) {
    auto s = recognize_stone_wall(g);
    return s && s->homogeneous();
}

}  // namespace holeforge
