#include "holeforge/extraction.hpp"

#include <map>
#include <set>

#include "holeforge/detectors.hpp"
#include "holeforge/generators.hpp"

namespace holeforge {

std::vector<std::string> septuple_violations(const Graph& g, const SeptuplePartition& p) {
    std::vector<std::string> out;
    const std::vector<std::pair<const VertexSet*, const char*>> sets = {
        {&p.A, "A"}, {&p.A2, "A'"}, {&p.B, "B"}, {&p.B2, "B'"},
        {&p.C, "C"}, {&p.C2, "C'"}, {&p.S, "S"}};
    VertexSet all;
    for (auto [s, name] : sets) {
        if (s->empty()) out.push_back(std::string(name) + " is empty");
        for (int v : *s) {
            if (!g.has_vertex(v)) out.push_back(std::string(name) + " contains an unknown vertex");
            all.push_back(v);
        }
        if (!s->empty() && !is_connected(induced_subgraph(g, *s)))
            out.push_back(std::string(name) + " is not connected");
    }
    VertexSet uniq = make_set(std::vector<int>(all.begin(), all.end()));
    if (uniq.size() != all.size()) out.push_back("sets are not disjoint");
    if (!out.empty()) return out;
    if (!is_connected(induced_subgraph(g, uniq))) out.push_back("union is not connected");
    if (!set_contains(p.A2, p.a)) out.push_back("a is not in A'");
    if (!set_contains(p.B2, p.b)) out.push_back("b is not in B'");
    if (!set_contains(p.C2, p.c)) out.push_back("c is not in C'");
    // edge pattern: within one set, or A'-A, B'-B, C'-C, S-(A u B u C)
    auto side_of = [&](int v) -> int {
        for (size_t i = 0; i < sets.size(); ++i)
            if (set_contains(*sets[i].first, v)) return static_cast<int>(i);
        return -1;
    };
    // indices: 0=A 1=A' 2=B 3=B' 4=C 5=C' 6=S
    auto allowed = [](int x, int y) {
        if (x == y) return true;
        auto pr = std::minmax(x, y);
        if (pr == std::pair{0, 1} || pr == std::pair{2, 3} || pr == std::pair{4, 5}) return true;
        if (pr.second == 6 && (pr.first == 0 || pr.first == 2 || pr.first == 4)) return true;
        return false;
    };
    for (int v : uniq)
        for (int w : g.neighbors(v)) {
            if (w < v || !set_contains(uniq, w)) continue;
            if (!allowed(side_of(v), side_of(w))) {
                out.push_back("edge " + std::to_string(v) + "-" + std::to_string(w) +
                              " violates the edge pattern");
            }
        }
    return out;
}

ForkWitness find_fork_or_semifork(const Graph& g, const SeptuplePartition& p) {
    auto bad = septuple_violations(g, p);
    if (!bad.empty()) throw std::invalid_argument("find_fork_or_semifork: " + bad.front());

    Graph bc_side = induced_subgraph(g, set_union(set_union(p.B2, p.B), set_union(p.S, set_union(p.C, p.C2))));
    std::vector<int> path_p = shortest_path(bc_side, p.b, p.c);
    if (path_p.empty()) throw std::logic_error("find_fork_or_semifork: no b-c path");

    // shortest a .. w in G[A' u A u S] with w having a neighbor on P
    Graph a_side = induced_subgraph(g, set_union(set_union(p.A2, p.A), p.S));
    VertexSet pset = make_set(std::vector<int>(path_p.begin(), path_p.end()));
    VertexSet targets;
    for (int v : a_side.vertices())
        for (int nb : g.neighbors(v))
            if (set_contains(pset, nb)) {
                targets.push_back(v);
                break;
            }
    targets = make_set(std::move(targets));
    std::vector<int> path_q = shortest_path_to_set(a_side, p.a, targets);
    if (path_q.empty()) throw std::logic_error("find_fork_or_semifork: no a-side path reaching P");
    int w = path_q.back();

    int iu = -1, iv = -1;  // positions on P of w's neighbors closest to b resp. c
    for (size_t i = 0; i < path_p.size(); ++i)
        if (g.has_edge(w, path_p[i])) {
            if (iu == -1) iu = static_cast<int>(i);
            iv = static_cast<int>(i);
        }
    int u = path_p[iu], v = path_p[iv];

    ForkWitness out;
    out.tips = {p.a, p.b, p.c};
    VertexSet verts(path_q.begin(), path_q.end());
    if (u == v) {
        // P and Q form a fork with center u
        for (int x : path_p) verts.push_back(x);
        out.center = u;
    } else if (g.has_edge(u, v)) {
        // triangle w,u,v: a semi-fork
        out.semi = true;
        out.triangle = {w, u, v};
        for (int i = 0; i <= iu; ++i) verts.push_back(path_p[i]);
        for (size_t i = iv; i < path_p.size(); ++i) verts.push_back(path_p[i]);
    } else {
        // fork with center w; the middle of P between u and v is dropped
        out.center = w;
        for (int i = 0; i <= iu; ++i) verts.push_back(path_p[i]);
        for (size_t i = iv; i < path_p.size(); ++i) verts.push_back(path_p[i]);
    }
    out.vertices = make_set(std::move(verts));
    if (!validate_fork_witness(g, out))
        throw std::logic_error("find_fork_or_semifork: construction is not an induced fork/semi-fork");
    return out;
}

bool validate_fork_witness(const Graph& g, const ForkWitness& w) {
    Graph sub = induced_subgraph(g, w.vertices);
    if (!is_connected(sub)) return false;
    VertexSet ones;
    for (int v : sub.vertices()) {
        int d = sub.degree(v);
        if (d < 1 || d > 3) return false;
        if (d == 1) ones.push_back(v);
    }
    if (ones != make_set({w.tips[0], w.tips[1], w.tips[2]})) return false;
    int n = sub.vertex_count(), m = sub.edge_count();
    if (!w.semi) return m == n - 1;  // tree with exactly three leaves
    if (m != n) return false;        // one cycle...
    // ...and it is a triangle on the recorded vertices
    for (int i = 0; i < 3; ++i)
        if (!sub.has_edge(w.triangle[i], w.triangle[(i + 1) % 3])) return false;
    return true;
}

// ---------------------------------------------------------------------------
// The induced-grid-theorem pipeline.

namespace {

using Cell = std::pair<int, int>;  // trigrid coordinate, 1-based

struct Assembly {
    const Graph* g;
    int k = 0;
    std::map<Cell, VertexSet> blob;

    const VertexSet& blob_of(Cell c) const {
        auto it = blob.find(c);
        if (it == blob.end()) throw std::logic_error("assembly: empty blob");
        return it->second;
    }
    VertexSet blobs_of(const std::vector<Cell>& cells) const {
        VertexSet out;
        for (auto c : cells)
            for (int v : blob_of(c)) out.push_back(v);
        return make_set(std::move(out));
    }
};

// local cells of the two fork units (rows/cols 1..4 inside a block)
struct Unit {
    Cell Ap, A, S, B, Bp, C, Cp;  // p = prime
};
const Unit kDown{{2, 1}, {2, 1}, {2, 2}, {1, 3}, {1, 4}, {3, 2}, {4, 1}};
// note: A' of the down unit is (1,1); fixed below (Ap and A differ)
const Unit kDownUnit{{1, 1}, {2, 1}, {2, 2}, {1, 3}, {1, 4}, {3, 2}, {4, 1}};
const Unit kUpUnit{{4, 4}, {3, 4}, {3, 3}, {4, 2}, {4, 1}, {2, 3}, {1, 4}};

enum class Arm { left, right, vertical };

struct VertexPiece {
    bool is_down = true;  // vertical arm points down (up otherwise)
    Cell origin;          // T-coordinate of the block's (1,1) minus (1,1)
    bool junction = false;
    std::vector<Arm> arms;
    std::map<Arm, int> tip;  // prescribed tip vertices (filled from connectors)
};

Cell local_to_t(Cell origin, Cell local) { return {origin.first + local.first, origin.second + local.second}; }

Cell tip_cell(const VertexPiece& p, Arm a) {
    const Unit& u = p.is_down ? kDownUnit : kUpUnit;
    Cell local;
    if (a == Arm::vertical) local = u.Cp;
    else if (p.is_down) local = (a == Arm::left) ? u.Ap : u.Bp;
    else local = (a == Arm::left) ? u.Bp : u.Ap;
    return local_to_t(p.origin, local);
}

// deterministic multi-source shortest path between two blobs through a
// corridor of cells; returns empty when unreachable
std::vector<int> lift_corridor(const Assembly& as, const VertexSet& from_blob, const VertexSet& to_blob,
                               const std::vector<Cell>& corridor) {
    VertexSet window = set_union(set_union(from_blob, to_blob), as.blobs_of(corridor));
    Graph sub = induced_subgraph(*as.g, window);
    // multi-source BFS: attach a virtual start by scanning layers
    std::map<int, int> par;
    std::vector<int> q;
    for (int v : from_blob)
        if (sub.has_vertex(v)) {
            par[v] = v;
            q.push_back(v);
        }
    int hit = -1;
    for (int v : q)
        if (set_contains(to_blob, v)) hit = v;
    size_t head = 0;
    while (head < q.size() && hit == -1) {
        int v = q[head++];
        for (int w : sub.neighbors(v)) {
            if (par.count(w)) continue;
            par[w] = v;
            if (set_contains(to_blob, w)) {
                hit = w;
                break;
            }
            q.push_back(w);
        }
    }
    if (hit == -1) return {};
    std::vector<int> path{hit};
    while (par[path.back()] != path.back()) path.push_back(par[path.back()]);
    std::reverse(path.begin(), path.end());
    return path;
}

// straight/L-shaped corridor between two T-cells, excluding both endpoints
std::vector<Cell> l_corridor(Cell from, Cell to) {
    std::vector<Cell> cells;
    int r = from.first, c = from.second;
    // horizontal first, then vertical on the column just before the target
    int cstop = to.second + (to.second > c ? -1 : (to.second < c ? 1 : 0));
    while (c != cstop) {
        c += (cstop > c) ? 1 : -1;
        cells.push_back({r, c});
    }
    while (r != to.first) {
        r += (to.first > r) ? 1 : -1;
        if (r == to.first && c == to.second) break;
        cells.push_back({r, c});
    }
    // the cell straight before `to` on its row, if we stopped a column early
    if (c != to.second && r == to.first) cells.push_back({r, to.second > c ? to.second - 1 : to.second + 1});
    // dedupe, drop endpoints if present
    std::vector<Cell> out;
    for (auto cc : cells)
        if (cc != from && cc != to && (out.empty() || out.back() != cc)) out.push_back(cc);
    return out;
}

// structure under assembly: vertex set + intended edges
struct Woven {
    std::set<int> verts;
    std::set<std::pair<int, int>> edges;

    void add_path(const std::vector<int>& p) {
        for (int v : p) verts.insert(v);
        for (size_t i = 0; i + 1 < p.size(); ++i) edges.insert(std::minmax(p[i], p[i + 1]));
    }
    void add_graph(const Graph& g) {
        for (int v : g.vertices()) verts.insert(v);
        for (auto e : g.edges()) edges.insert(std::minmax(e.first, e.second));
    }
    Graph to_graph() const {
        Graph s;
        for (int v : verts) s.add_vertex(v);
        for (auto [a, b] : edges) s.add_edge(a, b);
        return s;
    }
};

// re-extract every maximal degree-2 strand as a shortest path within its
// own vertex set, eliminating chords between separately built pieces
Graph polish(const Graph& g, Graph s) {
    for (bool changed = true; changed;) {
        changed = false;
        VertexSet anchors;
        for (int v : s.vertices())
            if (s.degree(v) != 2) anchors.push_back(v);
        std::set<std::pair<int, int>> visited;  // (anchor, first step)
        for (int a : anchors) {
            for (int first : s.neighbors(a)) {
                if (visited.count({a, first})) continue;
                std::vector<int> strand{a, first};
                int prev = a, cur = first;
                while (s.degree(cur) == 2) {
                    int nxt = s.neighbors(cur)[0] == prev ? s.neighbors(cur)[1] : s.neighbors(cur)[0];
                    prev = cur;
                    cur = nxt;
                    strand.push_back(cur);
                }
                visited.insert({a, first});
                visited.insert({cur, prev});
                if (cur == a) continue;  // cycle strand; leave alone
                VertexSet sv = make_set(std::vector<int>(strand.begin(), strand.end()));
                Graph local = induced_subgraph(g, sv);
                auto better = shortest_path(local, a, cur);
                if (better.size() < strand.size()) {
                    for (size_t i = 1; i + 1 < strand.size(); ++i) s.remove_vertex(strand[i]);
                    for (size_t i = 0; i + 1 < better.size(); ++i) {
                        s.add_vertex(better[i]);
                        s.add_vertex(better[i + 1]);
                        s.add_edge(better[i], better[i + 1]);
                    }
                    changed = true;
                }
            }
            if (changed) break;
        }
    }
    return s;
}

ExtractedStoneWall fallback_hole(const Assembly& as) {
    // ring of cells around (2,2): its blob union cannot be chordal, so it
    // contains a hole, which is a (2x2)-stone-wall
    std::vector<Cell> ring{{1, 1}, {1, 2}, {1, 3}, {2, 3}, {3, 3}, {3, 2}, {3, 1}, {2, 1}};
    Graph sub = induced_subgraph(*as.g, as.blobs_of(ring));
    auto hole = find_hole(sub);
    if (!hole.found()) throw std::logic_error("extract: fallback hole not found");
    VertexSet verts = make_set(std::vector<int>(hole.witness->cycle.begin(), hole.witness->cycle.end()));
    ExtractedStoneWall out;
    out.vertices = verts;
    out.induced = induced_subgraph(*as.g, verts);
    auto shape = recognize_stone_wall(out.induced);
    if (!shape) throw std::logic_error("extract: fallback hole is not a stone wall");
    out.shape = *shape;
    return out;
}

}  // namespace

ExtractedStoneWall extract_induced_stone_wall(const Graph& g, const ContractionMap& phi, int k, int h) {
    if (h < 1) throw std::invalid_argument("extract_induced_stone_wall: h >= 1");
    if (k < 8 * h) throw std::invalid_argument("extract_induced_stone_wall: k >= 8h required");
    Graph tri = triangulated_grid(k, k);
    if (!verify_contraction_map(g, tri, phi))
        throw std::invalid_argument("extract_induced_stone_wall: invalid contraction witness");

    Assembly as;
    as.g = &g;
    as.k = k;
    for (auto& [v, cell_id] : phi) {
        int i = cell_id / k + 1, j = cell_id % k + 1;
        as.blob[{i, j}].push_back(v);
    }
    for (auto& [c, vs] : as.blob) vs = make_set(std::vector<int>(vs.begin(), vs.end()));

    const int nb = k / 4;               // 4x4 blocks per side
    const int R = (nb + 1) / 2;         // used block rows / columns (every second)
    const int M = R / 2;                // columns of the assembled wall
    if (R < 4 || M < 2) return fallback_hole(as);

    // target pattern: the elementary (R x M)-wall drawn on the used blocks;
    // wall vertex (I,P) lives in block (2I-1, 2P-1)
    auto origin_of = [&](int I, int P) -> Cell { return {8 * (I - 1), 8 * (P - 1)}; };

    Wall pattern = elementary_wall(R, M);
    std::map<Cell, VertexPiece> pieces;  // keyed by (I,P)
    for (auto& [coord, id] : pattern.coord_to_id) {
        auto [I, P] = coord;
        VertexPiece piece;
        piece.origin = origin_of(I, P);
        for (int nbv : pattern.graph.neighbors(id)) {
            auto [I2, P2] = pattern.id_to_coord.at(nbv);
            if (I2 == I)
                piece.arms.push_back(P2 < P ? Arm::left : Arm::right);
            else {
                piece.arms.push_back(Arm::vertical);
                piece.is_down = I2 > I;
            }
        }
        piece.junction = piece.arms.size() == 3;
        pieces[coord] = piece;
    }

    // connectors first: each wall edge becomes a corridor path whose
    // endpoints become the prescribed tips of the adjacent pieces
    Woven woven;
    for (auto [e1, e2] : pattern.graph.edges()) {
        Cell c1 = pattern.id_to_coord.at(e1), c2 = pattern.id_to_coord.at(e2);
        if (c2 < c1) std::swap(c1, c2);
        VertexPiece& p1 = pieces[c1];
        VertexPiece& p2 = pieces[c2];
        Arm a1, a2;
        if (c1.first == c2.first) {
            a1 = Arm::right;
            a2 = Arm::left;
        } else {
            a1 = Arm::vertical;  // c1 above c2
            a2 = Arm::vertical;
        }
        Cell t1 = tip_cell(p1, a1), t2 = tip_cell(p2, a2);
        auto corridor = l_corridor(t1, t2);
        auto path = lift_corridor(as, as.blob_of(t1), as.blob_of(t2), corridor);
        if (path.empty()) throw std::logic_error("extract: connector corridor has no path");
        woven.add_path(path);
        p1.tip[a1] = path.front();
        p2.tip[a2] = path.back();
    }

    // now the vertex pieces
    for (auto& [coord, piece] : pieces) {
        const Unit& u = piece.is_down ? kDownUnit : kUpUnit;
        auto bl = [&](Cell local) { return as.blob_of(local_to_t(piece.origin, local)); };
        if (piece.junction) {
            SeptuplePartition sp;
            sp.A = bl(u.A);
            sp.A2 = bl(u.Ap);
            sp.B = bl(u.B);
            sp.B2 = bl(u.Bp);
            sp.C = bl(u.C);
            sp.C2 = bl(u.Cp);
            sp.S = bl(u.S);
            // arm names: down unit has A' left, B' right; up unit B' left, A' right
            sp.a = piece.tip.at(piece.is_down ? Arm::left : Arm::right);
            sp.b = piece.tip.at(piece.is_down ? Arm::right : Arm::left);
            sp.c = piece.tip.at(Arm::vertical);
            Graph host = induced_subgraph(g, make_set(set_union(
                set_union(set_union(sp.A, sp.A2), set_union(sp.B, sp.B2)),
                set_union(set_union(sp.C, sp.C2), sp.S))));
            ForkWitness fw = find_fork_or_semifork(host, sp);
            woven.add_graph(induced_subgraph(g, fw.vertices));
        } else {
            // bend: route between the two prescribed tips through the
            // unit's chain of cells
            std::vector<Cell> chain;
            bool has_left = piece.tip.count(Arm::left), has_right = piece.tip.count(Arm::right);
            if (piece.is_down) {
                if (has_left) chain = {u.Ap, u.A, u.S, u.C, u.Cp};
                else chain = {u.Bp, u.B, u.S, u.C, u.Cp};
            } else {
                if (has_left) chain = {u.Bp, u.B, u.S, u.C, u.Cp};
                else chain = {u.Ap, u.A, u.S, u.C, u.Cp};
            }
            std::vector<Cell> cells;
            for (auto lc : chain) cells.push_back(local_to_t(piece.origin, lc));
            int from = piece.tip.at(has_left ? Arm::left : Arm::right);
            int to = piece.tip.at(Arm::vertical);
            VertexSet window = as.blobs_of(cells);
            Graph sub = induced_subgraph(g, window);
            auto path = shortest_path(sub, from, to);
            if (path.empty()) throw std::logic_error("extract: bend has no path");
            woven.add_path(path);
            (void)has_right;
        }
    }

    Graph structure = polish(g, woven.to_graph());
    VertexSet verts = structure.vertices();
    Graph induced = induced_subgraph(g, verts);
    if (induced != structure)
        throw std::logic_error("extract: assembled structure is not induced");
    auto shape = recognize_stone_wall(induced);
    if (!shape) throw std::logic_error("extract: assembled structure is not a stone wall");
    ExtractedStoneWall out;
    out.vertices = verts;
    out.induced = std::move(induced);
    out.shape = *shape;
    return out;
}

}  // namespace holeforge
