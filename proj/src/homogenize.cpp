#include "holeforge/homogenize.hpp"

#include <cmath>
#include <set>

namespace holeforge {

namespace {

// Crossing of interior wall row i with wall column j: the two base branch
// vertices (i, 2j-1) and (i, 2j).
struct Crossings {
    const StoneWall* sw;
    int n, m;

    int id(int i, int jc) const { return sw->base.id_at({i, jc}); }
    int left(int i, int j) const { return id(i, 2 * j - 1); }
    int right(int i, int j) const { return id(i, 2 * j); }
    bool red(int v) const { return set_contains(sw->replaced, v); }

    int color(int i, int j) const {
        bool lr = red(left(i, j)), rr = red(right(i, j));
        if (!lr && !rr) return 0;  // green
        if (lr && rr) return 1;    // red
        return !lr ? 2 : 3;        // white: green before red; black: reverse
    }
};

}  // namespace

BipartiteColoring crossing_coloring(const StoneWall& w) {
    if (static_cast<int>(w.base.id_to_coord.size()) != w.base.graph.vertex_count())
        throw std::invalid_argument("crossing_coloring: stone wall base lacks coordinates");
    Crossings cx{&w, w.base.rows, w.base.cols};
    int rows = w.base.rows - 2, cols = w.base.cols - 2;
    if (rows < 1 || cols < 1) throw std::invalid_argument("crossing_coloring: wall too small");
    BipartiteColoring col = BipartiteColoring::uniform(rows, cols, 4);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) col.at(i, j) = cx.color(i + 2, j + 2);
    return col;
}

long long ramsey_guarantee_size(int r) {
    // single application of the majority-color argument with the
    // Kovari-Sos-Turan bound: 2 * 4^t (t-1) + 1 rows/columns force a
    // monochromatic K_{t,t} in any 4-coloring (checked numerically in the
    // tests), t = 6(r+1) covering both extraction routes; doubled again
    // for the odd-rows-only host.
    int t = 6 * (r + 1);
    long long base = 1;
    for (int i = 0; i < t && base < (1ll << 54); ++i) base *= 4;
    return 2 * (2 * base * (t - 1) + 1) + 3;
}

int required_size(int r) {
    if (r < 2) throw std::invalid_argument("required_size: r >= 2");
    const int t = 2 * r - 1;
    // smallest n with C(n-2, t)^2 >= 16 * 4^(t^2)
    auto log_choose = [](int n, int k) {
        return std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0);
    };
    double target = std::log(16.0) + t * static_cast<double>(t) * std::log(4.0);
    int n = t + 3;
    while (2.0 * log_choose(n - 2, t) < target) ++n;
    int n_wb = 2 * 6 * (r + 1) + 3;  // room for the white/black surgery host
    return std::max({n, n_wb, 2 * r + 2});
}

namespace {

// ---------------------------------------------------------------------------
// Structure assembly: a set of base-wall vertices and intended edges.
struct Structure {
    std::set<int> verts;
    std::set<std::pair<int, int>> edges;

    void add_path(const std::vector<int>& p) {
        for (int v : p) verts.insert(v);
        for (size_t i = 0; i + 1 < p.size(); ++i) edges.insert(std::minmax(p[i], p[i + 1]));
    }
    std::map<int, VertexSet> used_neighbors() const {
        std::map<int, VertexSet> nb;
        for (auto [a, b] : edges) {
            nb[a].push_back(b);
            nb[b].push_back(a);
        }
        for (auto& [v, s] : nb) s = make_set(std::vector<int>(s.begin(), s.end()));
        return nb;
    }
};

// BFS path in the base wall restricted to a coordinate window, avoiding
// previously used vertices and their neighborhoods (except the endpoints).
std::vector<int> corridor_path(const StoneWall& sw, int from, int to, int row_lo, int row_hi,
                               int col_lo, int col_hi, const std::set<int>& exclude,
                               const Structure& used) {
    const Graph& g = sw.base.graph;
    VertexSet prior;
    for (int v : used.verts)
        if (v != from && v != to) prior.push_back(v);
    VertexSet blocked = set_union(prior, open_neighborhood(g, prior));
    auto allowed = [&](int v) {
        if (v == from || v == to) return true;
        if (exclude.count(v) || set_contains(blocked, v)) return false;
        auto c = sw.base.id_to_coord.at(v);
        return c.first >= row_lo && c.first <= row_hi && c.second >= col_lo && c.second <= col_hi;
    };
    VertexSet window;
    for (int v : g.vertices())
        if (allowed(v)) window.push_back(v);
    Graph sub = induced_subgraph(g, window);
    if (!sub.has_vertex(from) || !sub.has_vertex(to)) return {};
    return shortest_path(sub, from, to);
}

// ---------------------------------------------------------------------------
// Lift a base-level structure into the stone wall: green vertices map to
// themselves, red degree-2 vertices to the two triangle vertices towards
// their used neighbors, red degree-3 vertices to the full triangle.
struct Lifted {
    VertexSet vertices;
    Graph expected;  // on stone-wall ids
};

Lifted lift_structure(const StoneWall& sw, const Structure& st) {
    Lifted out;
    auto nb = st.used_neighbors();
    auto is_red = [&](int v) { return set_contains(sw.replaced, v); };
    // port(a, b): the stone-wall vertex of a facing base-neighbor b
    auto port = [&](int a, int b) { return is_red(a) ? sw.triangle_vertex_towards(a, b) : a; };

    for (int v : st.verts) {
        if (!is_red(v)) {
            out.expected.add_vertex(v);
            continue;
        }
        auto& ns = nb.at(v);
        if (ns.size() < 2 || ns.size() > 3) throw std::logic_error("lift: red vertex with bad degree");
        std::vector<int> tri;
        for (int w : ns) tri.push_back(sw.triangle_vertex_towards(v, w));
        for (int tv : tri) out.expected.add_vertex(tv);
        for (size_t i = 0; i < tri.size(); ++i)
            for (size_t j = i + 1; j < tri.size(); ++j) out.expected.add_edge(tri[i], tri[j]);
    }
    for (auto [a, b] : st.edges) out.expected.add_edge(port(a, b), port(b, a));
    out.vertices = out.expected.vertices();
    return out;
}

HomogeneousExtraction finish(const StoneWall& sw, const Structure& st, bool want_wall, int rows,
                             int cols) {
    Lifted lifted = lift_structure(sw, st);
    Graph induced = induced_subgraph(sw.graph, lifted.vertices);
    if (induced != lifted.expected)
        throw std::logic_error("homogenize: extracted set is not induced as intended");
    auto shape = recognize_stone_wall(induced);
    if (!shape || !shape->homogeneous())
        throw std::logic_error("homogenize: extraction is not a homogeneous stone wall");
    // a wall extraction must never contain triangles; the red extraction
    // degenerates to a plain (2x2)-wall when it has no branch vertices,
    // which counts as homogeneous either way
    if (want_wall && shape->replaced != 0)
        throw std::logic_error("homogenize: extraction has the wrong homogeneous kind");
    HomogeneousExtraction out;
    out.vertices = lifted.vertices;
    out.induced = std::move(induced);
    out.is_wall = shape->replaced == 0;
    out.rows = rows;
    out.cols = cols;
    out.shape = *shape;
    return out;
}

// Thin a sorted list to elements pairwise >= gap apart.
std::vector<int> thin(const std::vector<int>& xs, int gap, int want) {
    std::vector<int> out;
    for (int x : xs) {
        if (!out.empty() && x - out.back() < gap) continue;
        out.push_back(x);
        if (static_cast<int>(out.size()) == want) break;
    }
    return out;
}

// ---------------------------------------------------------------------------
// Green / red case: pairwise non-adjacent rows and columns of the biclique,
// then the subwall of the tidying lemma.
std::optional<HomogeneousExtraction> extract_green_red(const StoneWall& sw, int r, bool green,
                                                       const MonoBiclique& bic) {
    std::vector<int> rows, cols;
    for (int i : bic.rows) rows.push_back(i + 2);  // host row -> wall row
    for (int j : bic.cols) cols.push_back(j + 2);
    rows = thin(rows, 2, r);
    cols = thin(cols, 2, r);
    if (static_cast<int>(rows.size()) < r || static_cast<int>(cols.size()) < r) return std::nullopt;

    Wall sub = extract_subwall(sw.base, rows, cols);
    Structure st;
    for (auto [a, b] : sub.graph.edges()) st.add_path({a, b});
    // sanity: the subwall's branch vertices are the chosen crossings
    for (int v : sub.branch_vertices)
        if (set_contains(sw.replaced, v) == green)
            throw std::logic_error("extract_green_red: crossing color mismatch");
    return finish(sw, st, /*want_wall*/ green, static_cast<int>(rows.size()),
                  static_cast<int>(cols.size()));
}

// ---------------------------------------------------------------------------
// White / black case: rerouting surgery. sigma = +1 for white (intact
// vertex on the left of each kept crossing), -1 for black (mirrored).
//
// Kept rows all have the parity that puts the downward rung edge at the
// intact vertex (odd for white, even for black); they are consumed in
// pairs (R top, R' bottom). Each vertical strand descends its column,
// swerving around the crossing entry so that the path enters the top
// intact vertex sideways; the horizontal strand of a row pair climbs each
// rung and travels right (white; left for black) through the freed
// replaced vertex.
struct SurgeryFrame {
    const StoneWall* sw;
    int sigma;

    int green_col(int q) const { return sigma > 0 ? 2 * q - 1 : 2 * q; }
    int red_col(int q) const { return sigma > 0 ? 2 * q : 2 * q - 1; }
    int green(int row, int q) const { return sw->base.id_at({row, green_col(q)}); }
    int red(int row, int q) const { return sw->base.id_at({row, red_col(q)}); }
    int detour_col(int q) const { return q - sigma; }
};

std::optional<HomogeneousExtraction> extract_white_black(const StoneWall& sw, int r, int sigma,
                                                         const MonoBiclique& bic, int host_parity) {
    const int m = sw.base.cols;
    SurgeryFrame fr{&sw, sigma};

    // wall rows of the biclique (host restricted to rows of host_parity)
    std::vector<int> rows;
    for (int i : bic.rows) {
        int wall_row = 2 * i + (host_parity == 1 ? 3 : 2);
        rows.push_back(wall_row);
    }
    std::vector<int> cols;
    for (int j : bic.cols) cols.push_back(j + 2);

    // row pairs (R, R'), inter-pair gap >= 3
    std::vector<std::pair<int, int>> pairs;
    size_t i = 0;
    while (i + 1 < rows.size() && static_cast<int>(pairs.size()) < r + 1) {
        if (!pairs.empty() && rows[i] < pairs.back().second + 3) {
            ++i;
            continue;
        }
        pairs.push_back({rows[i], rows[i + 1]});
        i += 2;
    }
    // detour room above each pair
    std::vector<std::pair<int, int>> ok_pairs;
    for (auto [a, b] : pairs)
        if (a >= 4) ok_pairs.push_back({a, b});
    pairs = ok_pairs;

    std::vector<int> kept_cols = thin(cols, 6, r + 1);
    // detour columns must exist inside the wall
    std::vector<int> final_cols;
    for (int q : kept_cols)
        if (fr.detour_col(q) >= 1 && fr.detour_col(q) <= m) final_cols.push_back(q);
    kept_cols = final_cols;
    if (sigma < 0) std::reverse(kept_cols.begin(), kept_cols.end());  // travel direction

    const int p = static_cast<int>(pairs.size());
    const int q = static_cast<int>(kept_cols.size());
    if (p < r || q < r) return std::nullopt;

    const int n = sw.base.rows;
    Structure st;
    auto col_window = [&](int qa, int qb) {  // base column span of wall columns qa..qb
        int lo = std::min(2 * qa - 1, 2 * qb - 1), hi = std::max(2 * qa, 2 * qb);
        return std::pair{lo, hi};
    };

    // Vertical strands. The first and last row pairs share a single vertex
    // with each horizontal strand (like the boundary rows of an elementary
    // wall); interior pairs share the whole rung.
    for (int j = 0; j < q; ++j) {
        int Q = kept_cols[j];
        for (int t = 0; t < p; ++t) {
            auto [R, R2] = pairs[t];
            int v = fr.green(R, Q), w = fr.green(R2, Q), u = fr.red(R, Q);
            if (t > 0) {
                // approach from the previous pair's bottom, swerving around
                // the crossing entry via the detour column
                auto [Rp, Rp2] = pairs[t - 1];
                auto [clo, chi] = col_window(fr.detour_col(Q), Q);
                auto path = corridor_path(sw, fr.green(Rp2, Q), v, Rp2, R, clo, chi, {u}, st);
                if (path.empty()) return std::nullopt;
                st.add_path(path);
            }
            auto [clo, chi] = col_window(Q, Q);
            auto rung = corridor_path(sw, v, w, R, R2, clo, chi, {u}, st);
            if (rung.empty()) return std::nullopt;
            st.add_path(rung);
        }
    }
    // Horizontal strands. Top pair: along the main row through the freed
    // replaced vertices (v to v). Interior pairs: climb each rung (w to v,
    // exit through the freed vertex). Bottom pair: along and below the
    // partner row (w to w), dipping under each crossing.
    for (int t = 0; t < p; ++t) {
        auto [R, R2] = pairs[t];
        for (int j = 0; j + 1 < q; ++j) {
            int Qa = kept_cols[j], Qb = kept_cols[j + 1];
            auto [clo, chi] = col_window(Qa, Qb);
            std::vector<int> seg;
            if (t == 0) {
                seg = corridor_path(sw, fr.green(R, Qa), fr.green(R, Qb), R, R, clo, chi, {}, st);
            } else if (t + 1 < p) {
                seg = corridor_path(sw, fr.green(R, Qa), fr.green(R2, Qb), R, R2, clo, chi, {}, st);
            } else {
                seg = corridor_path(sw, fr.green(R2, Qa), fr.green(R2, Qb), R2, std::min(n, R2 + 2),
                                    clo, chi, {}, st);
            }
            if (seg.empty()) return std::nullopt;
            st.add_path(seg);
        }
    }
    return finish(sw, st, /*want_wall*/ true, p, q);
}

// Build the restricted host coloring for the white/black search: rows of
// one parity only. Returns row count and a remap-to-2-colors coloring in
// which 0 = the wanted color.
BipartiteColoring parity_host(const StoneWall& sw, int wanted_color, int parity) {
    Crossings cx{&sw, sw.base.rows, sw.base.cols};
    std::vector<int> wall_rows;
    for (int i = 2; i <= sw.base.rows - 1; ++i)
        if (i % 2 == parity) wall_rows.push_back(i);
    int cols = sw.base.cols - 2;
    BipartiteColoring host = BipartiteColoring::uniform(static_cast<int>(wall_rows.size()), cols, 2, 1);
    for (size_t i = 0; i < wall_rows.size(); ++i)
        for (int j = 0; j < cols; ++j)
            if (cx.color(wall_rows[i], j + 2) == wanted_color) host.at(static_cast<int>(i), j) = 0;
    return host;
}

}  // namespace

HomogeneousExtraction homogenize_stone_wall(const StoneWall& w, int r) {
    if (r < 2) throw std::invalid_argument("homogenize_stone_wall: r >= 2");
    if (static_cast<int>(w.base.id_to_coord.size()) != w.base.graph.vertex_count())
        throw std::invalid_argument("homogenize_stone_wall: base wall lacks coordinates");
    const int n = w.base.rows, m = w.base.cols;
    auto too_small = [&]() {
        throw std::invalid_argument("homogenize_stone_wall: input too small, need an (n x n)-stone wall with n >= " +
                                    std::to_string(required_size(r)));
    };
    if (n - 2 < 2 * r - 1 || m - 2 < 2 * r - 1) too_small();

    BipartiteColoring full = crossing_coloring(w);

    // green and red first (they need the smallest bicliques)
    const int t_gr = 2 * r - 1;
    if (full.rows >= t_gr && full.cols >= t_gr) {
        for (int color : {0, 1}) {
            BipartiteColoring host = BipartiteColoring::uniform(full.rows, full.cols, 2, 1);
            for (int i = 0; i < full.rows; ++i)
                for (int j = 0; j < full.cols; ++j)
                    if (full.at(i, j) == color) host.at(i, j) = 0;
            auto bic = find_monochromatic_biclique(host, t_gr);
            if (bic && bic->color == 0) {
                if (auto out = extract_green_red(w, r, color == 0, *bic)) return *out;
            }
        }
    }
    // white on the odd-row host, black on the even-row host
    const int t_wb = 6 * (r + 1);
    for (auto [color, sigma, parity] : {std::tuple{2, +1, 1}, {3, -1, 0}}) {
        BipartiteColoring host = parity_host(w, color, parity);
        if (host.rows < t_wb || host.cols < t_wb) continue;
        auto bic = find_monochromatic_biclique(host, t_wb);
        if (bic && bic->color == 0) {
            if (auto out = extract_white_black(w, r, sigma, *bic, parity)) return *out;
        }
    }
    too_small();
    return {};  // unreachable
}

}  // namespace holeforge
