#include "holeforge/separators.hpp"

#include <map>
#include <string>

namespace holeforge {

std::optional<CliqueSeparator> find_clique_separator(const Graph& g, int max_size) {
    if (max_size < 0 || max_size > 4) throw std::invalid_argument("find_clique_separator: max_size in 0..4");
    auto comps_without = [&](const VertexSet& s) { return components_after_removing(g, s); };
    // size 0: the empty set separates a disconnected graph
    {
        auto comps = connected_components(g);
        if (comps.size() >= 2) return CliqueSeparator{{}, comps};
    }
    const auto& verts = g.vertices();
    const int n = g.vertex_count();
    std::vector<int> pick;
    // enumerate cliques by increasing size, lexicographic within a size
    std::function<std::optional<CliqueSeparator>(int, int, int)> rec =
        [&](int size, int from, int depth) -> std::optional<CliqueSeparator> {
        if (depth == size) {
            VertexSet s(pick.begin(), pick.end());
            auto comps = comps_without(s);
            if (comps.size() >= 2) return CliqueSeparator{make_set(std::move(s)), comps};
            return std::nullopt;
        }
        for (int i = from; i < n; ++i) {
            bool clique = true;
            for (int p : pick)
                if (!g.has_edge(p, verts[i])) clique = false;
            if (!clique) continue;
            pick.push_back(verts[i]);
            if (auto r = rec(size, i + 1, depth + 1)) return r;
            pick.pop_back();
        }
        return std::nullopt;
    };
    for (int size = 1; size <= max_size; ++size) {
        pick.clear();
        if (auto r = rec(size, 0, 0)) return r;
    }
    return std::nullopt;
}

std::vector<std::string> proper_separation_violations(const Graph& g, const ProperSeparation& ps) {
    std::vector<std::string> out;
    const VertexSet ab = make_set({ps.a, ps.b});
    if (ps.a == ps.b || !g.has_vertex(ps.a) || !g.has_vertex(ps.b)) {
        out.push_back("(i) a, b not distinct vertices of G");
        return out;
    }
    VertexSet x = ps.x, y = ps.y;
    if (x.empty() || y.empty() || !set_intersection(x, y).empty() || !set_intersection(ab, x).empty() ||
        !set_intersection(ab, y).empty() || set_union(set_union(x, y), ab) != g.vertices())
        out.push_back("(i) {a,b}, X, Y do not partition V(G)");
    if (!anticomplete(g, x, y)) out.push_back("(ii) edges between X and Y");
    if (g.has_edge(ps.a, ps.b)) out.push_back("(iii) a and b adjacent");
    auto count_in = [&](int v, const VertexSet& s) {
        int c = 0;
        for (int w : g.neighbors(v))
            if (set_contains(s, w)) ++c;
        return c;
    };
    if (count_in(ps.a, x) != 2 || count_in(ps.b, x) != 2)
        out.push_back("(iv) a or b does not have exactly two neighbors in X");
    if (count_in(ps.a, y) != 1 || count_in(ps.b, y) != 1)
        out.push_back("(v) a or b does not have exactly one neighbor in Y");
    {
        Graph gx = induced_subgraph(g, set_union(x, ab));
        Graph gy = induced_subgraph(g, set_union(y, ab));
        Graph gx2 = gx, gy2 = gy;
        if (gx2.has_edge(ps.a, ps.b)) gx2.remove_edge(ps.a, ps.b);
        if (gy2.has_edge(ps.a, ps.b)) gy2.remove_edge(ps.a, ps.b);
        if (shortest_path(gx2, ps.a, ps.b).empty())
            out.push_back("(vi) no a-b path with interior in X");
        if (shortest_path(gy2, ps.a, ps.b).empty())
            out.push_back("(vi) no a-b path with interior in Y");
        // (vii): G[Y u {a,b}] must not be a chordless a-b path
        bool is_path = true;
        for (int v : gy.vertices()) {
            int d = gy.degree(v);
            if (v == ps.a || v == ps.b) {
                if (d != 1) is_path = false;
            } else if (d != 2) {
                is_path = false;
            }
        }
        if (is_path && !is_connected(gy)) is_path = false;
        if (is_path) out.push_back("(vii) G[Y u {a,b}] is a chordless a-b path");
    }
    return out;
}

bool validate_proper_separation(const Graph& g, const ProperSeparation& ps) {
    return proper_separation_violations(g, ps).empty();
}

std::optional<ProperSeparation> find_proper_separation(const Graph& g) {
    const auto& verts = g.vertices();
    for (int a : verts) {
        if (g.degree(a) != 3) continue;  // (iv)+(v) force degree exactly 3
        for (int b : verts) {
            if (b <= a || g.degree(b) != 3) continue;
            if (g.has_edge(a, b)) continue;
            auto comps = components_after_removing(g, {a, b});
            if (comps.size() < 2) continue;
            const int t = static_cast<int>(comps.size());
            if (t > 20) continue;  // would not happen at desk scale
            // bipartition components into the X side (mask bit set) and Y side
            for (uint32_t mask = 1; mask + 1 < (1u << t); ++mask) {
                VertexSet x, y;
                for (int i = 0; i < t; ++i)
                    for (int v : comps[i]) (mask & (1u << i) ? x : y).push_back(v);
                ProperSeparation ps{a, b, make_set(std::move(x)), make_set(std::move(y))};
                if (validate_proper_separation(g, ps)) return ps;
            }
        }
    }
    return std::nullopt;
}

bool validate_2join(const Graph& g, const TwoJoin& tj) {
    if (tj.x1.size() < 3 || tj.x2.size() < 3) return false;
    if (!set_intersection(tj.x1, tj.x2).empty()) return false;
    if (set_union(tj.x1, tj.x2) != g.vertices()) return false;
    for (auto [part, host] : {std::pair{&tj.a1, &tj.x1}, {&tj.b1, &tj.x1}, {&tj.a2, &tj.x2}, {&tj.b2, &tj.x2}})
        if (part->empty() || !set_difference(*part, *host).empty()) return false;
    if (!set_intersection(tj.a1, tj.b1).empty() || !set_intersection(tj.a2, tj.b2).empty()) return false;
    if (!complete_between(g, tj.a1, tj.a2)) return false;
    if (!complete_between(g, tj.b1, tj.b2)) return false;
    // no other cross edges
    int cross = 0;
    for (int u : tj.x1)
        for (int w : g.neighbors(u))
            if (set_contains(tj.x2, w)) ++cross;
    if (cross != static_cast<int>(tj.a1.size() * tj.a2.size() + tj.b1.size() * tj.b2.size())) return false;
    // the excluded shape: X_i a path from A_i to B_i with clean interior
    auto is_excluded_path = [&](const VertexSet& xi, const VertexSet& ai, const VertexSet& bi) {
        if (ai.size() != 1 || bi.size() != 1) return false;
        Graph sub = induced_subgraph(g, xi);
        int ends = 0;
        for (int v : sub.vertices()) {
            int d = sub.degree(v);
            if (d > 2 || d == 0) return false;
            if (d == 1) ++ends;
        }
        if (ends != 2 || !is_connected(sub)) return false;
        int p = ai[0], q = bi[0];
        if (sub.degree(p) != 1 || sub.degree(q) != 1) return false;
        return true;  // interior is everything else, none of it in A_i u B_i by the singleton shape
    };
    if (is_excluded_path(tj.x1, tj.a1, tj.b1)) return false;
    if (is_excluded_path(tj.x2, tj.a2, tj.b2)) return false;
    return true;
}

Search<TwoJoin> find_2join(const Graph& g, Deadline deadline) {
    Search<TwoJoin> res;
    const int n = g.vertex_count();
    if (n > 20) {
        res.status = SearchStatus::inconclusive;
        return res;
    }
    if (n < 6) {
        res.status = SearchStatus::none;
        return res;
    }
    const auto& verts = g.vertices();
    for (uint32_t mask = 1; mask + 1 < (1u << n); ++mask) {
        if (mask & 1u) continue;  // vertex 0 always on side 2: halves the work
        if (deadline.expired()) {
            res.status = SearchStatus::inconclusive;
            return res;
        }
        VertexSet x1, x2;
        for (int i = 0; i < n; ++i) (mask & (1u << i) ? x1 : x2).push_back(verts[i]);
        if (x1.size() < 3 || x2.size() < 3) continue;
        // group X1 vertices by their X2-neighborhood
        std::map<VertexSet, VertexSet> groups;
        for (int u : x1) {
            VertexSet nb;
            for (int w : g.neighbors(u))
                if (set_contains(x2, w)) nb.push_back(w);
            if (!nb.empty()) groups[nb].push_back(u);
        }
        if (groups.size() != 2) continue;
        auto it = groups.begin();
        TwoJoin tj;
        tj.x1 = x1;
        tj.x2 = x2;
        tj.a2 = it->first;
        tj.a1 = it->second;
        ++it;
        tj.b2 = it->first;
        tj.b1 = it->second;
        if (validate_2join(g, tj)) {
            res.status = SearchStatus::found;
            res.witness = tj;
            return res;
        }
    }
    res.status = SearchStatus::none;
    return res;
}

}  // namespace holeforge
