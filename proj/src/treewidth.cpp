#include "holeforge/treewidth.hpp"

#include <cstdint>
#include <sstream>

namespace holeforge {

TdValidation validate_tree_decomposition(const Graph& g, const TreeDecomposition& td) {
    TdValidation res;
    res.width = td.width();
    auto fail = [&](const std::string& s) { res.violations.push_back(s); };

    const int nb = static_cast<int>(td.bags.size());
    if (nb == 0) {
        if (g.vertex_count() == 0) res.valid = true;
        else fail("no bags");
        return res;
    }
    for (auto [a, b] : td.tree_edges)
        if (a < 0 || a >= nb || b < 0 || b >= nb) {
            fail("tree edge out of range");
            return res;
        }
    // tree shape: connected and acyclic
    if (static_cast<int>(td.tree_edges.size()) != nb - 1) fail("tree has wrong edge count");
    {
        std::vector<std::vector<int>> adj(nb);
        for (auto [a, b] : td.tree_edges) {
            adj[a].push_back(b);
            adj[b].push_back(a);
        }
        std::vector<bool> seen(nb, false);
        std::vector<int> q{0};
        seen[0] = true;
        size_t cnt = 1;
        while (!q.empty()) {
            int v = q.back();
            q.pop_back();
            for (int w : adj[v])
                if (!seen[w]) {
                    seen[w] = true;
                    ++cnt;
                    q.push_back(w);
                }
        }
        if (cnt != static_cast<size_t>(nb)) fail("tree is disconnected");
    }
    for (auto& b : td.bags)
        for (int v : b)
            if (!g.has_vertex(v)) fail("bag mentions unknown vertex " + std::to_string(v));
    if (!res.violations.empty()) return res;

    // vertex coverage
    for (int v : g.vertices()) {
        bool covered = false;
        for (auto& b : td.bags)
            if (set_contains(b, v)) covered = true;
        if (!covered) fail("vertex " + std::to_string(v) + " in no bag");
    }
    // edge coverage
    for (auto [u, v] : g.edges()) {
        bool covered = false;
        for (auto& b : td.bags)
            if (set_contains(b, u) && set_contains(b, v)) covered = true;
        if (!covered) fail("edge " + std::to_string(u) + "-" + std::to_string(v) + " in no bag");
    }
    // subtree connectivity per vertex
    std::vector<std::vector<int>> adj(nb);
    for (auto [a, b] : td.tree_edges) {
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    for (int v : g.vertices()) {
        int start = -1, total = 0;
        for (int i = 0; i < nb; ++i)
            if (set_contains(td.bags[i], v)) {
                ++total;
                start = i;
            }
        if (start == -1) continue;
        std::vector<bool> seen(nb, false);
        std::vector<int> q{start};
        seen[start] = true;
        int cnt = 1;
        while (!q.empty()) {
            int i = q.back();
            q.pop_back();
            for (int j : adj[i])
                if (!seen[j] && set_contains(td.bags[j], v)) {
                    seen[j] = true;
                    ++cnt;
                    q.push_back(j);
                }
        }
        if (cnt != total) fail("bags of vertex " + std::to_string(v) + " are not a subtree");
    }
    res.valid = res.violations.empty();
    return res;
}

namespace {

// Q(S, v): neighbors of v outside S u {v} reachable from v through S.
int q_value(const std::vector<uint32_t>& adj, int n, uint32_t s, int v) {
    uint32_t comp = 1u << v;
    uint32_t frontier = comp;
    while (frontier) {
        uint32_t next = 0;
        for (int u = 0; u < n; ++u)
            if (frontier & (1u << u)) next |= adj[u];
        next &= s;
        next &= ~comp;
        comp |= next;
        frontier = next;
    }
    uint32_t reach_nbrs = 0;
    for (int u = 0; u < n; ++u)
        if (comp & (1u << u)) reach_nbrs |= adj[u];
    reach_nbrs &= ~s;
    reach_nbrs &= ~(1u << v);
    return __builtin_popcount(reach_nbrs);
}

}  // namespace

namespace {

struct TwDp {
    std::vector<int> verts;
    std::vector<uint32_t> adj;
    std::vector<int8_t> f;
};

TwDp run_tw_dp(const Graph& g) {
    const int n = g.vertex_count();
    TwDp dp;
    dp.verts = g.vertices();
    std::map<int, int> idx;
    for (int i = 0; i < n; ++i) idx[dp.verts[i]] = i;
    dp.adj.assign(n, 0);
    for (auto [u, v] : g.edges()) {
        dp.adj[idx[u]] |= 1u << idx[v];
        dp.adj[idx[v]] |= 1u << idx[u];
    }
    // f(S) = min over v in S of max(f(S \ v), |Q(S \ v, v)|)
    dp.f.assign(1u << n, -1);
    dp.f[0] = 0;
    for (uint32_t s = 1; s < (1u << n); ++s) {
        int best = n;
        for (int v = 0; v < n; ++v) {
            if (!(s & (1u << v))) continue;
            uint32_t rest = s & ~(1u << v);
            int q = q_value(dp.adj, n, rest, v);
            best = std::min(best, std::max<int>(dp.f[rest], q));
        }
        dp.f[s] = static_cast<int8_t>(best);
    }
    return dp;
}

}  // namespace

int exact_treewidth(const Graph& g) {
    const int n = g.vertex_count();
    if (n > kTreewidthCap) throw std::invalid_argument("exact_treewidth: size cap exceeded");
    if (n == 0) return -1;
    if (n == 1) return 0;
    TwDp dp = run_tw_dp(g);
    return dp.f[(1u << n) - 1];
}

TreeDecomposition exact_tree_decomposition(const Graph& g) {
    const int n = g.vertex_count();
    if (n > kTreewidthCap) throw std::invalid_argument("exact_tree_decomposition: size cap exceeded");
    TreeDecomposition td;
    if (n == 0) return td;
    if (n == 1) {
        td.bags.push_back(g.vertices());
        return td;
    }
    if (!is_connected(g)) {
        // per component; cross-component links are harmless (disjoint bags)
        for (auto& comp : connected_components(g)) {
            TreeDecomposition part = exact_tree_decomposition(induced_subgraph(g, comp));
            int off = static_cast<int>(td.bags.size());
            for (auto& b : part.bags) td.bags.push_back(b);
            for (auto [x, y] : part.tree_edges) td.tree_edges.emplace_back(x + off, y + off);
            if (off > 0) td.tree_edges.emplace_back(off - 1, off);
        }
        return td;
    }
    TwDp dp = run_tw_dp(g);
    // traceback: elimination order, last-eliminated first
    const uint32_t full = (1u << n) - 1;
    std::vector<int> elim(n, -1);  // elim[i] = i-th eliminated vertex (index)
    uint32_t s = full;
    for (int pos = n - 1; pos >= 0; --pos) {
        for (int v = 0; v < n; ++v) {
            if (!(s & (1u << v))) continue;
            uint32_t rest = s & ~(1u << v);
            if (std::max<int>(dp.f[rest], q_value(dp.adj, n, rest, v)) == dp.f[s]) {
                elim[pos] = v;
                s = rest;
                break;
            }
        }
    }
    // eliminate in order, filling in neighbors; bag of v = {v} u later nbrs
    std::vector<uint32_t> fill = dp.adj;
    std::vector<int> pos_of(n);
    for (int i = 0; i < n; ++i) pos_of[elim[i]] = i;
    std::vector<uint32_t> bagmask(n, 0);
    for (int i = 0; i < n; ++i) {
        int v = elim[i];
        uint32_t later = 0;
        for (int j = i + 1; j < n; ++j) later |= 1u << elim[j];
        uint32_t nb = fill[v] & later;
        bagmask[i] = nb | (1u << v);
        // make later neighbors pairwise adjacent
        for (int x = 0; x < n; ++x)
            if (nb & (1u << x)) fill[x] |= nb & ~(1u << x);
    }
    td.bags.resize(n);
    for (int i = 0; i < n; ++i) {
        for (int v = 0; v < n; ++v)
            if (bagmask[i] & (1u << v)) td.bags[i].push_back(dp.verts[v]);
        td.bags[i] = make_set(std::move(td.bags[i]));
    }
    // tree: bag i attaches to the bag of its first-eliminated later
    // neighbor. In a connected graph only the last bag has none.
    for (int i = 0; i < n; ++i) {
        uint32_t nb = bagmask[i] & ~(1u << elim[i]);
        if (!nb) continue;
        int best = n;
        for (int v = 0; v < n; ++v)
            if (nb & (1u << v)) best = std::min(best, pos_of[v]);
        td.tree_edges.emplace_back(i, best);
    }
    return td;
}

std::string write_td(const Graph& g, const TreeDecomposition& td) {
    std::ostringstream out;
    out << "s td " << td.bags.size() << ' ' << td.width() + 1 << ' ' << g.vertex_count() << '\n';
    for (size_t i = 0; i < td.bags.size(); ++i) {
        out << "b " << i + 1;
        for (int v : td.bags[i]) out << ' ' << v;
        out << '\n';
    }
    for (auto [a, b] : td.tree_edges) out << a + 1 << ' ' << b + 1 << '\n';
    return out.str();
}

TreeDecomposition parse_td(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    TreeDecomposition td;
    int nb = -1;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == 'c') continue;
        std::istringstream ls(line);
        if (line[0] == 's') {
            std::string s, t;
            int w, n;
            ls >> s >> t >> nb >> w >> n;
            td.bags.assign(nb, {});
        } else if (line[0] == 'b') {
            char b;
            int id;
            ls >> b >> id;
            int v;
            VertexSet bag;
            while (ls >> v) bag.push_back(v);
            td.bags.at(id - 1) = make_set(std::move(bag));
        } else {
            int a, b;
            if (ls >> a >> b) td.tree_edges.emplace_back(a - 1, b - 1);
        }
    }
    if (nb < 0) throw std::invalid_argument("parse_td: missing header");
    return td;
}

}  // namespace holeforge
