#include "holeforge/minor.hpp"

#include <cstdint>
#include <map>

namespace holeforge {

bool validate_minor_witness(const Graph& g, int l, const MinorWitness& w) {
    if (static_cast<int>(w.branch_sets.size()) != l) return false;
    VertexSet all;
    for (auto& b : w.branch_sets) {
        if (b.empty()) return false;
        for (int v : b) {
            if (!g.has_vertex(v)) return false;
            all.push_back(v);
        }
        if (!is_connected(induced_subgraph(g, b))) return false;
    }
    if (make_set(std::move(all)).size() !=
        [&] {
            size_t s = 0;
            for (auto& b : w.branch_sets) s += b.size();
            return s;
        }())
        return false;
    for (size_t i = 0; i < w.branch_sets.size(); ++i)
        for (size_t j = i + 1; j < w.branch_sets.size(); ++j)
            if (anticomplete(g, w.branch_sets[i], w.branch_sets[j])) return false;
    return true;
}

namespace {

struct MinorSearch {
    int n, l;
    std::vector<uint32_t> adj;         // bitmask adjacency
    std::vector<int> order;            // vertex processing order (indices)
    std::vector<int> assign;           // index -> class (-1 unassigned/skipped)
    std::vector<uint32_t> sets;        // class -> member mask
    std::vector<uint32_t> set_nbrs;    // class -> N(set) mask
    bool found = false;
    std::vector<int> solution;

    // all classes nonempty, pairwise joined, each connected?
    bool complete() const {
        for (int c = 0; c < l; ++c)
            if (!sets[c]) return false;
        for (int c = 0; c < l; ++c)
            for (int d = c + 1; d < l; ++d)
                if (!(set_nbrs[c] & sets[d])) return false;
        for (int c = 0; c < l; ++c)
            if (!mask_connected(sets[c])) return false;
        return true;
    }

    bool mask_connected(uint32_t m) const {
        if (!m) return false;
        uint32_t comp = m & (~m + 1);  // lowest bit
        uint32_t frontier = comp;
        while (frontier) {
            uint32_t next = 0;
            for (int u = 0; u < n; ++u)
                if (frontier & (1u << u)) next |= adj[u];
            next &= m & ~comp;
            comp |= next;
            frontier = next;
        }
        return comp == m;
    }

    // Can every class still become connected and meet every other class,
    // using only vertices from `avail`?
    bool feasible(uint32_t avail, int remaining_unassigned) const {
        int empty = 0;
        for (int c = 0; c < l; ++c)
            if (!sets[c]) ++empty;
        if (empty > remaining_unassigned) return false;
        // spread[c]: everything B_c can reach through available vertices
        std::vector<uint32_t> spread(l, 0);
        for (int c = 0; c < l; ++c) {
            if (!sets[c]) continue;
            spread[c] = mask_spread(sets[c], sets[c] | avail);
            // the class itself must be connectable
            if (!single_component_covers(sets[c], spread[c])) return false;
        }
        for (int c = 0; c < l; ++c)
            for (int d = c + 1; d < l; ++d) {
                if (!sets[c] || !sets[d]) continue;
                if (set_nbrs[c] & sets[d]) continue;  // already joined
                uint32_t reach_nbrs = 0;
                for (int u = 0; u < n; ++u)
                    if (spread[c] & (1u << u)) reach_nbrs |= adj[u];
                if (!((reach_nbrs | spread[c]) & spread[d])) return false;
            }
        return true;
    }

    // All vertices reachable from m inside `within` (m may be split; spreads
    // from every part).
    uint32_t mask_spread(uint32_t m, uint32_t within) const {
        uint32_t comp = m;
        uint32_t frontier = comp;
        while (frontier) {
            uint32_t next = 0;
            for (int u = 0; u < n; ++u)
                if (frontier & (1u << u)) next |= adj[u];
            next &= within & ~comp;
            comp |= next;
            frontier = next;
        }
        return comp;
    }

    // is m inside one connected component of `within`?
    bool single_component_covers(uint32_t m, uint32_t within) const {
        uint32_t comp = m & (~m + 1);
        uint32_t frontier = comp;
        while (frontier) {
            uint32_t next = 0;
            for (int u = 0; u < n; ++u)
                if (frontier & (1u << u)) next |= adj[u];
            next &= within & ~comp;
            comp |= next;
            frontier = next;
        }
        return (m & ~comp) == 0;
    }

    void search(size_t pos, uint32_t avail) {
        if (found) return;
        if (complete()) {
            solution = assign;
            found = true;
            return;
        }
        if (pos == order.size()) return;
        if (!feasible(avail, static_cast<int>(order.size() - pos))) return;
        int v = order[pos];
        uint32_t vbit = 1u << v;
        // try classes; only the first empty class (symmetry breaking).
        // Non-adjacent joins are allowed: the class only has to be connected
        // in the end, and feasible() prunes hopeless shapes.
        bool tried_empty = false;
        for (int c = 0; c < l; ++c) {
            if (!sets[c]) {
                if (tried_empty) break;
                tried_empty = true;
            }
            assign[v] = c;
            uint32_t old_nbrs = set_nbrs[c];
            sets[c] |= vbit;
            set_nbrs[c] |= adj[v];
            search(pos + 1, avail & ~vbit);
            sets[c] &= ~vbit;
            set_nbrs[c] = old_nbrs;
            assign[v] = -1;
            if (found) return;
        }
        // or leave v unused
        search(pos + 1, avail & ~vbit);
    }
};

}  // namespace

std::optional<MinorWitness> has_minor(const Graph& g, int l) {
    if (l < 2 || l > 6) throw std::invalid_argument("has_minor: l must be in 2..6");
    int cap = l == 6 ? 18 : 20;
    if (g.vertex_count() > cap) throw std::invalid_argument("has_minor: size cap exceeded");
    const int n = g.vertex_count();
    if (n < l) return std::nullopt;

    MinorSearch ms;
    ms.n = n;
    ms.l = l;
    std::vector<int> verts = g.vertices();
    std::map<int, int> idx;
    for (int i = 0; i < n; ++i) idx[verts[i]] = i;
    ms.adj.assign(n, 0);
    for (auto [u, v] : g.edges()) {
        ms.adj[idx[u]] |= 1u << idx[v];
        ms.adj[idx[v]] |= 1u << idx[u];
    }
    ms.order.resize(n);
    for (int i = 0; i < n; ++i) ms.order[i] = i;
    std::sort(ms.order.begin(), ms.order.end(),
              [&](int a, int b) { return __builtin_popcount(ms.adj[a]) > __builtin_popcount(ms.adj[b]); });
    ms.assign.assign(n, -1);
    ms.sets.assign(l, 0);
    ms.set_nbrs.assign(l, 0);
    ms.search(0, (n == 32 ? ~0u : ((1u << n) - 1)));
    if (!ms.found) return std::nullopt;

    MinorWitness w;
    w.branch_sets.assign(l, {});
    for (int i = 0; i < n; ++i)
        if (ms.solution[i] >= 0) w.branch_sets[ms.solution[i]].push_back(verts[i]);
    for (auto& b : w.branch_sets) b = make_set(std::vector<int>(b.begin(), b.end()));
    if (!validate_minor_witness(g, l, w)) throw std::logic_error("has_minor: invalid witness produced");
    return w;
}

}  // namespace holeforge
