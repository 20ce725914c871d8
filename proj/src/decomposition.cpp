#include "holeforge/decomposition.hpp"

#include <map>
#include <set>

namespace holeforge {

const char* basic_kind_name(BasicCertificate::Kind k) {
    switch (k) {
        case BasicCertificate::Kind::chordless_cycle: return "chordless-cycle";
        case BasicCertificate::Kind::small_clique: return "clique";
        case BasicCertificate::Kind::cube: return "cube";
        case BasicCertificate::Kind::proper_wheel: return "proper-wheel";
        case BasicCertificate::Kind::pyramid: return "pyramid";
        case BasicCertificate::Kind::extended_prism: return "extended-prism";
    }
    return "?";
}

std::optional<BasicCertificate> classify_basic(const Graph& g) {
    BasicCertificate cert;
    if (is_cycle_graph(g)) {
        cert.kind = BasicCertificate::Kind::chordless_cycle;
        // order the cycle
        std::vector<int> cyc{g.vertices()[0]};
        int prev = -1;
        while (static_cast<int>(cyc.size()) < g.vertex_count()) {
            int cur = cyc.back();
            for (int w : g.neighbors(cur))
                if (w != prev) {
                    prev = cur;
                    cyc.push_back(w);
                    break;
                }
        }
        cert.cycle = cyc;
        return cert;
    }
    if (g.vertex_count() <= 4 && is_complete_graph(g)) {
        cert.kind = BasicCertificate::Kind::small_clique;
        cert.clique = g.vertices();
        return cert;
    }
    if (is_cube_graph(g)) {
        cert.kind = BasicCertificate::Kind::cube;
        return cert;
    }
    if (auto w = as_proper_wheel_graph(g)) {
        cert.kind = BasicCertificate::Kind::proper_wheel;
        cert.wheel = w;
        return cert;
    }
    if (auto p = as_pyramid_graph(g)) {
        cert.kind = BasicCertificate::Kind::pyramid;
        cert.pyramid = p;
        return cert;
    }
    if (auto e = as_extended_prism_graph(g)) {
        cert.kind = BasicCertificate::Kind::extended_prism;
        cert.eprism = e;
        return cert;
    }
    return std::nullopt;
}

bool validate_basic_certificate(const Graph& g, const BasicCertificate& cert) {
    switch (cert.kind) {
        case BasicCertificate::Kind::chordless_cycle: {
            if (!is_cycle_graph(g)) return false;
            if (static_cast<int>(cert.cycle.size()) != g.vertex_count()) return false;
            for (size_t i = 0; i < cert.cycle.size(); ++i)
                if (!g.has_edge(cert.cycle[i], cert.cycle[(i + 1) % cert.cycle.size()])) return false;
            return true;
        }
        case BasicCertificate::Kind::small_clique:
            return g.vertex_count() <= 4 && is_complete_graph(g) && cert.clique == g.vertices();
        case BasicCertificate::Kind::cube:
            return is_cube_graph(g);
        case BasicCertificate::Kind::proper_wheel:
            return cert.wheel && validate_wheel(g, *cert.wheel) &&
                   static_cast<int>(cert.wheel->rim.size()) + 1 == g.vertex_count() &&
                   !as_pyramid_graph(g);
        case BasicCertificate::Kind::pyramid: {
            if (!cert.pyramid || !validate_pyramid(g, *cert.pyramid)) return false;
            std::set<int> verts{cert.pyramid->apex};
            for (auto& p : cert.pyramid->paths)
                for (int v : p) verts.insert(v);
            return static_cast<int>(verts.size()) == g.vertex_count();
        }
        case BasicCertificate::Kind::extended_prism: {
            if (!cert.eprism || !validate_extended_prism(g, *cert.eprism)) return false;
            std::set<int> verts;
            for (auto* p : {&cert.eprism->pa, &cert.eprism->pa2, &cert.eprism->pb, &cert.eprism->pb2,
                            &cert.eprism->pc})
                for (int v : *p) verts.insert(v);
            return static_cast<int>(verts.size()) == g.vertex_count();
        }
    }
    return false;
}

namespace {

int build_decompose(const Graph& g, DecompositionTree& tree, std::optional<Graph>& violation) {
    int me = static_cast<int>(tree.nodes.size());
    tree.nodes.emplace_back();
    tree.nodes[me].graph = g;

    if (auto cert = classify_basic(g)) {
        tree.nodes[me].type = DecompositionNode::Type::leaf;
        tree.nodes[me].certificate = cert;
        return me;
    }
    if (auto cs = find_clique_separator(g, 2)) {
        tree.nodes[me].type = DecompositionNode::Type::clique_cut;
        tree.nodes[me].cut_clique = cs->clique;
        for (auto& comp : cs->components) {
            Graph child = induced_subgraph(g, set_union(comp, cs->clique));
            if (child.vertex_count() >= g.vertex_count())
                throw std::logic_error("decompose: clique cut without progress");
            int c = build_decompose(child, tree, violation);
            if (violation) return me;
            tree.nodes[me].children.push_back(c);
        }
        return me;
    }
    if (auto ps = find_proper_separation(g)) {
        tree.nodes[me].type = DecompositionNode::Type::proper_cut;
        tree.nodes[me].separation = ps;
        Graph gx = induced_subgraph(g, set_union(ps->x, make_set({ps->a, ps->b})));
        Graph gy = induced_subgraph(g, set_union(ps->y, make_set({ps->a, ps->b})));
        // marker path a - m - b in each child keeps both strictly smaller
        // (|X|, |Y| >= 2 by (iv) and (vii)) and restores the glue sites
        int m1 = gx.fresh_vertex();
        gx.add_vertex(m1);
        gx.add_edge(ps->a, m1);
        gx.add_edge(m1, ps->b);
        int m2 = gy.fresh_vertex();
        gy.add_vertex(m2);
        gy.add_edge(ps->a, m2);
        gy.add_edge(m2, ps->b);
        tree.nodes[me].marker1 = m1;
        tree.nodes[me].marker2 = m2;
        if (gx.vertex_count() >= g.vertex_count() || gy.vertex_count() >= g.vertex_count())
            throw std::logic_error("decompose: proper cut without progress");
        int c1 = build_decompose(gx, tree, violation);
        if (violation) return me;
        int c2 = build_decompose(gy, tree, violation);
        if (violation) return me;
        tree.nodes[me].children = {c1, c2};
        return me;
    }
    violation = g;  // neither branch of the structure theorem applies
    return me;
}

}  // namespace

DecomposeResult decompose_subcubic(const Graph& g) {
    if (g.vertex_count() == 0) throw std::invalid_argument("decompose_subcubic: empty graph");
    if (g.max_degree() > 3) throw std::invalid_argument("decompose_subcubic: input is not subcubic");
    DecomposeResult res;
    DecompositionTree tree;
    std::optional<Graph> violation;
    build_decompose(g, tree, violation);
    if (violation) {
        res.violation = violation;
        return res;
    }
    res.tree = std::move(tree);
    return res;
}

Graph reassemble(const DecompositionTree& tree, int node) {
    const DecompositionNode& n = tree.nodes.at(node);
    switch (n.type) {
        case DecompositionNode::Type::leaf:
            return n.graph;
        case DecompositionNode::Type::clique_cut: {
            Graph acc = reassemble(tree, n.children.at(0));
            for (size_t i = 1; i < n.children.size(); ++i)
                acc = glue_clique(acc, n.cut_clique, reassemble(tree, n.children[i]), n.cut_clique);
            return acc;
        }
        case DecompositionNode::Type::proper_cut: {
            Graph g1 = reassemble(tree, n.children.at(0));
            Graph g2 = reassemble(tree, n.children.at(1));
            const auto& ps = *n.separation;
            std::vector<int> p1{ps.a, n.marker1, ps.b};
            std::vector<int> p2{ps.a, n.marker2, ps.b};
            return proper_glue(g1, ps.a, ps.b, p1, g2, ps.a, ps.b, p2);
        }
    }
    throw std::logic_error("reassemble: bad node type");
}

Graph glue_clique(const Graph& g1, const VertexSet& k1, const Graph& g2, const VertexSet& k2) {
    if (k1.size() != k2.size()) throw std::invalid_argument("glue_clique: clique sizes differ");
    if (!is_clique(g1, k1) || !is_clique(g2, k2))
        throw std::invalid_argument("glue_clique: identified sets must be cliques");
    for (int v : k1)
        if (!g1.has_vertex(v)) throw std::invalid_argument("glue_clique: unknown vertex in k1");
    for (int v : k2)
        if (!g2.has_vertex(v)) throw std::invalid_argument("glue_clique: unknown vertex in k2");
    Graph out = g1;
    std::map<int, int> rename;  // g2 id -> out id
    for (size_t i = 0; i < k2.size(); ++i) rename[k2[i]] = k1[i];
    int next = std::max(g1.fresh_vertex(), g2.fresh_vertex());
    for (int v : g2.vertices()) {
        if (rename.count(v)) continue;
        if (!out.has_vertex(v)) {
            rename[v] = v;
        } else {
            rename[v] = next++;
        }
        out.add_vertex(rename[v]);
        if (auto l = g2.label(v)) out.set_label(rename[v], *l);
    }
    for (auto [u, v] : g2.edges()) out.add_edge(rename[u], rename[v]);
    return out;
}

namespace {

void check_glue_path(const Graph& g, int a, int b, const std::vector<int>& p, const char* side) {
    if (p.size() < 3 || p.front() != a || p.back() != b)
        throw std::invalid_argument(std::string("proper_glue: ") + side +
                                    " path must run from a to b with at least one internal vertex");
    for (size_t i = 0; i + 1 < p.size(); ++i)
        if (!g.has_edge(p[i], p[i + 1]))
            throw std::invalid_argument(std::string("proper_glue: ") + side + " path edge missing");
    for (size_t i = 1; i + 1 < p.size(); ++i)
        if (g.degree(p[i]) != 2)
            throw std::invalid_argument(std::string("proper_glue: ") + side +
                                        " path internal vertex not of degree 2");
}

}  // namespace

Graph proper_glue(const Graph& g1, int a1, int b1, const std::vector<int>& p1, const Graph& g2,
                  int a2, int b2, const std::vector<int>& p2) {
    if (g1.has_edge(a1, b1)) throw std::invalid_argument("proper_glue: a1 and b1 must be non-adjacent");
    if (g2.has_edge(a2, b2)) throw std::invalid_argument("proper_glue: a2 and b2 must be non-adjacent");
    if (g1.degree(a1) != 3 || g1.degree(b1) != 3)
        throw std::invalid_argument("proper_glue: a1 and b1 must have degree 3");
    if (g2.degree(a2) != 2 || g2.degree(b2) != 2)
        throw std::invalid_argument("proper_glue: a2 and b2 must have degree 2");
    check_glue_path(g1, a1, b1, p1, "G1");
    check_glue_path(g2, a2, b2, p2, "G2");

    Graph h1 = g1;
    for (size_t i = 1; i + 1 < p1.size(); ++i) h1.remove_vertex(p1[i]);
    Graph h2 = g2;
    for (size_t i = 1; i + 1 < p2.size(); ++i) h2.remove_vertex(p2[i]);

    Graph out = h1;
    std::map<int, int> rename{{a2, a1}, {b2, b1}};
    int next = std::max(g1.fresh_vertex(), g2.fresh_vertex());
    for (int v : h2.vertices()) {
        if (rename.count(v)) continue;
        rename[v] = out.has_vertex(v) ? next++ : v;
        out.add_vertex(rename[v]);
        if (auto l = h2.label(v)) out.set_label(rename[v], *l);
    }
    for (auto [u, v] : h2.edges()) out.add_edge(rename[u], rename[v]);
    return out;
}

std::vector<GlueSite> proper_glue_sites_g1(const Graph& g) {
    std::vector<GlueSite> sites;
    for (int a : g.vertices()) {
        if (g.degree(a) != 3) continue;
        for (int first : g.neighbors(a)) {
            if (g.degree(first) != 2) continue;
            // walk the chain of degree-2 vertices
            std::vector<int> path{a, first};
            int prev = a, cur = first;
            while (g.degree(cur) == 2) {
                int nxt = g.neighbors(cur)[0] == prev ? g.neighbors(cur)[1] : g.neighbors(cur)[0];
                prev = cur;
                cur = nxt;
                path.push_back(cur);
            }
            int b = path.back();
            if (b == a || g.degree(b) != 3 || b < a) continue;  // b < a: dedupe
            if (g.has_edge(a, b)) continue;
            sites.push_back({a, b, path});
        }
    }
    return sites;
}

std::vector<GlueSite> proper_glue_sites_g2(const Graph& g) {
    std::vector<GlueSite> sites;
    for (int a : g.vertices()) {
        if (g.degree(a) != 2) continue;
        for (int first : g.neighbors(a)) {
            if (g.degree(first) != 2) continue;
            std::vector<int> path{a, first};
            int prev = a, cur = first;
            while (g.degree(cur) == 2) {
                int nxt = g.neighbors(cur)[0] == prev ? g.neighbors(cur)[1] : g.neighbors(cur)[0];
                if (nxt == a) break;  // cycle closed
                // record intermediate split points: every prefix ending at a
                // degree-2 vertex with length >= 2 is usable
                prev = cur;
                cur = nxt;
                path.push_back(cur);
                if (g.degree(cur) == 2 && !g.has_edge(a, cur) && a < cur)
                    sites.push_back({a, cur, path});
            }
        }
    }
    return sites;
}

// --- width-3 pipeline ---------------------------------------------------------

namespace {

// Contract degree-2 chains down to a bounded core, remembering the
// smoothing steps (v absorbed between u and w) for later re-expansion.
struct ChainContraction {
    Graph core;
    std::vector<std::array<int, 3>> steps;  // (v, u, w) in contraction order
};

ChainContraction contract_chains(const Graph& g) {
    ChainContraction cc;
    cc.core = g;
    bool changed = true;
    while (changed) {
        changed = false;
        for (int v : cc.core.vertices()) {
            if (cc.core.degree(v) != 2) continue;
            int u = cc.core.neighbors(v)[0], w = cc.core.neighbors(v)[1];
            if (cc.core.has_edge(u, w)) continue;  // keep simplicity
            cc.core.remove_vertex(v);
            cc.core.add_edge(u, w);
            cc.steps.push_back({v, u, w});
            changed = true;
            break;
        }
    }
    return cc;
}

TreeDecomposition leaf_decomposition(const Graph& g) {
    ChainContraction cc = contract_chains(g);
    if (cc.core.vertex_count() > kTreewidthCap)
        throw std::logic_error("leaf_decomposition: core unexpectedly large");
    TreeDecomposition td = exact_tree_decomposition(cc.core);
    // re-expand: subdividing edge (u,w) with v needs one bag {u,v,w} hung
    // onto a bag containing both u and w
    for (auto it = cc.steps.rbegin(); it != cc.steps.rend(); ++it) {
        auto [v, u, w] = *it;
        int host = -1;
        for (size_t i = 0; i < td.bags.size(); ++i)
            if (set_contains(td.bags[i], u) && set_contains(td.bags[i], w)) host = static_cast<int>(i);
        if (host == -1) throw std::logic_error("leaf_decomposition: no bag covers contracted edge");
        td.bags.push_back(make_set({u, v, w}));
        td.tree_edges.emplace_back(host, static_cast<int>(td.bags.size()) - 1);
    }
    return td;
}

// Append `part` to `acc`, returning the index offset of part's bags.
int append_td(TreeDecomposition& acc, const TreeDecomposition& part) {
    int off = static_cast<int>(acc.bags.size());
    for (auto& b : part.bags) acc.bags.push_back(b);
    for (auto [x, y] : part.tree_edges) acc.tree_edges.emplace_back(x + off, y + off);
    return off;
}

int find_bag_containing(const TreeDecomposition& td, const VertexSet& s, int from, int to) {
    for (int i = from; i < to; ++i)
        if (set_difference(s, td.bags[i]).empty()) return i;
    return -1;
}

TreeDecomposition td_of_node(const DecompositionTree& tree, int node) {
    const DecompositionNode& n = tree.nodes.at(node);
    switch (n.type) {
        case DecompositionNode::Type::leaf:
            return leaf_decomposition(n.graph);
        case DecompositionNode::Type::clique_cut: {
            TreeDecomposition acc;
            acc.bags.push_back(n.cut_clique);  // may be empty (disconnected graph)
            for (int c : n.children) {
                TreeDecomposition part = td_of_node(tree, c);
                int off = append_td(acc, part);
                int host = n.cut_clique.empty()
                               ? off
                               : find_bag_containing(acc, n.cut_clique, off,
                                                     static_cast<int>(acc.bags.size()));
                if (host == -1) throw std::logic_error("clique-sum join: no bag contains the clique");
                acc.tree_edges.emplace_back(0, host);
            }
            return acc;
        }
        case DecompositionNode::Type::proper_cut: {
            const auto& ps = *n.separation;
            TreeDecomposition t1 = td_of_node(tree, n.children.at(0));
            TreeDecomposition t2 = td_of_node(tree, n.children.at(1));
            // splice the marker out: substituting m -> b turns the bag
            // covering edge {a,m} into one covering {a,b}, and keeps all
            // subtrees connected because some bag contains {m,b}
            auto splice = [](TreeDecomposition& td, int marker, int b) {
                for (auto& bag : td.bags)
                    if (set_contains(bag, marker))
                        bag = make_set(set_union(set_difference(bag, {marker}), {b}));
            };
            splice(t1, n.marker1, ps.b);
            splice(t2, n.marker2, ps.b);
            TreeDecomposition acc;
            int off1 = append_td(acc, t1);
            int off2 = append_td(acc, t2);
            VertexSet ab = make_set({ps.a, ps.b});
            int h1 = find_bag_containing(acc, ab, off1, off2);
            int h2 = find_bag_containing(acc, ab, off2, static_cast<int>(acc.bags.size()));
            if (h1 == -1 || h2 == -1) throw std::logic_error("proper-cut join: no {a,b} bag");
            acc.tree_edges.emplace_back(h1, h2);
            return acc;
        }
    }
    throw std::logic_error("td_of_node: bad node type");
}

}  // namespace

TreeDecompositionResult tree_decomposition_subcubic(const Graph& g) {
    TreeDecompositionResult res;
    DecomposeResult dec = decompose_subcubic(g);
    if (!dec.ok()) {
        res.violation = dec.violation;
        return res;
    }
    res.td = td_of_node(*dec.tree, 0);
    return res;
}

}  // namespace holeforge
