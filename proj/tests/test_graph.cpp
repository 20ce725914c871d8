#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "holeforge/contraction.hpp"
#include "holeforge/generators.hpp"
#include "holeforge/graph.hpp"
#include "holeforge/io.hpp"
#include "holeforge/walls.hpp"

using namespace holeforge;

TEST_CASE("induced subgraph basics") {
    Graph k4 = complete_graph(4);
    Graph t = induced_subgraph(k4, {0, 1, 2});
    CHECK(t.vertex_count() == 3);
    CHECK(t.edge_count() == 3);
    CHECK(isomorphic(t, complete_graph(3)));

    Graph c6 = cycle_graph(6);
    Graph alt = induced_subgraph(c6, {0, 2, 4});
    CHECK(alt.vertex_count() == 3);
    CHECK(alt.edge_count() == 0);

    CHECK(induced_subgraph(c6, c6.vertices()) == c6);
    CHECK_THROWS(induced_subgraph(c6, {0, 99}));
}

TEST_CASE("induced subgraph of a wall row is a chordless path") {
    Wall w = elementary_wall(5, 5);
    VertexSet row(w.horizontal_paths[0].begin(), w.horizontal_paths[0].end());
    row = make_set(std::vector<int>(row.begin(), row.end()));
    Graph p = induced_subgraph(w.graph, row);
    CHECK(p.vertex_count() == 5);
    CHECK(p.edge_count() == 4);
    int deg1 = 0;
    for (int v : p.vertices()) {
        CHECK(p.degree(v) <= 2);
        if (p.degree(v) == 1) ++deg1;
    }
    CHECK(deg1 == 2);
    CHECK(is_connected(p));
}

TEST_CASE("line graph counts and degrees") {
    Graph k3 = complete_graph(3);
    auto l = line_graph(k3);
    CHECK(isomorphic(l.graph, k3));

    Graph p4 = path_graph(4);  // path of length 3
    auto lp = line_graph(p4);
    CHECK(isomorphic(lp.graph, path_graph(3)));

    // |V(L(G))| = |E(G)|, deg of edge uv in L = deg(u)+deg(v)-2
    for (const Graph& g : {complete_graph(5), cycle_graph(7), grid(3, 4)}) {
        auto lg = line_graph(g);
        CHECK(lg.graph.vertex_count() == g.edge_count());
        for (int i = 0; i < lg.graph.vertex_count(); ++i) {
            auto [u, v] = lg.edge_of[i];
            CHECK(lg.graph.degree(i) == g.degree(u) + g.degree(v) - 2);
        }
    }
}

TEST_CASE("subdivision") {
    Graph k3 = complete_graph(3);
    CHECK(subdivide(k3, {0, 1}, 0) == k3);
    Graph c4 = subdivide(k3, {0, 1}, 1);
    CHECK(isomorphic(c4, cycle_graph(4)));
    CHECK_THROWS(subdivide(k3, {0, 5}, 1));

    // components and cycle-space dimension are preserved
    for (const Graph& g : {grid(3, 3), cycle_graph(5)}) {
        Graph s = subdivide(g, g.edges()[2], 3);
        CHECK(connected_components(s).size() == connected_components(g).size());
        int dim_g = g.edge_count() - g.vertex_count() + static_cast<int>(connected_components(g).size());
        int dim_s = s.edge_count() - s.vertex_count() + static_cast<int>(connected_components(s).size());
        CHECK(dim_g == dim_s);
    }
}

TEST_CASE("chordless graph check") {
    // An unsubdivided rung joining two degree-3 vertices is a chord of the
    // cycle around its two bricks, so the elementary wall is not chordless;
    // subdividing every edge once makes it so.
    CHECK_FALSE(is_chordless_graph(elementary_wall(4, 4).graph));
    std::map<WallEdge, int> once;
    for (auto& e : elementary_wall_edges(4, 4)) once[e] = 1;
    CHECK(is_chordless_graph(make_wall(4, 4, once).graph));
    CHECK_FALSE(is_chordless_graph(complete_graph(4)));
    Graph tree;
    tree.add_edge(0, 1);
    tree.add_edge(1, 2);
    tree.add_edge(1, 3);
    CHECK(is_chordless_graph(tree));
    CHECK(is_chordless_graph(cycle_graph(6)));
    // C4 plus one chordless pendant stays chordless; C4 plus chord does not.
    Graph c5 = cycle_graph(5);
    c5.add_edge(0, 2);
    CHECK_FALSE(is_chordless_graph(c5));
}

TEST_CASE("distance") {
    Graph g33 = grid(3, 3);
    CHECK(distance(g33, {0}, {0}) == 0);
    CHECK(distance(g33, {grid_id(1, 1, 3)}, {grid_id(3, 3, 3)}) == 4);
    Graph two = complete_graph(3);
    two.add_vertex(10);
    CHECK(distance(two, {0}, {10}) == kInfDist);
    CHECK_THROWS(distance(two, {}, {0}));
}

TEST_CASE("contraction map verification") {
    Graph c5 = cycle_graph(5);
    ContractionMap id;
    for (int v : c5.vertices()) id[v] = v;
    CHECK(verify_contraction_map(c5, c5, id));

    // collapse edge {4,0} to get C4
    Graph c4 = cycle_graph(4);
    ContractionMap phi{{0, 0}, {1, 1}, {2, 2}, {3, 3}, {4, 0}};
    CHECK(verify_contraction_map(c5, c4, phi));

    // two non-adjacent C5 vertices to one image vertex: disconnected pre-image
    ContractionMap bad{{0, 0}, {1, 1}, {2, 0}, {3, 2}, {4, 3}};
    Graph h;
    for (int v : {0, 1, 2, 3}) h.add_vertex(v);
    h.add_edge(0, 1);
    h.add_edge(1, 2);  // shape irrelevant; condition 1 must fail
    h.add_edge(2, 3);
    h.add_edge(3, 0);
    auto chk = check_contraction_map(c5, h, bad);
    CHECK_FALSE(chk.ok);
    bool saw_disconnected = false;
    for (auto& s : chk.violations)
        if (s.find("disconnected") != std::string::npos) saw_disconnected = true;
    CHECK(saw_disconnected);

    // non-surjective map is a violation, not an exception
    ContractionMap nonsurj;
    for (int v : c5.vertices()) nonsurj[v] = 0;
    Graph h2 = Graph::with_vertices(2);
    auto chk2 = check_contraction_map(c5, h2, nonsurj);
    CHECK_FALSE(chk2.ok);
}

TEST_CASE("composing a verified map with a single-edge contraction stays verified") {
    Graph g = grid(3, 3);
    ContractionMap id;
    for (int v : g.vertices()) id[v] = v;
    REQUIRE(verify_contraction_map(g, g, id));
    auto e = g.edges()[4];
    Graph h = contract_edge(g, e.first, e.second);
    ContractionMap phi;
    for (int v : g.vertices()) phi[v] = (v == e.second) ? e.first : v;
    CHECK(verify_contraction_map(g, h, phi));
}

TEST_CASE("edge list round trip") {
    Graph w = elementary_wall(3, 3).graph;
    std::string text = write_edge_list(w);
    Graph back = parse_edge_list(text);
    CHECK(back.vertex_count() == w.vertex_count());
    CHECK(back.edge_count() == w.edge_count());
    CHECK(write_edge_list(back) == text);  // canonical fixpoint
    CHECK(isomorphic(back, w));
}

TEST_CASE("dot export mentions every vertex") {
    Graph g = complete_graph(3);
    auto dot = write_dot(g);
    CHECK(dot.find("v0 -- v1") != std::string::npos);
    CHECK(dot.find("graph G") != std::string::npos);
}

TEST_CASE("isomorphism sanity") {
    CHECK(isomorphic(cycle_graph(6), subdivide(cycle_graph(5), {0, 1}, 1)));
    CHECK_FALSE(isomorphic(cycle_graph(6), path_graph(6)));
    CHECK(isomorphic(make_cube(), make_cube()));
}
