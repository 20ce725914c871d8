#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "holeforge/generators.hpp"
#include "holeforge/graph.hpp"
#include "holeforge/walls.hpp"

using namespace holeforge;

TEST_CASE("elementary wall vertex counts and degrees") {
    for (int n = 2; n <= 6; ++n)
        for (int m = 2; m <= 6; ++m) {
            Wall w = elementary_wall(n, m);
            CHECK(w.graph.vertex_count() == 2 * m * (n - 1));
            for (int v : w.graph.vertices()) {
                CHECK(w.graph.degree(v) >= 2);
                CHECK(w.graph.degree(v) <= 3);
            }
            CHECK(is_connected(w.graph));
            // horizontal paths pairwise vertex-disjoint
            std::set<int> seen;
            for (auto& hp : w.horizontal_paths)
                for (int v : hp) {
                    CHECK(seen.count(v) == 0);
                    seen.insert(v);
                }
            CHECK(static_cast<int>(seen.size()) == w.graph.vertex_count());
            // each vertical path meets each horizontal path
            for (auto& vp : w.vertical_paths) {
                std::set<int> vs(vp.begin(), vp.end());
                for (auto& hp : w.horizontal_paths) {
                    bool meets = false;
                    for (int v : hp)
                        if (vs.count(v)) meets = true;
                    CHECK(meets);
                }
            }
            // paths really are paths
            auto check_path = [&](const std::vector<int>& p) {
                for (size_t t = 0; t + 1 < p.size(); ++t) CHECK(w.graph.has_edge(p[t], p[t + 1]));
            };
            for (auto& hp : w.horizontal_paths) check_path(hp);
            for (auto& vp : w.vertical_paths) check_path(vp);
        }
}

TEST_CASE("elementary (5x5)-wall matches the figure") {
    Wall w = elementary_wall(5, 5);
    CHECK(w.graph.vertex_count() == 40);
    CHECK(w.graph.max_degree() == 3);
    // top row holds odd columns, bottom row (n odd) even columns
    CHECK(w.has_coord({1, 1}));
    CHECK_FALSE(w.has_coord({1, 2}));
    CHECK(w.has_coord({5, 2}));
    CHECK_FALSE(w.has_coord({5, 1}));
}

TEST_CASE("elementary (2x2)-wall degenerates to C4") {
    Wall w = elementary_wall(2, 2);
    CHECK(isomorphic(w.graph, cycle_graph(4)));
}

TEST_CASE("subdivided wall keeps wall structure") {
    std::map<WallEdge, int> sub;
    auto edges = elementary_wall_edges(3, 3);
    sub[edges[0]] = 2;
    sub[edges[5]] = 1;
    Wall w = make_wall(3, 3, sub);
    CHECK(w.graph.vertex_count() == elementary_wall(3, 3).graph.vertex_count() + 3);
    for (int v : w.graph.vertices()) {
        CHECK(w.graph.degree(v) >= 2);
        CHECK(w.graph.degree(v) <= 3);
    }
    CHECK(w.branch_vertices == elementary_wall(3, 3).branch_vertices);
    auto rec = recognize_wall(w.graph);
    REQUIRE(rec.has_value());
    CHECK(rec->first == 3);
    CHECK(rec->second == 3);
    CHECK_THROWS(make_wall(3, 3, {{make_wall_edge({1, 1}, {9, 9}), 1}}));
}

TEST_CASE("all-zero subdivision is the elementary wall") {
    Wall w = make_wall(4, 3, {});
    CHECK(w.graph == elementary_wall(4, 3).graph);
}

TEST_CASE("wall recognizer accepts walls and rejects non-walls") {
    for (int n = 2; n <= 5; ++n)
        for (int m = 2; m <= 5; ++m) {
            Wall w = elementary_wall(n, m);
            CHECK_MESSAGE(recognize_wall_as(w.graph, n, m), "elementary wall ", n, "x", m);
            CHECK(recognize_wall(w.graph).has_value());
        }
    // dimensions are not unique: the elementary (3x2)-wall subdivides the
    // elementary (2x3)-wall
    CHECK(recognize_wall_as(elementary_wall(3, 2).graph, 2, 3));
    CHECK(recognize_wall(cycle_graph(7)) == std::make_pair(2, 2));
    CHECK_FALSE(recognize_wall(complete_graph(4)).has_value());
    CHECK_FALSE(recognize_wall(grid(3, 3)).has_value());
    // a wall is a subdivision: shrinking a mandatory chain must be rejected
    Graph not_wall = contract_edge(elementary_wall(3, 3).graph, 0, 1);
    CHECK_FALSE(recognize_wall(not_wall).has_value());
}

TEST_CASE("net graph replacement on the claw gives the net graph") {
    Graph claw;
    for (int v : {0, 1, 2, 3}) claw.add_vertex(v);
    for (int v : {1, 2, 3}) claw.add_edge(0, v);
    auto rep = net_graph_replacement(claw, 0);
    CHECK(rep.graph.vertex_count() == 6);
    CHECK(rep.graph.edge_count() == 6);
    // net graph: triangle with a pendant at each corner
    int deg1 = 0, deg3 = 0;
    for (int v : rep.graph.vertices()) {
        if (rep.graph.degree(v) == 1) ++deg1;
        if (rep.graph.degree(v) == 3) ++deg3;
    }
    CHECK(deg1 == 3);
    CHECK(deg3 == 3);
    CHECK_THROWS(net_graph_replacement(claw, 1));
}

TEST_CASE("net replacement bookkeeping: |V|+2, |E|+3, degree-3 count") {
    Wall w = elementary_wall(4, 4);
    int v = w.branch_vertices[2];
    int threes_before = static_cast<int>(w.branch_vertices.size());
    auto rep = net_graph_replacement(w.graph, v);
    CHECK(rep.graph.vertex_count() == w.graph.vertex_count() + 2);
    CHECK(rep.graph.edge_count() == w.graph.edge_count() + 3);
    int threes_after = 0;
    for (int u : rep.graph.vertices())
        if (rep.graph.degree(u) == 3) ++threes_after;
    CHECK(threes_after == threes_before + 3 - 1);
}

TEST_CASE("stone wall basics") {
    Wall base = elementary_wall(4, 4);
    StoneWall none = stone_wall(4, 4, {});
    CHECK(none.graph == base.graph);

    VertexSet all = base.branch_vertices;
    StoneWall full = stone_wall(4, 4, all);
    CHECK(full.graph.vertex_count() == base.graph.vertex_count() + 2 * static_cast<int>(all.size()));
    CHECK(full.graph.max_degree() == 3);

    VertexSet some = {base.branch_vertices[0], base.branch_vertices[3], base.branch_vertices[5]};
    StoneWall sw = stone_wall(4, 4, some);
    auto shape = recognize_stone_wall(sw.graph);
    REQUIRE(shape.has_value());
    CHECK(shape->rows == 4);
    CHECK(shape->cols == 4);
    CHECK(shape->replaced == 3);
    CHECK_FALSE(shape->homogeneous());

    // undoing all replacements recovers the base wall
    Graph undone = sw.graph;
    for (int v : sw.replaced) {
        auto tri = sw.triangle.at(v);
        VertexSet s = make_set({tri[0], tri[1], tri[2]});
        undone = contract_set(undone, s, s[0]);
    }
    CHECK(isomorphic(undone, base.graph));

    // non-branch vertex rejected
    int deg2 = -1;
    for (int v : base.graph.vertices())
        if (base.graph.degree(v) == 2) deg2 = v;
    CHECK_THROWS(stone_wall(4, 4, {deg2}));
}

TEST_CASE("all-replaced stone wall is the line graph of a chordless wall") {
    for (int n = 3; n <= 4; ++n)
        for (int m = 3; m <= 4; ++m) {
            Wall base = elementary_wall(n, m);
            StoneWall full = make_stone_wall(base, base.branch_vertices);
            auto shape = recognize_stone_wall(full.graph);
            REQUIRE(shape.has_value());
            CHECK(shape->is_line_graph_of_wall());
            CHECK(is_homogeneous_stone_wall(full.graph));

            // explicit cross-check against an actual line graph: add one
            // subdivision vertex on each path connecting two degree-3
            // vertices, then take the line graph
            Wall w = elementary_wall(n, m);
            std::map<WallEdge, int> sub;
            std::set<std::pair<int, int>> chain_started;  // (branch, first step)
            for (int b : w.branch_vertices) {
                for (int first : w.graph.neighbors(b)) {
                    if (chain_started.count({b, first})) continue;
                    int prev = b, cur = first;
                    while (w.graph.degree(cur) == 2) {
                        int nxt = w.graph.neighbors(cur)[0] == prev ? w.graph.neighbors(cur)[1]
                                                                    : w.graph.neighbors(cur)[0];
                        prev = cur;
                        cur = nxt;
                    }
                    chain_started.insert({b, first});
                    chain_started.insert({cur, prev});
                    sub[make_wall_edge(w.id_to_coord.at(b), w.id_to_coord.at(first))] = 1;
                }
            }
            Wall chordless = make_wall(n, m, sub);
            REQUIRE(is_chordless_graph(chordless.graph));
            auto lg = line_graph(chordless.graph);
            CHECK(isomorphic(full.graph, lg.graph));
        }
}

TEST_CASE("subwall extraction (alternating rows and columns)") {
    Wall w = elementary_wall(5, 5);
    Wall sub = extract_subwall(w, {1, 3, 5}, {1, 3, 5});
    auto rec = recognize_wall(sub.graph);
    REQUIRE(rec.has_value());
    CHECK(rec->first == 3);
    CHECK(rec->second == 3);
    // output vertices inside the union of chosen paths
    VertexSet allowed;
    for (int r : {1, 3, 5})
        for (int v : w.horizontal_paths[r - 1]) allowed.push_back(v);
    for (int c : {1, 3, 5})
        for (int v : w.vertical_paths[c - 1]) allowed.push_back(v);
    allowed = make_set(std::move(allowed));
    for (int v : sub.graph.vertices()) CHECK(set_contains(allowed, v));
    // and it is induced in the host wall
    CHECK(induced_subgraph(w.graph, sub.graph.vertices()) == sub.graph);

    Wall corners = extract_subwall(w, {1, 5}, {1, 5});
    auto rec2 = recognize_wall(corners.graph);
    REQUIRE(rec2.has_value());
    CHECK(*rec2 == std::make_pair(2, 2));  // a long induced cycle

    CHECK_THROWS(extract_subwall(w, {1, 2}, {1, 3}));  // adjacent rows
    CHECK_THROWS(extract_subwall(w, {1}, {1, 3}));
}
