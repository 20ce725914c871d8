#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "holeforge/generators.hpp"
#include "holeforge/graph.hpp"
#include "holeforge/minor.hpp"
#include "holeforge/treewidth.hpp"
#include "holeforge/walls.hpp"

using namespace holeforge;

TEST_CASE("exact treewidth on known graphs") {
    CHECK(exact_treewidth(complete_graph(5)) == 4);
    CHECK(exact_treewidth(complete_graph(2)) == 1);
    Graph tree;
    tree.add_edge(0, 1);
    tree.add_edge(1, 2);
    tree.add_edge(1, 3);
    tree.add_edge(3, 4);
    CHECK(exact_treewidth(tree) == 1);
    CHECK(exact_treewidth(cycle_graph(9)) == 2);
    CHECK(exact_treewidth(grid(2, 2)) == 2);
    CHECK(exact_treewidth(grid(3, 3)) == 3);
    CHECK(exact_treewidth(grid(4, 4)) == 4);
    CHECK(exact_treewidth(make_cube()) == 3);
    CHECK_THROWS(exact_treewidth(grid(5, 5)));  // over the cap
}

TEST_CASE("tree decomposition validation") {
    Graph g = complete_graph(4);
    TreeDecomposition single;
    single.bags.push_back(g.vertices());
    auto v = validate_tree_decomposition(g, single);
    CHECK(v.valid);
    CHECK(v.width == 3);

    // missing edge coverage
    TreeDecomposition bad;
    bad.bags.push_back({0, 1});
    bad.bags.push_back({2, 3});
    bad.tree_edges.emplace_back(0, 1);
    auto vb = validate_tree_decomposition(g, bad);
    CHECK_FALSE(vb.valid);

    // broken subtree property
    Graph path = path_graph(3);
    TreeDecomposition split;
    split.bags.push_back({0, 1});
    split.bags.push_back({1, 2});
    split.bags.push_back({0});
    split.tree_edges.emplace_back(0, 1);
    split.tree_edges.emplace_back(1, 2);
    auto vs = validate_tree_decomposition(path, split);
    CHECK_FALSE(vs.valid);

    // malformed tree (cycle)
    TreeDecomposition cyc;
    cyc.bags = {{0, 1}, {1, 2}, {0, 2}};
    cyc.tree_edges = {{0, 1}, {1, 2}, {2, 0}};
    CHECK_FALSE(validate_tree_decomposition(path, cyc).valid);
}

TEST_CASE("validated width is never below the exact width") {
    std::mt19937 rng(7);
    for (int t = 0; t < 20; ++t) {
        int n = 5 + static_cast<int>(rng() % 6);
        Graph g = Graph::with_vertices(n);
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (rng() % 3 == 0) g.add_edge(i, j);
        // trivial decomposition: one bag
        TreeDecomposition td;
        td.bags.push_back(g.vertices());
        auto v = validate_tree_decomposition(g, td);
        REQUIRE(v.valid);
        CHECK(v.width >= exact_treewidth(g));
    }
}

TEST_CASE("td format round trip") {
    Graph g = cycle_graph(5);
    TreeDecomposition td;
    td.bags = {{0, 1, 2}, {0, 2, 3}, {0, 3, 4}};
    td.tree_edges = {{0, 1}, {1, 2}};
    REQUIRE(validate_tree_decomposition(g, td).valid);
    std::string text = write_td(g, td);
    TreeDecomposition back = parse_td(text);
    CHECK(back.bags == td.bags);
    CHECK(back.tree_edges == td.tree_edges);
    CHECK(text.find("s td 3 3 5") == 0);
}

TEST_CASE("K_l minors") {
    auto k6 = has_minor(complete_graph(6), 6);
    REQUIRE(k6.has_value());
    CHECK(validate_minor_witness(complete_graph(6), 6, *k6));
    for (auto& b : k6->branch_sets) CHECK(b.size() == 1);

    CHECK_FALSE(has_minor(complete_graph(5), 6).has_value());
    CHECK(has_minor(complete_graph(5), 5).has_value());
    CHECK(has_minor(cycle_graph(8), 3).has_value());  // contract the cycle to a triangle
    CHECK_FALSE(has_minor(path_graph(8), 3).has_value());
    CHECK(has_minor(cycle_graph(8), 2).has_value());

    // planar sanity: grids have no K5 minor
    CHECK_FALSE(has_minor(grid(4, 4), 5).has_value());
    CHECK(has_minor(grid(4, 4), 4).has_value());
    CHECK_THROWS(has_minor(grid(5, 5), 6));  // cap
    CHECK_THROWS(has_minor(complete_graph(4), 7));
}

TEST_CASE("minor implies treewidth lower bound") {
    for (const Graph& g : {complete_graph(6), grid(3, 4), triangulated_grid(3, 3)}) {
        for (int l = 2; l <= std::min(6, g.vertex_count()); ++l) {
            auto w = has_minor(g, l);
            if (w) CHECK(exact_treewidth(g) >= l - 1);
        }
    }
}

TEST_CASE("treewidth monotone under single contraction (random sample)") {
    std::mt19937 rng(42);
    for (int t = 0; t < 25; ++t) {
        int n = 6 + static_cast<int>(rng() % 7);  // <= 12
        Graph g = Graph::with_vertices(n);
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (rng() % 3 == 0) g.add_edge(i, j);
        if (g.edge_count() == 0) continue;
        auto es = g.edges();
        auto e = es[rng() % es.size()];
        Graph contracted = contract_edge(g, e.first, e.second);
        CHECK(exact_treewidth(contracted) <= exact_treewidth(g));
    }
}
