#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "holeforge/detectors.hpp"
#include "holeforge/generators.hpp"
#include "holeforge/graph.hpp"
#include "holeforge/walls.hpp"

using namespace holeforge;

namespace {

Graph chordless_wall_graph(int n, int m) {
    std::map<WallEdge, int> once;
    for (auto& e : elementary_wall_edges(n, m)) once[e] = 1;
    return make_wall(n, m, once).graph;
}

}  // namespace

TEST_CASE("find_hole basics") {
    auto c4 = find_hole(cycle_graph(4), HoleParity::even);
    REQUIRE(c4.found());
    CHECK(c4.witness->length() == 4);
    CHECK(validate_hole(cycle_graph(4), *c4.witness));

    auto cube = find_hole(make_cube(), HoleParity::even);
    REQUIRE(cube.found());
    CHECK(cube.witness->length() % 2 == 0);
    CHECK(validate_hole(make_cube(), *cube.witness));

    // chordal graphs have no holes
    Graph chordal = complete_graph(4);
    chordal.add_vertex(4);
    chordal.add_edge(4, 0);
    chordal.add_edge(4, 1);
    CHECK(find_hole(chordal).status == SearchStatus::none);

    CHECK(find_hole(cycle_graph(5), HoleParity::even).status == SearchStatus::none);
    CHECK(find_hole(cycle_graph(5), HoleParity::odd).found());
}

TEST_CASE("hole enumeration counts") {
    // C6 has exactly one hole; the cube has its 6 faces... as induced 4-holes
    int count = 0;
    for_each_hole(cycle_graph(6), [&](const std::vector<int>&) {
        ++count;
        return true;
    });
    CHECK(count == 1);
    count = 0;
    for_each_hole(make_cube(), [&](const std::vector<int>& h) {
        CHECK(validate_hole(make_cube(), HoleWitness{h}));
        ++count;
        return true;
    });
    CHECK(count == 10);  // 6 faces + 4 induced hexagons (one per antipodal pair)
}

TEST_CASE("find_theta") {
    for (auto [l1, l2, l3] : {std::tuple{2, 2, 2}, {2, 3, 3}, {3, 4, 5}}) {
        Graph t = make_theta(l1, l2, l3);
        auto r = find_theta(t);
        REQUIRE(r.found());
        CHECK(validate_theta(t, *r.witness));
    }
    CHECK(find_theta(complete_graph(5)).status == SearchStatus::none);
    CHECK(find_theta(make_prism(2, 2, 2)).status == SearchStatus::none);

    // paper figure: a theta in the (3x3)-wall
    Wall w33 = elementary_wall(3, 3);
    auto r = find_theta(w33.graph);
    REQUIRE(r.found());
    CHECK(validate_theta(w33.graph, *r.witness));
}

TEST_CASE("find_prism") {
    for (auto [l1, l2, l3] : {std::tuple{1, 1, 1}, {1, 2, 2}, {2, 3, 4}}) {
        Graph p = make_prism(l1, l2, l3);
        auto r = find_prism(p);
        REQUIRE(r.found());
        CHECK(validate_prism(p, *r.witness));
    }
    CHECK(find_prism(make_theta(2, 2, 2)).status == SearchStatus::none);
    CHECK(find_prism(elementary_wall(3, 3).graph).status == SearchStatus::none);

    // paper figure: a prism in the line graph of a chordless (3x3)-wall
    auto lg = line_graph(chordless_wall_graph(3, 3));
    auto r = find_prism(lg.graph);
    REQUIRE(r.found());
    CHECK(validate_prism(lg.graph, *r.witness));
}

TEST_CASE("find_pyramid") {
    Graph p = make_pyramid(1, 2, 2);
    auto r = find_pyramid(p);
    REQUIRE(r.found());
    CHECK(validate_pyramid(p, *r.witness));
    CHECK(find_pyramid(make_theta(2, 2, 2)).status == SearchStatus::none);
    CHECK(find_pyramid(make_prism(2, 2, 2)).status == SearchStatus::none);

    Graph p2 = make_pyramid(2, 2, 3);
    auto r2 = find_pyramid(p2);
    REQUIRE(r2.found());
    CHECK(validate_pyramid(p2, *r2.witness));
}

TEST_CASE("generator/detector pairwise distinctness") {
    Graph theta = make_theta(2, 3, 3);
    Graph prism = make_prism(2, 2, 2);
    Graph pyramid = make_pyramid(2, 2, 2);
    CHECK(find_theta(theta).found());
    CHECK_FALSE(find_prism(theta).found());
    CHECK_FALSE(find_pyramid(theta).found());
    CHECK(find_prism(prism).found());
    CHECK_FALSE(find_theta(prism).found());
    CHECK_FALSE(find_pyramid(prism).found());
    CHECK(find_pyramid(pyramid).found());
    CHECK_FALSE(find_theta(pyramid).found());
    CHECK_FALSE(find_prism(pyramid).found());
}

TEST_CASE("find_wheel") {
    Graph w = make_wheel(5, {0, 1, 2});
    auto r = find_wheel(w);
    REQUIRE(r.found());
    CHECK(validate_wheel(w, *r.witness));
    CHECK(find_wheel(cycle_graph(6)).status == SearchStatus::none);

    // a pyramid contains wheels, but none of them is proper
    Graph p = make_pyramid(1, 2, 2);
    CHECK(find_wheel(p, false).found());
    CHECK(find_wheel(p, true).status == SearchStatus::none);

    // wheel with spread spokes is proper
    Graph pw = make_wheel(9, {0, 3, 6});
    auto rp = find_wheel(pw, true);
    REQUIRE(rp.found());
}

TEST_CASE("major vertices") {
    // wheel center with 3 pairwise non-adjacent spokes is major
    Graph w = make_wheel(9, {0, 3, 6});
    std::vector<int> rim;
    for (int i = 0; i < 9; ++i) rim.push_back(i);
    auto majors = major_vertices(w, rim);
    CHECK(majors == VertexSet{9});

    // vertex with two adjacent neighbors on the hole is not major
    Graph g = cycle_graph(6);
    g.add_vertex(6);
    g.add_edge(6, 0);
    g.add_edge(6, 1);
    std::vector<int> hole{0, 1, 2, 3, 4, 5};
    CHECK(major_vertices(g, hole).empty());

    CHECK_THROWS(major_vertices(complete_graph(5), {0, 1, 2, 3}));
}

TEST_CASE("sectors") {
    Graph w = make_wheel(9, {0, 3, 6});
    std::vector<int> rim;
    for (int i = 0; i < 9; ++i) rim.push_back(i);
    auto secs = sectors(w, rim, 9);
    REQUIRE(secs.size() == 3);
    int total_edges = 0;
    for (auto& s : secs) {
        CHECK(s.size() == 4);  // length 3
        total_edges += static_cast<int>(s.size()) - 1;
    }
    CHECK(total_edges == 9);  // sectors edgewise partition the hole

    // two adjacent neighbors: one sector of length 1 plus one long sector
    Graph g = cycle_graph(6);
    g.add_vertex(6);
    g.add_edge(6, 0);
    g.add_edge(6, 1);
    auto s2 = sectors(g, {0, 1, 2, 3, 4, 5}, 6);
    REQUIRE(s2.size() == 2);
    std::vector<size_t> sizes{s2[0].size(), s2[1].size()};
    std::sort(sizes.begin(), sizes.end());
    CHECK(sizes[0] == 2);
    CHECK(sizes[1] == 6);

    Graph h = cycle_graph(6);
    h.add_vertex(6);
    h.add_edge(6, 0);
    CHECK_THROWS(sectors(h, {0, 1, 2, 3, 4, 5}, 6));
}

TEST_CASE("sector containment for a wheel") {
    Graph w = make_wheel(9, {0, 3, 6});
    std::vector<int> rim;
    for (int i = 0; i < 9; ++i) rim.push_back(i);
    // components of G - N[center]: the three sector interiors
    auto comps = components_after_removing(w, closed_neighborhood(w, {9}));
    REQUIRE(comps.size() == 3);
    for (auto& c : comps) {
        auto sector = check_sector_containment(w, rim, 9, c);
        REQUIRE(sector.has_value());
        // the component is exactly this sector's interior
        VertexSet interior(sector->begin() + 1, sector->end() - 1);
        CHECK(make_set(std::vector<int>(interior.begin(), interior.end())) == c);
    }
    CHECK_THROWS(check_sector_containment(w, rim, 9, {0}));
}

TEST_CASE("is_ring") {
    auto r = is_ring(cycle_graph(6));
    REQUIRE(r.found());
    CHECK(r.witness->size() == 6);
    CHECK(validate_ring_partition(cycle_graph(6), *r.witness));

    // by the definition (k >= 3 is allowed and the anticompleteness
    // condition is vacuous at k = 3), complete graphs are rings
    auto k4 = is_ring(complete_graph(4));
    REQUIRE(k4.found());
    CHECK(validate_ring_partition(complete_graph(4), *k4.witness));

    // a path is not a ring
    CHECK(is_ring(path_graph(5)).status == SearchStatus::none);
    // neither is a star
    Graph star;
    for (int v : {0, 1, 2, 3}) star.add_vertex(v);
    for (int v : {1, 2, 3}) star.add_edge(0, v);
    CHECK(is_ring(star).status == SearchStatus::none);

    RingSpec spec{{2, 1, 2, 1, 1}};
    Graph ring = make_ring(spec);
    auto rr = is_ring(ring);
    REQUIRE(rr.found());
    CHECK(validate_ring_partition(ring, *rr.witness));
    CHECK(validate_ring_partition(ring, ring_parts(spec)));
}

TEST_CASE("is_7hyperantihole") {
    Graph g = make_7hyperantihole({1, 1, 1, 1, 1, 1, 1});
    auto r = is_7hyperantihole(g);
    REQUIRE(r.found());
    CHECK(validate_7hyperantihole_partition(g, *r.witness));

    Graph g2 = make_7hyperantihole({2, 1, 1, 2, 1, 1, 1});
    auto r2 = is_7hyperantihole(g2);
    REQUIRE(r2.found());
    CHECK(validate_7hyperantihole_partition(g2, *r2.witness));

    CHECK(is_7hyperantihole(cycle_graph(7)).status == SearchStatus::none);
    CHECK(is_7hyperantihole(complete_graph(7)).status == SearchStatus::none);
}

TEST_CASE("whole-graph recognizers") {
    CHECK(is_cycle_graph(cycle_graph(5)));
    CHECK_FALSE(is_cycle_graph(path_graph(5)));
    CHECK(is_complete_graph(complete_graph(4)));
    CHECK(is_cube_graph(make_cube()));
    CHECK_FALSE(is_cube_graph(cycle_graph(8)));

    CHECK(as_pyramid_graph(make_pyramid(1, 2, 2)).has_value());
    CHECK(as_pyramid_graph(make_pyramid(2, 3, 4)).has_value());
    CHECK_FALSE(as_pyramid_graph(make_prism(1, 1, 1)).has_value());

    CHECK(as_proper_wheel_graph(make_wheel(9, {0, 3, 6})).has_value());
    // the pyramid looked at as a wheel is not a proper wheel
    CHECK_FALSE(as_proper_wheel_graph(make_pyramid(1, 2, 2)).has_value());
    CHECK_FALSE(as_proper_wheel_graph(cycle_graph(7)).has_value());

    for (auto params : {std::array{1, 1, 1, 1, 1}, {2, 1, 1, 2, 3}, {1, 2, 1, 2, 1}}) {
        Graph e = make_extended_prism(params[0], params[1], params[2], params[3], params[4]);
        auto w = as_extended_prism_graph(e);
        REQUIRE(w.has_value());
        CHECK(validate_extended_prism(e, *w));
    }
    CHECK_FALSE(as_extended_prism_graph(make_prism(2, 2, 2)).has_value());
    CHECK_FALSE(as_extended_prism_graph(make_cube()).has_value());
}

TEST_CASE("lemma: every theta and prism contains an even hole (small slice)") {
    for (int l1 = 2; l1 <= 4; ++l1)
        for (int l2 = l1; l2 <= 4; ++l2)
            for (int l3 = l2; l3 <= 4; ++l3) {
                Graph t = make_theta(l1, l2, l3);
                CHECK(find_hole(t, HoleParity::even).found());
            }
    for (int l1 = 1; l1 <= 3; ++l1)
        for (int l2 = l1; l2 <= 3; ++l2)
            for (int l3 = l2; l3 <= 3; ++l3) {
                Graph p = make_prism(l1, l2, l3);
                CHECK(find_hole(p, HoleParity::even).found());
            }
}

TEST_CASE("deadline produces inconclusive, not a wrong answer") {
    Graph big = elementary_wall(6, 6).graph;
    auto r = find_hole(big, HoleParity::even, Deadline::after(std::chrono::milliseconds(0)));
    CHECK(r.status == SearchStatus::inconclusive);
    std::map<WallEdge, int> once;
    for (auto& e : elementary_wall_edges(4, 4)) once[e] = 1;
    auto lg = line_graph(make_wall(4, 4, once).graph);
    auto rp = find_prism(lg.graph, Deadline::after(std::chrono::milliseconds(0)));
    CHECK(rp.status == SearchStatus::inconclusive);
}
