#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "holeforge/corpus.hpp"
#include "holeforge/decomposition.hpp"
#include "holeforge/generators.hpp"
#include "holeforge/graph.hpp"

using namespace holeforge;

TEST_CASE("classify_basic on all kinds") {
    auto c = classify_basic(cycle_graph(7));
    REQUIRE(c.has_value());
    CHECK(c->kind == BasicCertificate::Kind::chordless_cycle);
    CHECK(validate_basic_certificate(cycle_graph(7), *c));

    auto k = classify_basic(complete_graph(4));
    REQUIRE(k.has_value());
    CHECK(k->kind == BasicCertificate::Kind::small_clique);
    CHECK(validate_basic_certificate(complete_graph(4), *k));
    CHECK(classify_basic(complete_graph(2))->kind == BasicCertificate::Kind::small_clique);

    auto q = classify_basic(make_cube());
    REQUIRE(q.has_value());
    CHECK(q->kind == BasicCertificate::Kind::cube);

    Graph w = make_wheel(9, {0, 3, 6});
    auto pw = classify_basic(w);
    REQUIRE(pw.has_value());
    CHECK(pw->kind == BasicCertificate::Kind::proper_wheel);
    CHECK(validate_basic_certificate(w, *pw));

    Graph p = make_pyramid(1, 2, 2);
    auto pp = classify_basic(p);
    REQUIRE(pp.has_value());
    CHECK(pp->kind == BasicCertificate::Kind::pyramid);
    CHECK(validate_basic_certificate(p, *pp));

    Graph e = make_extended_prism(1, 1, 1, 1, 1);
    auto pe = classify_basic(e);
    REQUIRE(pe.has_value());
    CHECK(pe->kind == BasicCertificate::Kind::extended_prism);
    CHECK(validate_basic_certificate(e, *pe));

    // triangle is listed as a chordless cycle first
    CHECK(classify_basic(complete_graph(3))->kind == BasicCertificate::Kind::chordless_cycle);

    // a non-basic member of the class: proper gluing of two pyramids
    // (the G2 donor needs a chain of three degree-2 vertices)
    Graph g1 = make_pyramid(2, 2, 2);
    auto s1 = proper_glue_sites_g1(g1);
    Graph g2 = make_pyramid(4, 2, 2);
    auto s2 = proper_glue_sites_g2(g2);
    REQUIRE_FALSE(s1.empty());
    REQUIRE_FALSE(s2.empty());
    Graph glued = proper_glue(g1, s1[0].a, s1[0].b, s1[0].path, g2, s2[0].a, s2[0].b, s2[0].path);
    CHECK_FALSE(classify_basic(glued).has_value());
}

TEST_CASE("clique gluing") {
    Graph k3a = complete_graph(3);
    Graph k3b = complete_graph(3);
    Graph shared = glue_clique(k3a, {0}, k3b, {0});
    CHECK(shared.vertex_count() == 5);
    CHECK(shared.edge_count() == 6);

    // empty clique: disjoint union
    Graph uni = glue_clique(k3a, {}, k3b, {});
    CHECK(uni.vertex_count() == 6);
    CHECK(connected_components(uni).size() == 2);

    CHECK_THROWS(glue_clique(cycle_graph(4), {0, 2}, k3b, {0, 1}));  // not a clique
}

TEST_CASE("proper gluing and round trip through the separator") {
    // note: a cycle as the G2 donor would NOT do here: it only lengthens a
    // chain of G1 (the composite is a bigger pyramid and the glue pair
    // fails condition (vii)); a pyramid donor leaves a genuine separator
    Graph g1 = make_pyramid(2, 2, 2);
    Graph g2 = make_pyramid(4, 2, 2);
    auto s1 = proper_glue_sites_g1(g1);
    auto s2 = proper_glue_sites_g2(g2);
    REQUIRE_FALSE(s1.empty());
    REQUIRE_FALSE(s2.empty());
    Graph g = proper_glue(g1, s1[0].a, s1[0].b, s1[0].path, g2, s2[0].a, s2[0].b, s2[0].path);
    CHECK(g.max_degree() <= 3);
    // the identified pair is a proper separator of the result
    auto ps = find_proper_separation(g);
    REQUIRE(ps.has_value());
    CHECK(validate_proper_separation(g, *ps));

    // precondition violations are named individually
    CHECK_THROWS_WITH_AS(proper_glue(g1, s1[0].a, s1[0].b, {s1[0].a, s1[0].b}, g2, s2[0].a, s2[0].b,
                                     s2[0].path),
                         doctest::Contains("path must run from a to b"), std::invalid_argument);
}

TEST_CASE("decompose basic graphs to single leaves") {
    for (const Graph& g : {complete_graph(4), cycle_graph(9), make_cube(), make_pyramid(1, 2, 2)}) {
        auto r = decompose_subcubic(g);
        REQUIRE(r.ok());
        CHECK(r.tree->nodes.size() == 1);
        CHECK(r.tree->nodes[0].type == DecompositionNode::Type::leaf);
    }
    CHECK_THROWS(decompose_subcubic(grid(3, 3)));  // not subcubic
}

TEST_CASE("decompose two basics glued along a clique") {
    // cubes are 3-regular, so no gluing involving a cube stays subcubic;
    // two 6-cycles sharing an edge make the canonical clique-cut instance
    Graph joined = glue_clique(cycle_graph(6), {0, 1}, cycle_graph(6), {0, 1});
    REQUIRE(joined.max_degree() <= 3);
    auto r = decompose_subcubic(joined);
    REQUIRE(r.ok());
    REQUIRE(r.tree->nodes[0].type == DecompositionNode::Type::clique_cut);
    CHECK(r.tree->nodes[0].cut_clique.size() == 2);
    int cycles = 0;
    for (auto& n : r.tree->nodes)
        if (n.type == DecompositionNode::Type::leaf &&
            n.certificate->kind == BasicCertificate::Kind::chordless_cycle)
            ++cycles;
    CHECK(cycles == 2);
    CHECK(reassemble(*r.tree) == joined);

    // disconnected input: the empty clique separates
    Graph uni = glue_clique(cycle_graph(5), {}, complete_graph(4), {});
    auto r2 = decompose_subcubic(uni);
    REQUIRE(r2.ok());
    CHECK(r2.tree->nodes[0].type == DecompositionNode::Type::clique_cut);
    CHECK(r2.tree->nodes[0].cut_clique.empty());
    CHECK(reassemble(*r2.tree) == uni);
}

TEST_CASE("decompose proper gluing of pyramid and wheel") {
    Graph g1 = make_pyramid(2, 2, 2);
    Graph g2 = make_wheel(11, {0, 4, 8});  // a sector of length 4 donates the site
    // wheel as G2 side: need two non-adjacent degree-2 rim vertices joined
    // by a degree-2 path
    auto s1 = proper_glue_sites_g1(g1);
    auto s2 = proper_glue_sites_g2(g2);
    REQUIRE_FALSE(s1.empty());
    REQUIRE_FALSE(s2.empty());
    Graph g = proper_glue(g1, s1[0].a, s1[0].b, s1[0].path, g2, s2[0].a, s2[0].b, s2[0].path);
    auto r = decompose_subcubic(g);
    REQUIRE(r.ok());
    // a proper cut occurs somewhere and the leaves are basic
    bool saw_proper = false;
    for (auto& n : r.tree->nodes) {
        if (n.type == DecompositionNode::Type::proper_cut) saw_proper = true;
        if (n.type == DecompositionNode::Type::leaf)
            CHECK(validate_basic_certificate(n.graph, *n.certificate));
    }
    CHECK(saw_proper);
    // reassembly reproduces the input exactly
    CHECK(reassemble(*r.tree) == g);
}

TEST_CASE("corpus: decompose, reassemble, width <= 3") {
    auto corpus = inclass_corpus(/*seed*/ 12345, /*count*/ 40, /*depth*/ 4, /*max_vertices*/ 45);
    for (auto& g : corpus) {
        REQUIRE(g.max_degree() <= 3);
        auto r = decompose_subcubic(g);
        REQUIRE_MESSAGE(r.ok(), "structure theorem violated on a corpus instance");
        for (auto& n : r.tree->nodes) {
            if (n.type == DecompositionNode::Type::leaf)
                CHECK(validate_basic_certificate(n.graph, *n.certificate));
            for (int c : n.children)
                CHECK(r.tree->nodes[c].graph.vertex_count() < n.graph.vertex_count());
        }
        CHECK(reassemble(*r.tree) == g);

        auto tdr = tree_decomposition_subcubic(g);
        REQUIRE(tdr.ok());
        auto val = validate_tree_decomposition(g, *tdr.td);
        REQUIRE_MESSAGE(val.valid, "invalid tree decomposition");
        CHECK(val.width <= 3);
    }
}

TEST_CASE("tree decomposition of basics") {
    auto check_width = [](const Graph& g, int expect) {
        auto r = tree_decomposition_subcubic(g);
        REQUIRE(r.ok());
        auto val = validate_tree_decomposition(g, *r.td);
        REQUIRE(val.valid);
        CHECK(val.width == expect);
    };
    check_width(complete_graph(4), 3);
    check_width(cycle_graph(9), 2);
    check_width(make_cube(), 3);
}
