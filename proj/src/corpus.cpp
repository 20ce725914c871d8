#include "holeforge/corpus.hpp"

#include "holeforge/decomposition.hpp"
#include "holeforge/detectors.hpp"
#include "holeforge/generators.hpp"

namespace holeforge {

namespace {

int pick(std::mt19937_64& rng, int lo, int hi) {  // inclusive
    return lo + static_cast<int>(rng() % static_cast<uint64_t>(hi - lo + 1));
}

}  // namespace

Graph random_basic_subcubic(std::mt19937_64& rng) {
    switch (pick(rng, 0, 5)) {
        case 0: return cycle_graph(pick(rng, 4, 11));
        case 1: return complete_graph(pick(rng, 2, 4));
        case 2: return make_cube();
        case 3: {
            // proper wheel, subcubic: exactly 3 spokes, spread out
            int s1 = pick(rng, 1, 3), s2 = pick(rng, 2, 4), s3 = pick(rng, 2, 4);
            int rim = s1 + s2 + s3;
            if (rim < 5) rim = 5, s1 = 1, s2 = 2, s3 = 2;
            return make_wheel(rim, {0, s1, s1 + s2});
        }
        case 4: {
            int l1 = pick(rng, 1, 3), l2 = pick(rng, 2, 4), l3 = pick(rng, 2, 4);
            return make_pyramid(l1, l2, l3);
        }
        default:
            return make_extended_prism(pick(rng, 1, 3), pick(rng, 1, 3), pick(rng, 1, 3),
                                       pick(rng, 1, 3), pick(rng, 1, 3));
    }
}

namespace {

// Clique gluing that keeps the composite subcubic: identify a vertex pair
// with degree sum <= 3, or an edge pair whose endpoint degree sums are <= 4.
std::optional<Graph> try_clique_glue(const Graph& g1, const Graph& g2, std::mt19937_64& rng) {
    std::vector<std::pair<VertexSet, VertexSet>> options;
    for (int u : g1.vertices())
        for (int v : g2.vertices())
            if (g1.degree(u) + g2.degree(v) <= 3) options.push_back({{u}, {v}});
    for (auto [u1, v1] : g1.edges())
        for (auto [u2, v2] : g2.edges()) {
            if (g1.degree(u1) + g2.degree(u2) <= 4 && g1.degree(v1) + g2.degree(v2) <= 4)
                options.push_back({{u1, v1}, {u2, v2}});
            if (g1.degree(u1) + g2.degree(v2) <= 4 && g1.degree(v1) + g2.degree(u2) <= 4)
                options.push_back({{u1, v1}, {v2, u2}});
        }
    if (options.empty()) return std::nullopt;
    auto& [k1, k2] = options[rng() % options.size()];
    return glue_clique(g1, k1, g2, k2);
}

std::optional<Graph> try_proper_glue(const Graph& g1, const Graph& g2, std::mt19937_64& rng) {
    auto sites1 = proper_glue_sites_g1(g1);
    auto sites2 = proper_glue_sites_g2(g2);
    if (sites1.empty() || sites2.empty()) return std::nullopt;
    auto& s1 = sites1[rng() % sites1.size()];
    auto& s2 = sites2[rng() % sites2.size()];
    return proper_glue(g1, s1.a, s1.b, s1.path, g2, s2.a, s2.b, s2.path);
}

}  // namespace

Graph random_inclass_subcubic(std::mt19937_64& rng, int depth, int max_vertices) {
    Graph g = random_basic_subcubic(rng);
    for (int d = 0; d < depth; ++d) {
        Graph other = random_basic_subcubic(rng);
        if (g.vertex_count() + other.vertex_count() > max_vertices) break;
        std::optional<Graph> next;
        if (rng() % 2 == 0) {
            next = try_proper_glue(g, other, rng);
            if (!next) next = try_clique_glue(g, other, rng);
        } else {
            next = try_clique_glue(g, other, rng);
            if (!next) next = try_proper_glue(g, other, rng);
        }
        if (next) g = *next;
    }
    return g;
}

std::vector<Graph> inclass_corpus(uint64_t seed, int count, int depth, int max_vertices) {
    std::mt19937_64 rng(seed);
    std::vector<Graph> out;
    out.reserve(count);
    for (int i = 0; i < count; ++i)
        out.push_back(random_inclass_subcubic(rng, 1 + static_cast<int>(rng() % depth), max_vertices));
    return out;
}

namespace {

// Odd wheel with all sectors of odd length: the rim is odd and every hole
// through the center is odd, so no even hole; three spokes keep it
// pyramid-free only when no sector has length 1 together with another of
// length 1 sharing... just verify with the detectors and re-roll.
Graph random_odd_wheel(std::mt19937_64& rng) {
    auto odd = [&](int lo, int hi) {
        int v = pick(rng, lo, hi);
        return v % 2 == 1 ? v : v + 1;
    };
    int s1 = odd(1, 5), s2 = odd(1, 5), s3 = odd(1, 5);
    if (s1 + s2 + s3 < 5) s3 += 2;
    return make_wheel(s1 + s2 + s3, {0, s1, s1 + s2});
}

}  // namespace

Graph random_ehf_pyramid_free_deg4(std::mt19937_64& rng, int max_vertices) {
    for (int attempts = 0; attempts < 200; ++attempts) {
        Graph g = random_odd_wheel(rng);
        int steps = pick(rng, 0, 2);
        for (int s = 0; s < steps; ++s) {
            Graph other = (rng() % 2 == 0) ? random_odd_wheel(rng) : cycle_graph(2 * pick(rng, 2, 5) + 1);
            if (g.vertex_count() + other.vertex_count() > max_vertices) break;
            // clique gluing with the degree-4 budget
            std::vector<std::pair<VertexSet, VertexSet>> options;
            for (int u : g.vertices())
                for (int v : other.vertices())
                    if (g.degree(u) + other.degree(v) <= 4) options.push_back({{u}, {v}});
            for (auto [u1, v1] : g.edges())
                for (auto [u2, v2] : other.edges())
                    if (g.degree(u1) + other.degree(u2) <= 5 && g.degree(v1) + other.degree(v2) <= 5)
                        options.push_back({{u1, v1}, {u2, v2}});
            if (options.empty()) break;
            auto& [k1, k2] = options[rng() % options.size()];
            g = glue_clique(g, k1, other, k2);
        }
        if (g.max_degree() > 4) continue;
        if (find_hole(g, HoleParity::even).found()) continue;
        if (find_pyramid(g).found()) continue;
        return g;
    }
    throw std::runtime_error("random_ehf_pyramid_free_deg4: no instance found");
}

Graph random_deg4_ring(std::mt19937_64& rng, int max_vertices) {
    for (int attempts = 0; attempts < 200; ++attempts) {
        int k = pick(rng, 3, std::max(3, max_vertices / 2));
        std::vector<int> sizes;
        int total = 0;
        for (int i = 0; i < k; ++i) {
            int s = pick(rng, 1, 2);
            sizes.push_back(s);
            total += s;
        }
        if (total > max_vertices) continue;
        Graph g = make_ring(RingSpec{sizes});
        if (g.max_degree() <= 4) return g;
        // degree-5 vertices appear when two size-2 cliques are consecutive;
        // thin one of them and retry once
        for (size_t i = 0; i < sizes.size(); ++i)
            if (sizes[i] == 2 && sizes[(i + 1) % sizes.size()] == 2) sizes[i] = 1;
        g = make_ring(RingSpec{sizes});
        if (g.max_degree() <= 4) return g;
    }
    throw std::runtime_error("random_deg4_ring: no instance found");
}

}  // namespace holeforge
