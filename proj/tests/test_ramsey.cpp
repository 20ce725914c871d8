#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "holeforge/generators.hpp"
#include "holeforge/homogenize.hpp"
#include "holeforge/ramsey.hpp"
#include "holeforge/walls.hpp"

using namespace holeforge;

TEST_CASE("monochromatic biclique: trivial and checkerboard") {
    auto all_one = BipartiteColoring::uniform(4, 4, 2, 0);
    auto b = find_monochromatic_biclique(all_one, 3);
    REQUIRE(b.has_value());
    CHECK(b->color == 0);
    CHECK(b->rows.size() == 3);
    CHECK(b->cols.size() == 3);

    // the checkerboard on K_{3,3} does NOT work as a K_{2,2}-free witness
    // (rows 0 and 2 are identical), but the circulant rows 110/101/011 do
    auto checker = BipartiteColoring::uniform(3, 3, 2, 0);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) checker.at(i, j) = (i + j) % 2;
    CHECK(find_monochromatic_biclique(checker, 2).has_value());
    auto circulant = BipartiteColoring::uniform(3, 3, 2, 0);
    int rowpat[3] = {0b110, 0b101, 0b011};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) circulant.at(i, j) = (rowpat[i] >> j) & 1;
    CHECK_FALSE(find_monochromatic_biclique(circulant, 2).has_value());

    CHECK_THROWS(find_monochromatic_biclique(all_one, 5));
}

TEST_CASE("bipartite Ramsey bound at r=2, exhaustively by row-pattern multisets") {
    // Every 2-coloring of K_{5,5} contains a monochromatic K_{2,2}; whether
    // one exists depends only on the multiset of row patterns (5-bit words),
    // so enumerating multisets of 5 patterns out of 32 is exhaustive.
    CHECK(bipartite_ramsey_bound_2(2) == 5);
    int checked = 0;
    std::vector<int> pat(5, 0);
    bool all_good = true;
    std::function<void(int, int)> rec = [&](int idx, int from) {
        if (!all_good) return;
        if (idx == 5) {
            ++checked;
            // monochromatic K_{2,2} iff two rows share two 1-columns or two
            // 0-columns
            for (int a = 0; a < 5; ++a)
                for (int b = a + 1; b < 5; ++b) {
                    int ones = __builtin_popcount(pat[a] & pat[b]);
                    int zeros = __builtin_popcount(~pat[a] & ~pat[b] & 31);
                    if (ones >= 2 || zeros >= 2) return;
                }
            all_good = false;  // found a coloring with no monochromatic K_{2,2}
            return;
        }
        for (int p = from; p < 32; ++p) {
            pat[idx] = p;
            rec(idx + 1, p);
        }
    };
    rec(0, 0);
    CHECK(all_good);
    CHECK(checked == 376992);  // C(36,5) multisets

    // and a 2-coloring of K_{2,2} with no monochromatic K_{2,2} exists
    auto k22 = BipartiteColoring::uniform(2, 2, 2, 0);
    k22.at(0, 0) = 1;
    k22.at(1, 1) = 1;
    CHECK_FALSE(find_monochromatic_biclique(k22, 2).has_value());
}

TEST_CASE("finder agrees with brute force on small random colorings") {
    std::mt19937 rng(99);
    for (int t = 0; t < 300; ++t) {
        int rows = 3 + static_cast<int>(rng() % 3), cols = 3 + static_cast<int>(rng() % 3);
        auto col = BipartiteColoring::uniform(rows, cols, 2, 0);
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j) col.at(i, j) = static_cast<int>(rng() % 2);
        auto got = find_monochromatic_biclique(col, 2);
        bool naive = false;
        for (int a = 0; a < rows && !naive; ++a)
            for (int b = a + 1; b < rows && !naive; ++b)
                for (int x = 0; x < cols && !naive; ++x)
                    for (int y = x + 1; y < cols && !naive; ++y)
                        if (col.at(a, x) == col.at(a, y) && col.at(a, x) == col.at(b, x) &&
                            col.at(a, x) == col.at(b, y))
                            naive = true;
        CHECK(got.has_value() == naive);
        if (got) {
            for (int i : got->rows)
                for (int j : got->cols) CHECK(col.at(i, j) == got->color);
        }
    }
}

TEST_CASE("crossing coloring of a stone wall") {
    Wall base = elementary_wall(6, 6);
    StoneWall all_green = make_stone_wall(base, {});
    auto col = crossing_coloring(all_green);
    CHECK(col.rows == 4);
    CHECK(col.cols == 4);
    for (int v : col.color) CHECK(v == 0);

    StoneWall all_red = make_stone_wall(base, base.branch_vertices);
    auto col2 = crossing_coloring(all_red);
    for (int v : col2.color) CHECK(v == 1);
}

TEST_CASE("required_size is monotone and white/black-feasible") {
    CHECK(required_size(2) >= 2 * 6 * 3 + 3);
    CHECK(required_size(3) > required_size(2));
    CHECK(ramsey_guarantee_size(2) > required_size(2));
}

TEST_CASE("the Kovari-Sos-Turan majority argument behind ramsey_guarantee_size") {
    // any 4-coloring of K_{n,n} has a color with >= n^2/4 edges; a
    // K_{t,t}-free bipartite graph has at most
    // (t-1)^(1/t) (n-t+1) n^(1-1/t) + (t-1) n edges
    for (int t : {3, 5, 12, 18, 24, 30}) {
        long double n = 2.0L * powl(4.0L, t) * (t - 1) + 1;
        long double kst = powl(static_cast<long double>(t - 1), 1.0L / t) * (n - t + 1) *
                              powl(n, 1.0L - 1.0L / t) +
                          (t - 1) * n;
        CHECK(n * n / 4 > kst);
    }
}
