#include "holeforge/ramsey.hpp"

namespace holeforge {

long long bipartite_ramsey_bound_2(int r) {
    return (1ll << r) * (r - 1) + 1;
}

namespace {

using Mask = std::vector<uint64_t>;

bool mask_get(const Mask& m, int i) { return (m[i >> 6] >> (i & 63)) & 1; }
void mask_set(Mask& m, int i) { m[i >> 6] |= 1ull << (i & 63); }
int mask_count(const Mask& m) {
    int c = 0;
    for (uint64_t w : m) c += __builtin_popcountll(w);
    return c;
}
Mask mask_and(const Mask& a, const Mask& b) {
    Mask out(a.size());
    for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] & b[i];
    return out;
}

}  // namespace

std::optional<MonoBiclique> find_monochromatic_biclique(const BipartiteColoring& col, int r) {
    if (r < 1) throw std::invalid_argument("find_monochromatic_biclique: r >= 1");
    if (col.rows < r || col.cols < r)
        throw std::invalid_argument("find_monochromatic_biclique: side smaller than r");
    const int words = (col.cols + 63) / 64;
    for (int c = 0; c < col.colors; ++c) {
        // per-row masks of columns carrying color c
        std::vector<Mask> rowmask(col.rows, Mask(words, 0));
        for (int i = 0; i < col.rows; ++i)
            for (int j = 0; j < col.cols; ++j)
                if (col.at(i, j) == c) mask_set(rowmask[i], j);

        std::vector<int> rows;
        std::optional<MonoBiclique> found;
        std::function<void(int, const Mask&)> rec = [&](int from, const Mask& inter) {
            if (found) return;
            if (static_cast<int>(rows.size()) == r) {
                MonoBiclique b;
                b.color = c;
                b.rows = rows;
                for (int j = 0; j < col.cols && static_cast<int>(b.cols.size()) < r; ++j)
                    if (mask_get(inter, j)) b.cols.push_back(j);
                found = b;
                return;
            }
            for (int i = from; i < col.rows; ++i) {
                Mask next = mask_and(inter, rowmask[i]);
                if (mask_count(next) < r) continue;
                rows.push_back(i);
                rec(i + 1, next);
                rows.pop_back();
                if (found) return;
            }
        };
        Mask all(words, 0);
        for (int j = 0; j < col.cols; ++j) mask_set(all, j);
        rec(0, all);
        if (found) return found;
    }
    return std::nullopt;
}

}  // namespace holeforge
