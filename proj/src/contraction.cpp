#include "holeforge/contraction.hpp"

#include <sstream>

namespace holeforge {

VertexSet preimage(const ContractionMap& phi, int h_vertex) {
    std::vector<int> out;
    for (auto& [v, hv] : phi)
        if (hv == h_vertex) out.push_back(v);
    return make_set(std::move(out));
}

ContractionCheck check_contraction_map(const Graph& g, const Graph& h, const ContractionMap& phi) {
    ContractionCheck res;
    auto fail = [&](const std::string& s) { res.violations.push_back(s); };

    for (int v : g.vertices())
        if (!phi.count(v)) fail("map not total: vertex " + std::to_string(v) + " unmapped");
    for (auto& [v, hv] : phi) {
        if (!g.has_vertex(v)) fail("map domain contains unknown vertex " + std::to_string(v));
        else if (!h.has_vertex(hv)) fail("image vertex " + std::to_string(hv) + " not in H");
    }
    if (!res.violations.empty()) return res;

    for (int hv : h.vertices()) {
        VertexSet pre = preimage(phi, hv);
        if (pre.empty()) {
            fail("not surjective: empty pre-image of " + std::to_string(hv));
            continue;
        }
        if (!is_connected(induced_subgraph(g, pre)))
            fail("pre-image of " + std::to_string(hv) + " is disconnected");
    }

    for (auto [hu, hv] : h.edges()) {
        VertexSet both = set_union(preimage(phi, hu), preimage(phi, hv));
        if (both.empty()) continue;  // reported above
        if (!is_connected(induced_subgraph(g, both))) {
            std::ostringstream ss;
            ss << "pre-images of edge " << hu << "-" << hv << " are not joined";
            fail(ss.str());
        }
    }

    for (auto [x, y] : g.edges()) {
        int hx = phi.at(x), hy = phi.at(y);
        if (hx != hy && !h.has_edge(hx, hy)) {
            std::ostringstream ss;
            ss << "edge " << x << "-" << y << " maps to non-edge " << hx << "-" << hy;
            fail(ss.str());
        }
    }

    res.ok = res.violations.empty();
    return res;
}

bool verify_contraction_map(const Graph& g, const Graph& h, const ContractionMap& phi) {
    return check_contraction_map(g, h, phi).ok;
}

}  // namespace holeforge
