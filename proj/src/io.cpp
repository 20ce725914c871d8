#include "holeforge/io.hpp"

#include <fstream>
#include <sstream>

namespace holeforge {

std::vector<int> canonical_order(const Graph& g) {
    return g.vertices();  // already sorted
}

std::string write_edge_list(const Graph& g) {
    std::ostringstream out;
    const auto& vs = g.vertices();
    std::unordered_map<int, int> idx;
    for (size_t i = 0; i < vs.size(); ++i) idx[vs[i]] = static_cast<int>(i);
    out << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (auto [u, v] : g.edges()) out << idx[u] << ' ' << idx[v] << '\n';
    for (int v : vs)
        if (auto l = g.label(v)) out << "# label " << idx[v] << ' ' << *l << '\n';
    return out.str();
}

Graph parse_edge_list(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line)) throw std::invalid_argument("edge list: empty input");
    std::istringstream head(line);
    int n = 0, m = 0;
    if (!(head >> n >> m) || n < 0 || m < 0) throw std::invalid_argument("edge list: bad header");
    Graph g = Graph::with_vertices(n);
    int read = 0;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        if (line[0] == '#') {
            std::istringstream c(line);
            std::string hash, kw;
            int v;
            c >> hash >> kw;
            if (kw == "label" && (c >> v)) {
                std::string rest;
                std::getline(c, rest);
                if (!rest.empty() && rest[0] == ' ') rest.erase(0, 1);
                if (v < 0 || v >= n) throw std::invalid_argument("edge list: label for unknown vertex");
                g.set_label(v, rest);
            }
            continue;
        }
        std::istringstream e(line);
        int u, v;
        if (!(e >> u >> v)) throw std::invalid_argument("edge list: bad edge line: " + line);
        if (u < 0 || u >= n || v < 0 || v >= n) throw std::invalid_argument("edge list: vertex out of range");
        g.add_edge(u, v);
        ++read;
    }
    if (read != m) throw std::invalid_argument("edge list: edge count mismatch");
    return g;
}

Graph read_edge_list_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_edge_list(ss.str());
}

void write_edge_list_file(const Graph& g, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    out << write_edge_list(g);
}

std::string write_dot(const Graph& g) {
    std::ostringstream out;
    out << "graph G {\n";
    for (int v : g.vertices()) {
        out << "  v" << v;
        if (auto l = g.label(v)) out << " [label=\"" << *l << "\"]";
        out << ";\n";
    }
    for (auto [u, v] : g.edges()) out << "  v" << u << " -- v" << v << ";\n";
    out << "}\n";
    return out.str();
}

}  // namespace holeforge
