#include "qcount/graph.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>

#include "qcount/rng.hpp"

namespace qcount {

std::vector<int> Graph::degrees() const {
    std::vector<int> deg(vertex_count, 0);
    for (const auto& [u, v] : edges) {
        ++deg[u];
        ++deg[v];
    }
    return deg;
}

void Graph::validate() const {
    if (vertex_count <= 0) throw std::invalid_argument("graph: vertex_count must be positive");
    std::set<std::pair<int, int>> seen;
    for (const auto& [u, v] : edges) {
        if (u < 0 || v < 0 || u >= vertex_count || v >= vertex_count)
            throw std::invalid_argument("graph: edge endpoint out of range");
        if (u == v) throw std::invalid_argument("graph: self-loop");
        auto key = std::minmax(u, v);
        if (!seen.insert(key).second) throw std::invalid_argument("graph: duplicate edge");
    }
    for (int d : degrees())
        if (d == 0) throw std::invalid_argument("graph: isolated vertex (no edge cover exists)");
}

Graph make_linear(int edge_count) {
    if (edge_count < 1) throw std::invalid_argument("linear graph needs >= 1 edge");
    Graph g;
    g.vertex_count = edge_count + 1;
    for (int i = 0; i < edge_count; ++i) g.edges.emplace_back(i, i + 1);
    return g;
}

Graph make_grid2xn(int columns) {
    if (columns < 1) throw std::invalid_argument("grid2xn needs >= 1 column");
    Graph g;
    g.vertex_count = 2 * columns;
    // column i holds vertices (2i, 2i+1); rung first, then rails to the next column
    for (int i = 0; i < columns; ++i) g.edges.emplace_back(2 * i, 2 * i + 1);
    for (int i = 0; i + 1 < columns; ++i) {
        g.edges.emplace_back(2 * i, 2 * i + 2);
        g.edges.emplace_back(2 * i + 1, 2 * i + 3);
    }
    return g;
}

Graph make_paw() {
    Graph g;
    g.vertex_count = 4;
    g.edges = {{0, 1}, {1, 2}, {2, 0}, {2, 3}};
    return g;
}

Graph make_triangle() {
    Graph g;
    g.vertex_count = 3;
    g.edges = {{0, 1}, {1, 2}, {2, 0}};
    return g;
}

Graph make_random_mean_degree(double mean_degree, int edge_count, std::uint64_t seed,
                              int max_resamples) {
    if (edge_count < 1 || mean_degree <= 0)
        throw std::invalid_argument("random graph: bad parameters");
    const int v = std::max(2, static_cast<int>(std::llround(2.0 * edge_count / mean_degree)));
    const long long max_edges = static_cast<long long>(v) * (v - 1) / 2;
    if (edge_count > max_edges || 2 * edge_count < v)
        throw std::invalid_argument("random graph: infeasible (edge count vs vertex count)");

    Rng rng(seed);
    for (int attempt = 0; attempt < max_resamples; ++attempt) {
        std::set<std::pair<int, int>> chosen;
        while (static_cast<int>(chosen.size()) < edge_count) {
            int a = static_cast<int>(rng.uniform_int(v));
            int b = static_cast<int>(rng.uniform_int(v));
            if (a == b) continue;
            chosen.insert(std::minmax(a, b));
        }
        std::vector<bool> covered(v, false);
        for (const auto& [a, b] : chosen) covered[a] = covered[b] = true;
        if (std::all_of(covered.begin(), covered.end(), [](bool c) { return c; })) {
            Graph g;
            g.vertex_count = v;
            g.edges.assign(chosen.begin(), chosen.end());
            return g;
        }
    }
    throw std::invalid_argument("random graph: could not avoid isolated vertices within retry budget");
}

Graph read_graph(std::istream& in) {
    Graph g;
    std::string line;
    bool have_v = false;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::string tag;
        if (!(ls >> tag) || tag[0] == '#') continue;
        if (tag == "v") {
            if (!(ls >> g.vertex_count)) throw std::invalid_argument("graph file: bad 'v' line");
            have_v = true;
        } else if (tag == "e") {
            int u, w;
            if (!(ls >> u >> w)) throw std::invalid_argument("graph file: bad 'e' line");
            g.edges.emplace_back(u, w);
        } else {
            throw std::invalid_argument("graph file: unknown line tag '" + tag + "'");
        }
    }
    if (!have_v) throw std::invalid_argument("graph file: missing 'v' line");
    g.validate();
    return g;
}

void write_graph(const Graph& g, std::ostream& out) {
    out << "v " << g.vertex_count << "\n";
    for (const auto& [u, w] : g.edges) out << "e " << u << " " << w << "\n";
}

Graph load_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open graph file: " + path);
    return read_graph(in);
}

} // namespace qcount
