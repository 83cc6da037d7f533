#ifndef QCOUNT_GRAPH_HPP
#define QCOUNT_GRAPH_HPP

#include <cstdint>
#include <iosfwd>
#include <utility>
#include <vector>

namespace qcount {

// undirected simple graph; every vertex must have degree >= 1
// (an isolated vertex admits no edge cover, and the weighted cover count
// would be identically zero)
struct Graph {
    int vertex_count = 0;
    std::vector<std::pair<int, int>> edges;

    int edge_count() const { return static_cast<int>(edges.size()); }
    std::vector<int> degrees() const;

    // throws std::invalid_argument on bad indices, duplicates, self-loops,
    // or isolated vertices
    void validate() const;
};

Graph make_linear(int edge_count);
Graph make_grid2xn(int columns);
Graph make_paw();
Graph make_triangle();

// uniform simple graph with `edge_count` edges on round(2*edge_count/mean_degree)
// vertices, resampled until no vertex is isolated; deterministic given seed
Graph make_random_mean_degree(double mean_degree, int edge_count, std::uint64_t seed,
                              int max_resamples = 1000);

// text format: first line "v <vertex_count>", then "e <u> <w>" per edge, 0-indexed
Graph read_graph(std::istream& in);
void write_graph(const Graph& g, std::ostream& out);
Graph load_graph_file(const std::string& path);

} // namespace qcount

#endif
