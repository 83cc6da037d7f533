#include "qcount/problem.hpp"

namespace qcount {

EdgeCoverProblem make_edge_cover_problem(const Graph& g, double q, int max_moment,
                                         int exhaustive_limit) {
    EdgeCoverProblem p;
    p.graph = g;
    p.hamiltonian = build_edge_cover_hamiltonian(g);
    p.weights = WeightModel::bernoulli(p.hamiltonian.qubit_count, q);
    p.spectrum = enumerate_spectrum(p.hamiltonian, p.weights, max_moment, exhaustive_limit);
    return p;
}

} // namespace qcount
