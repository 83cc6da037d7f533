#ifndef QCOUNT_PROBLEM_HPP
#define QCOUNT_PROBLEM_HPP

#include "qcount/graph.hpp"
#include "qcount/hamiltonian.hpp"
#include "qcount/spectrum.hpp"
#include "qcount/symspace.hpp"
#include "qcount/weights.hpp"

namespace qcount {

// an edge-cover counting instance with its exact spectrum
struct EdgeCoverProblem {
    Graph graph;
    SpinHamiltonian hamiltonian;
    WeightModel weights;
    SpectrumSummary spectrum;

    double p() const { return spectrum.p(); }
    SymmetricSubspace subspace() const { return SymmetricSubspace::from_spectrum(spectrum); }
};

EdgeCoverProblem make_edge_cover_problem(const Graph& g, double q, int max_moment = 2,
                                         int exhaustive_limit = 24);

} // namespace qcount

#endif
