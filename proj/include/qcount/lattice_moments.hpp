#ifndef QCOUNT_LATTICE_MOMENTS_HPP
#define QCOUNT_LATTICE_MOMENTS_HPP

#include "qcount/spectrum.hpp"

namespace qcount {

// ground-level moment P_mu for the path graph with `edge_count` edges.
//
// recursion for paths: an edge subset is a cover iff the absent edges are
// pairwise non-adjacent and exclude both end edges. conditioning on the
// leftmost edge yields
//     P_mu(L) = (1-q)^mu * P_mu(L-1) + (q(1-q))^mu * P_mu(L-2)
// with P_mu(1) = (1-q)^mu and P_mu(2) = (1-q)^{2mu} fixed by enumeration.
// mu = 0 gives the Fibonacci numbers.
double linear_graph_moment(int edge_count, double q, int mu);

enum class LatticeKind { path, grid2xn };

// exact per-level moments N_j^(mu) for paths and 2xN ladders by
// transfer-matrix dynamic programming over frontier coverage states;
// agrees with enumerate_spectrum wherever both run.
// for grid2xn, edge_count must equal 3*columns - 2.
SpectrumSummary dp_spectrum(LatticeKind kind, int edge_count, double q, int max_moment = 2);

} // namespace qcount

#endif
