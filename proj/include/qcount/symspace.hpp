#ifndef QCOUNT_SYMSPACE_HPP
#define QCOUNT_SYMSPACE_HPP

#include <iosfwd>
#include <vector>

#include "qcount/spectrum.hpp"

namespace qcount {

// the m-dimensional space spanned by the per-level weighted-uniform
// superpositions; levels with zero total weight are dropped at construction
// (they carry no basis vector).
struct SymmetricSubspace {
    std::vector<double> energies;      // strictly increasing, positive-weight levels only
    std::vector<double> level_weights; // N_j^(1) > 0, sum 1 within 1e-9
    bool ground_present = false;       // true when the original ground level survived

    int dimension() const { return static_cast<int>(energies.size()); }
    double p() const;  // ground-level weight; throws if the ground level was dropped

    static SymmetricSubspace from_spectrum(const SpectrumSummary& s);
};

// eigenvalues of alpha*Hx + beta*Hz restricted to the symmetric subspace,
// i.e. the solutions of sum_j N_j / (beta E_j - lambda) = 1/alpha.
// pole_offsets stores the cancellation-free distances to the bracketing poles:
//   pole_offsets[0] = beta*E_0 - lambda_0            (>= 0)
//   pole_offsets[j] = lambda_j - beta*E_{j-1}, j >= 1 (>= 0)
// so gap() = pole_offsets[0] + pole_offsets[1] is exact to rounding.
struct SecularSolution {
    double alpha = 0.0, beta = 0.0;
    std::vector<double> lambdas;
    std::vector<double> pole_offsets;

    double gap() const;
};

SecularSolution solve_secular(const SymmetricSubspace& s, double alpha, double beta);

// 2*sqrt(alpha*beta*P*(E_1 - E_0)); solve_secular(...).gap() >= this always
double gap_lower_bound(const SymmetricSubspace& s, double alpha, double beta);

enum class Schedule {
    linear,     // alpha = 1 - beta
    alt_scaled  // alpha = (E_1 - E_0) * (1 - beta)
};

struct MinGapResult {
    double gap = 0.0;
    double beta_star = 0.0;
};

// scans beta over a uniform grid and refines the minimizer by golden-section
// search to beta-tolerance 1e-6
MinGapResult min_gap_over_schedule(const SymmetricSubspace& s, Schedule schedule,
                                   int resolution = 1024);

// (1/(4 eta P)) * (E_{m-1}+1) / [(E_1-E_0) * min((E_1-E_0)/(1+E_1-E_0)^2,
//                                                (E_{m-1}-E_0)/(1+E_{m-1}-E_0)^2)]
double aqo_time_bound(const SymmetricSubspace& s, double eta);

// csv columns: beta,lambda_0,...,lambda_{m-1},delta
void write_gap_scan_csv(const SymmetricSubspace& s, Schedule schedule, int resolution,
                        std::ostream& out);

} // namespace qcount

#endif
