#ifndef QCOUNT_OMCS_HPP
#define QCOUNT_OMCS_HPP

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "qcount/hamiltonian.hpp"
#include "qcount/rng.hpp"
#include "qcount/weights.hpp"

namespace qcount {

struct OmcsResult {
    double p_est = 0.0;
    long long samples_drawn = 0;
    double epsilon = 0.0, delta = 0.0;
    std::uint64_t seed = 0;
};

// stopping threshold Upsilon_1 = 1 + 4(e-2)(1+eps) ln(2/delta) / eps^2
double omcs_threshold(double epsilon, double delta);

// draws a basis state distributed as the weight model (independent per-bit
// coin flips for the product model)
std::uint64_t draw_weighted_sample(const WeightModel& w, Rng& rng);

// stopping-rule estimator: samples until the ground-state indicator sum
// reaches Upsilon_1; P_est = Upsilon_1 / samples. the returned estimate has
// relative error < epsilon with probability >= 1 - delta.
OmcsResult omcs_estimate(const SpinHamiltonian& h, const WeightModel& w,
                         double ground_energy, double epsilon, double delta,
                         std::uint64_t seed, long long sample_cap = 100000000);

// csv columns: trial,samples_drawn,p_est
void write_omcs_trials_csv(const std::vector<OmcsResult>& trials, std::ostream& out);

} // namespace qcount

#endif
