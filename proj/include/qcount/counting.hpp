#ifndef QCOUNT_COUNTING_HPP
#define QCOUNT_COUNTING_HPP

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <vector>

#include "qcount/spectrum.hpp"

namespace qcount {

// one batch of M recorded ground states: Q_M distinct states, R_M total weight
// (with repetition)
struct CaptureBatch {
    int m = 0;
    std::vector<std::uint64_t> measurements;
    int q_m = 0;
    double r_m = 0.0;
};

// evolves-and-measures until `m` ground states are recorded, discarding
// excited outcomes; total iterations accumulate into *total_iterations.
// aborts when the iteration count exceeds 20x the expected m/expected_accept.
CaptureBatch collect_batch(const std::function<std::uint64_t()>& runner,
                           const std::function<bool(std::uint64_t)>& is_ground,
                           const std::function<double(std::uint64_t)>& weight_of,
                           int m, double expected_accept, long long* total_iterations);

// mean number of distinct ground states in M conditioned draws:
//   <Q_M> = sum_{mu=1}^{M} (-1)^{mu-1} C(M,mu) P_mu / P^mu
// evaluated with compensated summation; requires spectrum moments up to M.
// signals CancellationError when the alternating terms exceed the result by
// 1e12 in magnitude (unless the ground weights are uniform, where the closed
// geometric form applies).
double expected_qm(const SpectrumSummary& s, int m);

// uniform-weight closed form P0 (1 - (1 - 1/P0)^M)
double expected_qm_uniform(double p0, int m);

// second-order truncation M - M(M-1)/2 * P2/P^2
double expected_qm_truncated(double p, double p2, int m);

// <R_M> = M P2 / P
double expected_rm(const SpectrumSummary& s, int m);
double expected_rm(double p, double p2, int m);

// exact variance of Q_M from the pair-indicator expansion (needs moments up
// to M); matches exhaustive draw-sequence enumeration
double variance_qm(const SpectrumSummary& s, int m);

// leading-order form M(M-1)/2 * P2/P^2
double variance_qm_truncated(double p, double p2, int m);

// uniform-weight closed form via pair indicators
double variance_qm_uniform(double p0, int m);

// 1 - delta = erf(eps/(1-eps) sqrt(M(M-1) S P2 / 2P^2))/2
//           + erf(eps/(1+eps) sqrt(M(M-1) S P2 / 2P^2))/2
double confidence(double p, double p2, int m, long long s, double epsilon);

struct CountEstimate {
    double p_est = 0.0;
    double p2_est = 0.0;
    int m = 0;
    long long s = 0;
    double q_bar = 0.0;
    double r_bar = 0.0;
    double epsilon = 0.0;
    double confidence = 0.0;
    // the collision-rate inversion is only trustworthy when P_mu/P^mu decays;
    // set when the data contradicts that (rate > 0.5 or a single distinct state)
    bool truncation_suspect = false;
    long long total_iterations = 0;  // evolve-and-measure cycles, discarded included
    long long kept_measurements = 0;
    long long batches_collected = 0;
    long long steps_per_iteration = 0; // evolution steps of the runner, when known
};

// point estimate from S batches of size M:
//   P_est = (M-1) Rbar / (2 (M - Qbar)),  P2_est = P_est Rbar / M
// throws NoCollisionsError when Qbar == M.
CountEstimate estimate_p(const std::vector<CaptureBatch>& batches, double epsilon);

struct AdaptiveCountOptions {
    int initial_m = 16;
    long long initial_s = 8;
    long long measurement_budget = 10000000;
    double expected_accept = 1.0; // 1 - eta^2 of the runner
    long long steps_per_iteration = 0;
};

// the adaptive driver: collects S batches of M ground states, doubles M while
// every batch is collision-free, doubles S until the achieved confidence
// reaches 1 - delta_target
CountEstimate adaptive_count(const std::function<std::uint64_t()>& runner,
                             const std::function<bool(std::uint64_t)>& is_ground,
                             const std::function<double(std::uint64_t)>& weight_of,
                             double epsilon, double delta_target,
                             const AdaptiveCountOptions& opt = {});

void write_count_json(const CountEstimate& est, std::ostream& out,
                      double gate_cost_total = 0.0);

} // namespace qcount

#endif
