#include "qcount/omcs.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>
#include <stdexcept>

#include "qcount/errors.hpp"

namespace qcount {

double omcs_threshold(double epsilon, double delta) {
    if (epsilon <= 0.0 || epsilon >= 1.0 || delta <= 0.0 || delta >= 1.0)
        throw std::invalid_argument("omcs: epsilon, delta in (0,1)");
    const double lambda = std::exp(1.0) - 2.0;
    return 1.0 + 4.0 * lambda * (1.0 + epsilon) * std::log(2.0 / delta) / (epsilon * epsilon);
}

std::uint64_t draw_weighted_sample(const WeightModel& w, Rng& rng) {
    if (w.is_bernoulli()) {
        std::uint64_t phi = 0;
        const double q = w.q();
        for (int b = 0; b < w.qubit_count(); ++b)
            if (rng.uniform01() < q) phi |= 1ull << b;
        return phi;
    }
    const std::uint64_t dim = 1ull << w.qubit_count();
    const double u = rng.uniform01();
    double acc = 0.0;
    for (std::uint64_t phi = 0; phi < dim; ++phi) {
        acc += w.weight(phi);
        if (u < acc) return phi;
    }
    return dim - 1;
}

OmcsResult omcs_estimate(const SpinHamiltonian& h, const WeightModel& w,
                         double ground_energy, double epsilon, double delta,
                         std::uint64_t seed, long long sample_cap) {
    const double upsilon = omcs_threshold(epsilon, delta);
    Rng rng(seed);
    OmcsResult res;
    res.epsilon = epsilon;
    res.delta = delta;
    res.seed = seed;
    double hits = 0.0;
    while (hits < upsilon) {
        if (++res.samples_drawn > sample_cap)
            throw ResourceCapError("omcs: sample cap exceeded (P too small for the budget)");
        const std::uint64_t phi = draw_weighted_sample(w, rng);
        if (h.energy(phi) == ground_energy) hits += 1.0;
    }
    res.p_est = upsilon / static_cast<double>(res.samples_drawn);
    return res;
}

void write_omcs_trials_csv(const std::vector<OmcsResult>& trials, std::ostream& out) {
    out << "trial,samples_drawn,p_est\n";
    char buf[96];
    for (std::size_t i = 0; i < trials.size(); ++i) {
        std::snprintf(buf, sizeof buf, "%zu,%lld,%.17g\n", i, trials[i].samples_drawn,
                      trials[i].p_est);
        out << buf;
    }
}

} // namespace qcount
