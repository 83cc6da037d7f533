#include "qcount/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <ostream>
#include <stdexcept>

namespace qcount {

namespace {

constexpr double kEnergyTol = 1e-9;

// index of `e` in the tolerance-deduplicated sorted list, inserting if new
int level_index(std::vector<double>& reps, double e) {
    auto it = std::lower_bound(reps.begin(), reps.end(), e - kEnergyTol);
    if (it != reps.end() && std::abs(*it - e) <= kEnergyTol)
        return static_cast<int>(it - reps.begin());
    return static_cast<int>(reps.insert(it, e) - reps.begin());
}

} // namespace

SpectrumSummary enumerate_spectrum(const SpinHamiltonian& h, const WeightModel& w,
                                   int max_moment, int exhaustive_limit) {
    if (h.qubit_count != w.qubit_count())
        throw std::invalid_argument("enumerate_spectrum: qubit count mismatch");
    if (h.qubit_count > exhaustive_limit)
        throw std::invalid_argument(
            "enumerate_spectrum: qubit count exceeds the exhaustive limit; use the "
            "transfer-matrix oracle (dp_spectrum) or the linear-graph recursion instead");
    const int mu_max = std::max(2, max_moment);
    const std::uint64_t dim = 1ull << h.qubit_count;

    SpectrumSummary s;
    if (h.integer_spectrum) {
        std::map<long long, std::vector<double>> levels;
        for (std::uint64_t phi = 0; phi < dim; ++phi) {
            const long long e = std::llround(h.energy(phi));
            auto [it, fresh] = levels.try_emplace(e);
            if (fresh) it->second.assign(mu_max + 1, 0.0);
            const double wv = w.weight(phi);
            double p = 1.0;
            for (int mu = 0; mu <= mu_max; ++mu) {
                it->second[mu] += p;
                p *= wv;
            }
        }
        for (const auto& [e, m] : levels) {
            s.energies.push_back(static_cast<double>(e));
            s.moments.push_back(m);
        }
        return s;
    }

    // general coefficients: two passes — collect distinct energies, then accumulate
    std::vector<double> reps;
    for (std::uint64_t phi = 0; phi < dim; ++phi) level_index(reps, h.energy(phi));
    s.energies = reps;
    s.moments.assign(reps.size(), std::vector<double>(mu_max + 1, 0.0));
    for (std::uint64_t phi = 0; phi < dim; ++phi) {
        const double e = h.energy(phi);
        auto it = std::lower_bound(reps.begin(), reps.end(), e - kEnergyTol);
        const int j = static_cast<int>(it - reps.begin());
        const double wv = w.weight(phi);
        double p = 1.0;
        for (int mu = 0; mu <= mu_max; ++mu) {
            s.moments[j][mu] += p;
            p *= wv;
        }
    }
    return s;
}

void write_spectrum_csv(const SpectrumSummary& s, std::ostream& out) {
    out << "level,energy,N0,N1,N2\n";
    char buf[160];
    for (int j = 0; j < s.level_count(); ++j) {
        std::snprintf(buf, sizeof buf, "%d,%.12g,%.12g,%.17g,%.17g\n", j, s.energies[j],
                      s.moments[j][0], s.moments[j][1], s.moments[j][2]);
        out << buf;
    }
}

} // namespace qcount
