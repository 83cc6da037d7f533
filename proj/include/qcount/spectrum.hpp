#ifndef QCOUNT_SPECTRUM_HPP
#define QCOUNT_SPECTRUM_HPP

#include <iosfwd>
#include <vector>

#include "qcount/hamiltonian.hpp"
#include "qcount/weights.hpp"

namespace qcount {

// distinct energies E_0 < ... < E_{m-1} with per-level moments
// N_j^(mu) = sum over states at level j of w(state)^mu.
// moment order 0 counts states; order 1 sums weights; the ground-level
// order-1 moment is the weighted ground-state count P.
struct SpectrumSummary {
    std::vector<double> energies;
    std::vector<std::vector<double>> moments; // [level][mu], mu = 0..max_moment

    int level_count() const { return static_cast<int>(energies.size()); }
    int max_moment() const { return moments.empty() ? -1 : static_cast<int>(moments[0].size()) - 1; }
    double ground_energy() const { return energies.at(0); }
    double moment(int level, int mu) const { return moments.at(level).at(mu); }
    double p() const { return moment(0, 1); }
    double p2() const { return moment(0, 2); }
};

// exact spectrum by iterating all 2^n basis states. energies are grouped
// exactly for integer-spectrum hamiltonians and with absolute tolerance 1e-9
// otherwise. max_moment is clamped below by 2.
// refuses qubit counts above `exhaustive_limit`.
SpectrumSummary enumerate_spectrum(const SpinHamiltonian& h, const WeightModel& w,
                                   int max_moment = 2, int exhaustive_limit = 24);

// csv columns: level,energy,N0,N1,N2
void write_spectrum_csv(const SpectrumSummary& s, std::ostream& out);

} // namespace qcount

#endif
