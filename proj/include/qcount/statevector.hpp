#ifndef QCOUNT_STATEVECTOR_HPP
#define QCOUNT_STATEVECTOR_HPP

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

#include "qcount/hamiltonian.hpp"
#include "qcount/rng.hpp"
#include "qcount/weights.hpp"

namespace qcount {

struct StateVector {
    int qubit_count = 0;
    std::vector<std::complex<double>> amplitudes; // length 2^qubit_count

    double norm() const;
};

// amplitudes sqrt(w(phi)); for the product weight model this is the product
// state (sqrt(1-q)|0> + sqrt(q)|1>)^{x n}
StateVector prepare_initial(const WeightModel& w);

// a_phi *= exp(-i beta E(phi))
void apply_phase_z(StateVector& psi, std::span<const double> energies, double beta);
void apply_phase_z(StateVector& psi, const SpinHamiltonian& h, double beta);

// exp(-i alpha Hx) with Hx = -|psi0><psi0|:
// psi += (e^{i alpha} - 1) <psi0|psi> psi0
void apply_mixer(StateVector& psi, const StateVector& psi0, double alpha);

// 2 P_G - 1: ground amplitudes kept, excited amplitudes negated
void apply_grover_oracle(StateVector& psi, std::span<const double> energies,
                         double ground_energy);

double ground_occupation(const StateVector& psi, std::span<const std::uint64_t> ground);

// Hamiltonian (not unitary) application, for spectral checks
void apply_hamiltonian_z(StateVector& psi, std::span<const double> energies);
void apply_hamiltonian_x(StateVector& psi, const StateVector& psi0);

// samples a basis state with probability |a_phi|^2 via inverse cdf;
// deterministic given the rng state
std::uint64_t measure(const StateVector& psi, Rng& rng);

// repeated sampling from a fixed state
class MeasurementSampler {
public:
    explicit MeasurementSampler(const StateVector& psi);
    std::uint64_t draw(Rng& rng) const;

private:
    std::vector<double> cdf_;
};

} // namespace qcount

#endif
