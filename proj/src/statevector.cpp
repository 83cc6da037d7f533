#include "qcount/statevector.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace qcount {

double StateVector::norm() const {
    double s = 0.0;
    for (const auto& a : amplitudes) s += std::norm(a);
    return std::sqrt(s);
}

StateVector prepare_initial(const WeightModel& w) {
    StateVector psi;
    psi.qubit_count = w.qubit_count();
    const std::uint64_t dim = 1ull << psi.qubit_count;
    psi.amplitudes.resize(dim);
    for (std::uint64_t phi = 0; phi < dim; ++phi)
        psi.amplitudes[phi] = std::sqrt(w.weight(phi));
    return psi;
}

void apply_phase_z(StateVector& psi, std::span<const double> energies, double beta) {
    const std::size_t dim = psi.amplitudes.size();
    for (std::size_t phi = 0; phi < dim; ++phi)
        psi.amplitudes[phi] *= std::polar(1.0, -beta * energies[phi]);
}

void apply_phase_z(StateVector& psi, const SpinHamiltonian& h, double beta) {
    const std::size_t dim = psi.amplitudes.size();
    for (std::size_t phi = 0; phi < dim; ++phi)
        psi.amplitudes[phi] *= std::polar(1.0, -beta * h.energy(phi));
}

void apply_mixer(StateVector& psi, const StateVector& psi0, double alpha) {
    std::complex<double> overlap = 0.0;
    const std::size_t dim = psi.amplitudes.size();
    for (std::size_t i = 0; i < dim; ++i)
        overlap += std::conj(psi0.amplitudes[i]) * psi.amplitudes[i];
    const std::complex<double> factor = (std::polar(1.0, alpha) - 1.0) * overlap;
    for (std::size_t i = 0; i < dim; ++i) psi.amplitudes[i] += factor * psi0.amplitudes[i];
}

void apply_grover_oracle(StateVector& psi, std::span<const double> energies,
                         double ground_energy) {
    const std::size_t dim = psi.amplitudes.size();
    for (std::size_t phi = 0; phi < dim; ++phi)
        if (energies[phi] != ground_energy) psi.amplitudes[phi] = -psi.amplitudes[phi];
}

double ground_occupation(const StateVector& psi, std::span<const std::uint64_t> ground) {
    double occ = 0.0;
    for (std::uint64_t g : ground) occ += std::norm(psi.amplitudes[g]);
    return occ;
}

void apply_hamiltonian_z(StateVector& psi, std::span<const double> energies) {
    const std::size_t dim = psi.amplitudes.size();
    for (std::size_t phi = 0; phi < dim; ++phi) psi.amplitudes[phi] *= energies[phi];
}

void apply_hamiltonian_x(StateVector& psi, const StateVector& psi0) {
    std::complex<double> overlap = 0.0;
    const std::size_t dim = psi.amplitudes.size();
    for (std::size_t i = 0; i < dim; ++i)
        overlap += std::conj(psi0.amplitudes[i]) * psi.amplitudes[i];
    for (std::size_t i = 0; i < dim; ++i) psi.amplitudes[i] = -overlap * psi0.amplitudes[i];
}

std::uint64_t measure(const StateVector& psi, Rng& rng) {
    const double u = rng.uniform01();
    double acc = 0.0;
    const std::size_t dim = psi.amplitudes.size();
    for (std::size_t phi = 0; phi < dim; ++phi) {
        acc += std::norm(psi.amplitudes[phi]);
        if (u < acc) return phi;
    }
    return dim - 1; // u landed in the rounding tail
}

MeasurementSampler::MeasurementSampler(const StateVector& psi) {
    cdf_.resize(psi.amplitudes.size());
    double acc = 0.0;
    for (std::size_t i = 0; i < cdf_.size(); ++i) {
        acc += std::norm(psi.amplitudes[i]);
        cdf_[i] = acc;
    }
    if (std::abs(acc - 1.0) > 1e-6)
        throw std::invalid_argument("measurement sampler: state is not normalized");
}

std::uint64_t MeasurementSampler::draw(Rng& rng) const {
    const double u = rng.uniform01() * cdf_.back();
    const auto it = std::upper_bound(cdf_.begin(), cdf_.end(), u);
    return static_cast<std::uint64_t>(std::min<std::ptrdiff_t>(
        it - cdf_.begin(), static_cast<std::ptrdiff_t>(cdf_.size()) - 1));
}

} // namespace qcount
