#include "qcount/subspace_state.hpp"

#include <cmath>

namespace qcount {

double SubspaceState::norm() const {
    double s = 0.0;
    for (const auto& a : amplitudes) s += std::norm(a);
    return std::sqrt(s);
}

SubspaceState subspace_prepare(const SymmetricSubspace& s) {
    SubspaceState psi;
    psi.amplitudes.reserve(s.dimension());
    for (double n1 : s.level_weights) psi.amplitudes.emplace_back(std::sqrt(n1));
    return psi;
}

void subspace_phase_z(SubspaceState& psi, const SymmetricSubspace& s, double beta) {
    for (std::size_t j = 0; j < psi.amplitudes.size(); ++j)
        psi.amplitudes[j] *= std::polar(1.0, -beta * s.energies[j]);
}

void subspace_mixer(SubspaceState& psi, const SubspaceState& psi0, double alpha) {
    std::complex<double> overlap = 0.0;
    for (std::size_t j = 0; j < psi.amplitudes.size(); ++j)
        overlap += std::conj(psi0.amplitudes[j]) * psi.amplitudes[j];
    const std::complex<double> factor = (std::polar(1.0, alpha) - 1.0) * overlap;
    for (std::size_t j = 0; j < psi.amplitudes.size(); ++j)
        psi.amplitudes[j] += factor * psi0.amplitudes[j];
}

void subspace_grover_oracle(SubspaceState& psi) {
    for (std::size_t j = 1; j < psi.amplitudes.size(); ++j)
        psi.amplitudes[j] = -psi.amplitudes[j];
}

double subspace_occupation(const SubspaceState& psi) {
    return std::norm(psi.amplitudes[0]);
}

} // namespace qcount
