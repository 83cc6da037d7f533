#ifndef QCOUNT_SUBSPACE_STATE_HPP
#define QCOUNT_SUBSPACE_STATE_HPP

#include <complex>
#include <vector>

#include "qcount/symspace.hpp"

namespace qcount {

// amplitudes over the symmetric basis vectors, one per positive-weight level
struct SubspaceState {
    std::vector<std::complex<double>> amplitudes;

    double norm() const;
};

// amplitudes sqrt(N_j^(1)); mirrors prepare_initial
SubspaceState subspace_prepare(const SymmetricSubspace& s);

void subspace_phase_z(SubspaceState& psi, const SymmetricSubspace& s, double beta);
void subspace_mixer(SubspaceState& psi, const SubspaceState& psi0, double alpha);
void subspace_grover_oracle(SubspaceState& psi);

// |amplitude on the ground basis vector|^2
double subspace_occupation(const SubspaceState& psi);

} // namespace qcount

#endif
