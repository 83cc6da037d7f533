#ifndef QCOUNT_HAMILTONIAN_HPP
#define QCOUNT_HAMILTONIAN_HPP

#include <cstdint>
#include <vector>

#include "qcount/graph.hpp"

namespace qcount {

// one product of sigma^z operators over the qubits in `mask`, scaled by coeff;
// mask 0 is a constant term
struct SpinTerm {
    std::uint64_t mask = 0;
    double coeff = 0.0;
};

// diagonal Hamiltonian H = sum_s J_s prod_{j in s} sigma^z_j.
// convention: bit value 0 <-> sigma^z eigenvalue +1, bit value 1 <-> -1,
// so the energy of basis state phi is sum_s J_s (-1)^popcount(phi & mask_s).
struct SpinHamiltonian {
    int qubit_count = 0;
    std::vector<SpinTerm> terms; // deduplicated, sorted by mask

    // edge-cover fast path: one mask per vertex holding its incident edges;
    // the energy is the number of vertices whose incident edges are all 1 (absent)
    std::vector<std::uint64_t> vertex_masks;
    bool integer_spectrum = false;

    double energy(std::uint64_t basis_state) const;

    // always evaluates through the expanded spin-product terms
    double energy_from_terms(std::uint64_t basis_state) const;
};

// H = sum_v prod_{e in E(v)} (1 - sigma^z_e)/2, expanded into spin products;
// qubit j <-> edge j in edge-list order; rejects graphs with isolated vertices
SpinHamiltonian build_edge_cover_hamiltonian(const Graph& g);

} // namespace qcount

#endif
