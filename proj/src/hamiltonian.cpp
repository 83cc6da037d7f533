#include "qcount/hamiltonian.hpp"

#include <bit>
#include <map>
#include <stdexcept>

namespace qcount {

double SpinHamiltonian::energy(std::uint64_t basis_state) const {
    if (!vertex_masks.empty()) {
        int uncovered = 0;
        for (std::uint64_t m : vertex_masks)
            uncovered += ((basis_state & m) == m);
        return static_cast<double>(uncovered);
    }
    return energy_from_terms(basis_state);
}

double SpinHamiltonian::energy_from_terms(std::uint64_t basis_state) const {
    double e = 0.0;
    for (const auto& t : terms) {
        const int parity = std::popcount(basis_state & t.mask) & 1;
        e += parity ? -t.coeff : t.coeff;
    }
    return e;
}

SpinHamiltonian build_edge_cover_hamiltonian(const Graph& g) {
    g.validate();
    const int n = g.edge_count();
    if (n > 63) throw std::invalid_argument("edge-cover hamiltonian: more than 63 edges");

    SpinHamiltonian h;
    h.qubit_count = n;
    h.integer_spectrum = true;

    std::vector<std::uint64_t> incident(g.vertex_count, 0);
    for (int e = 0; e < n; ++e) {
        incident[g.edges[e].first] |= 1ull << e;
        incident[g.edges[e].second] |= 1ull << e;
    }
    h.vertex_masks = incident;

    // prod_{e in E(v)} (1 - sigma^z_e)/2 expands over subsets S of E(v) as
    // 2^{-deg} sum_S (-1)^{|S|} prod_{e in S} sigma^z_e
    std::map<std::uint64_t, double> acc;
    for (std::uint64_t vm : incident) {
        const int deg = std::popcount(vm);
        if (deg > 28)
            throw std::invalid_argument("edge-cover hamiltonian: vertex degree too large to expand");
        const double scale = 1.0 / static_cast<double>(1ull << deg);
        // iterate the subsets of vm
        std::uint64_t s = 0;
        while (true) {
            const int bits = std::popcount(s);
            acc[s] += (bits & 1) ? -scale : scale;
            if (s == vm) break;
            s = (s - vm) & vm;
        }
    }
    for (const auto& [mask, coeff] : acc)
        if (coeff != 0.0) h.terms.push_back({mask, coeff});
    return h;
}

} // namespace qcount
