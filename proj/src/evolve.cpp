#include "qcount/evolve.hpp"

#include <algorithm>
#include <cstdio>
#include <ostream>
#include <stdexcept>

namespace qcount {

FullEngine::FullEngine(const SpinHamiltonian& h, const WeightModel& w) : weights_(w) {
    if (h.qubit_count != w.qubit_count())
        throw std::invalid_argument("engine: qubit count mismatch");
    const std::uint64_t dim = 1ull << h.qubit_count;
    energies_.resize(dim);
    for (std::uint64_t phi = 0; phi < dim; ++phi) energies_[phi] = h.energy(phi);
    ground_energy_ = *std::min_element(energies_.begin(), energies_.end());
    for (std::uint64_t phi = 0; phi < dim; ++phi)
        if (energies_[phi] == ground_energy_) ground_.push_back(phi);
    psi0_ = prepare_initial(w);
    p_ = ground_occupation(psi0_, ground_);
    integer_spectrum_ = h.integer_spectrum;
}

std::vector<double> FullEngine::per_ground_occupation(const State& psi) const {
    std::vector<double> occ;
    occ.reserve(ground_.size());
    for (std::uint64_t g : ground_) occ.push_back(std::norm(psi.amplitudes[g]));
    return occ;
}

bool FullEngine::sample_is_ground(const State& psi, Rng& rng) const {
    return energies_[measure(psi, rng)] == ground_energy_;
}

SubspaceEngine::SubspaceEngine(SymmetricSubspace s) : space_(std::move(s)) {
    if (!space_.ground_present)
        throw std::invalid_argument("engine: ground level carries zero weight");
    psi0_ = subspace_prepare(space_);
}

bool SubspaceEngine::integer_spectrum() const {
    for (double e : space_.energies)
        if (e != std::floor(e)) return false;
    return true;
}

long long grover_steps_to_target(double p, double target) {
    if (p <= 0.0 || p > 1.0) throw std::invalid_argument("grover_steps_to_target: bad p");
    const double theta = std::asin(std::sqrt(std::min(1.0, p)));
    long long t = 0;
    while (std::pow(std::sin((2.0 * t + 1.0) * theta), 2) < target) {
        ++t;
        if (t > 100000000) throw ResourceCapError("grover_steps_to_target: unreachable target");
    }
    return t;
}

void write_run_csv(const RunRecord& rec, std::ostream& out) {
    out << "step,alpha,beta,occupation\n";
    char buf[128];
    for (std::size_t i = 0; i < rec.occupations.size(); ++i) {
        const auto [a, b] = rec.angles[i];
        std::snprintf(buf, sizeof buf, "%zu,%.12g,%.12g,%.17g\n", i + 1, a, b,
                      rec.occupations[i]);
        out << buf;
    }
}

void write_per_ground_csv(const RunRecord& rec, double dt, std::ostream& out) {
    out << "step,t,occ_total";
    if (!rec.per_ground.empty())
        for (std::size_t g = 0; g < rec.per_ground[0].size(); ++g) out << ",g" << g;
    out << "\n";
    char buf[64];
    for (std::size_t i = 0; i < rec.per_ground.size(); ++i) {
        std::snprintf(buf, sizeof buf, "%zu,%.12g,%.17g", i + 1, (i + 1) * dt,
                      rec.occupations[i]);
        out << buf;
        for (double v : rec.per_ground[i]) {
            std::snprintf(buf, sizeof buf, ",%.17g", v);
            out << buf;
        }
        out << "\n";
    }
}

} // namespace qcount
