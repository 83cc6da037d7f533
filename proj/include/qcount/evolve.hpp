#ifndef QCOUNT_EVOLVE_HPP
#define QCOUNT_EVOLVE_HPP

#include <cmath>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "qcount/errors.hpp"
#include "qcount/rng.hpp"
#include "qcount/statevector.hpp"
#include "qcount/subspace_state.hpp"
#include "qcount/symspace.hpp"

namespace qcount {

struct RunRecord {
    std::string algorithm;
    long long steps = 0;
    std::vector<double> occupations;               // after each step
    std::vector<std::pair<double, double>> angles; // (alpha_j, beta_j)
    double final_occupation = 0.0;
    std::uint64_t seed = 0;
    // per-step |<g|psi>|^2 for each ground state, when tracked
    std::vector<std::vector<double>> per_ground;
};

// full 2^n statevector evolution; caches the energy table, the initial state
// and the ground-state list
class FullEngine {
public:
    using State = StateVector;
    static constexpr bool has_per_ground = true;

    FullEngine(const SpinHamiltonian& h, const WeightModel& w);

    State initial() const { return psi0_; }
    void phase_z(State& psi, double beta) const { apply_phase_z(psi, energies_, beta); }
    void mixer(State& psi, double alpha) const { apply_mixer(psi, psi0_, alpha); }
    void grover_oracle(State& psi) const {
        apply_grover_oracle(psi, energies_, ground_energy_);
    }
    double occupation(const State& psi) const { return ground_occupation(psi, ground_); }

    double p() const { return p_; }
    bool integer_spectrum() const { return integer_spectrum_; }
    double ground_energy() const { return ground_energy_; }
    const std::vector<std::uint64_t>& ground_states() const { return ground_; }
    std::span<const double> energies() const { return energies_; }
    const StateVector& initial_state() const { return psi0_; }
    double state_weight(std::uint64_t phi) const { return weights_.weight(phi); }

    std::vector<double> per_ground_occupation(const State& psi) const;
    bool sample_is_ground(const State& psi, Rng& rng) const;

private:
    WeightModel weights_;
    std::vector<double> energies_;
    StateVector psi0_;
    std::vector<std::uint64_t> ground_;
    double ground_energy_ = 0.0;
    double p_ = 0.0;
    bool integer_spectrum_ = false;
};

// m-dimensional mirror over the symmetric basis; runs wherever exact level
// moments are available, including sizes far beyond the full simulator
class SubspaceEngine {
public:
    using State = SubspaceState;
    static constexpr bool has_per_ground = false;

    explicit SubspaceEngine(SymmetricSubspace s);

    State initial() const { return psi0_; }
    void phase_z(State& psi, double beta) const { subspace_phase_z(psi, space_, beta); }
    void mixer(State& psi, double alpha) const { subspace_mixer(psi, psi0_, alpha); }
    void grover_oracle(State& psi) const { subspace_grover_oracle(psi); }
    double occupation(const State& psi) const { return subspace_occupation(psi); }

    double p() const { return space_.p(); }
    bool integer_spectrum() const;
    const SymmetricSubspace& space() const { return space_; }

    bool sample_is_ground(const State& psi, Rng& rng) const {
        return rng.bernoulli(occupation(psi));
    }

private:
    SymmetricSubspace space_;
    SubspaceState psi0_;
};

// smallest iteration count t with sin^2((2t+1) asin(sqrt(p))) >= target
long long grover_steps_to_target(double p, double target);

template <class Engine>
RunRecord run_grover(const Engine& eng, long long steps, bool track_per_ground = false) {
    RunRecord rec;
    rec.algorithm = "grover";
    rec.steps = steps;
    auto psi = eng.initial();
    for (long long t = 0; t < steps; ++t) {
        eng.grover_oracle(psi);
        eng.mixer(psi, M_PI); // exp(-i pi Hx) = U0
        rec.occupations.push_back(eng.occupation(psi));
        rec.angles.emplace_back(M_PI, M_PI);
        if constexpr (Engine::has_per_ground) {
            if (track_per_ground) rec.per_ground.push_back(eng.per_ground_occupation(psi));
        }
    }
    rec.final_occupation = rec.occupations.empty() ? eng.occupation(psi)
                                                   : rec.occupations.back();
    return rec;
}

// discrete-time interpolation from the mixer to the diagonal Hamiltonian with
// the linear schedule beta(t) = 1 - alpha(t) = t/T, sampled at step midpoints
template <class Engine>
RunRecord run_aqo(const Engine& eng, double total_time, double dt,
                  bool track_per_ground = false) {
    if (dt <= 0.0) throw std::invalid_argument("run_aqo: dt must be positive");
    RunRecord rec;
    rec.algorithm = "aqo";
    const long long steps = std::max<long long>(1, std::llround(total_time / dt));
    rec.steps = steps;
    rec.occupations.reserve(steps);
    auto psi = eng.initial();
    for (long long j = 1; j <= steps; ++j) {
        const double t = (static_cast<double>(j) - 0.5) * dt;
        const double beta = t / total_time;
        const double alpha = 1.0 - beta;
        eng.phase_z(psi, beta * dt);
        eng.mixer(psi, alpha * dt);
        rec.occupations.push_back(eng.occupation(psi));
        rec.angles.emplace_back(alpha, beta);
        if constexpr (Engine::has_per_ground) {
            if (track_per_ground) rec.per_ground.push_back(eng.per_ground_occupation(psi));
        }
    }
    rec.final_occupation = rec.occupations.back();
    return rec;
}

struct AqoTimeOptions {
    int doubling_cap = 30;
    bool refine = false;    // bisect below the first passing T to the minimal one
    bool sampled = false;   // estimate the final occupation from measurements
    int shots = 64;
    std::uint64_t seed = 1;
};

namespace detail {

template <class Engine>
double aqo_final_occupation(const Engine& eng, long long steps, double dt,
                            const AqoTimeOptions& opt, Rng* rng) {
    const double total_time = static_cast<double>(steps) * dt;
    auto psi = eng.initial();
    for (long long j = 1; j <= steps; ++j) {
        const double t = (static_cast<double>(j) - 0.5) * dt;
        const double beta = t / total_time;
        eng.phase_z(psi, beta * dt);
        eng.mixer(psi, (1.0 - beta) * dt);
    }
    if (!opt.sampled) return eng.occupation(psi);
    int hits = 0;
    for (int s = 0; s < opt.shots; ++s) hits += eng.sample_is_ground(psi, *rng);
    return static_cast<double>(hits) / opt.shots;
}

} // namespace detail

// doubling search for the evolution time reaching occupation >= 1 - eta2,
// starting from the guess T = 4/sqrt(P); returns the step count T/dt.
// with `refine`, bisects inside the final doubling bracket for the minimal
// passing step count.
template <class Engine>
long long find_aqo_steps(const Engine& eng, double eta2, double dt,
                         const AqoTimeOptions& opt = {}) {
    const double p = eng.p();
    if (p <= 0.0) throw std::invalid_argument("find_aqo_steps: P must be positive");
    const double target = 1.0 - eta2;
    Rng rng(opt.seed);

    auto occ_at = [&](long long steps) {
        return detail::aqo_final_occupation(eng, steps, dt, opt, &rng);
    };

    long long hi = std::max<long long>(1, std::llround(4.0 / std::sqrt(p) / dt));
    int doublings = 0;
    while (occ_at(hi) < target) {
        if (++doublings > opt.doubling_cap)
            throw ResourceCapError("find_aqo_steps: doubling cap exceeded");
        hi *= 2;
    }
    if (!opt.refine) return hi;

    long long lo;
    if (doublings > 0) {
        lo = hi / 2; // known to fail
    } else {
        lo = hi;
        while (lo > 1 && occ_at(lo / 2) >= target) lo /= 2;
        if (lo == 1) return 1;
        hi = lo;
        lo /= 2;
    }
    while (hi - lo > 1 && hi - lo > static_cast<long long>(0.005 * hi)) {
        const long long mid = lo + (hi - lo) / 2;
        if (occ_at(mid) >= target)
            hi = mid;
        else
            lo = mid;
    }
    return hi;
}

// csv columns: step,alpha,beta,occupation
void write_run_csv(const RunRecord& rec, std::ostream& out);

// csv columns: step,t,occ_total,g0,... (per-ground occupations)
void write_per_ground_csv(const RunRecord& rec, double dt, std::ostream& out);

} // namespace qcount

#endif
