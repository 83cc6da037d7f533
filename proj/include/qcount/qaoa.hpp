#ifndef QCOUNT_QAOA_HPP
#define QCOUNT_QAOA_HPP

#include <cmath>
#include <cstdio>
#include <iosfwd>
#include <utility>

#include "qcount/evolve.hpp"

namespace qcount {

struct QaoaOptions {
    int grid = 64;                  // grid points per angle on [0, 2pi)
    int sweeps = 3;                 // coordinate-descent passes after the grid
    double occupation_tol = 1e-8;   // stop refining below this gain
    int depth_cap = 2000;
    bool warn_non_integer = true;   // exp(-i beta Hz) is 2pi-periodic only for
                                    // integer spectra; warn once otherwise
};

struct GreedyStep {
    double alpha = 0.0, beta = 0.0;
    double occupation = 0.0;
};

namespace detail {

// golden-section maximization on [lo, hi]; keeps the best point ever sampled,
// starting from (x0, f0), and moves the incumbent only on a strict gain above
// eps (so an exact grid optimum such as pi is returned bit-identically)
template <class F>
std::pair<double, double> golden_max(F&& f, double lo, double hi, double x0, double f0,
                                     double eps) {
    constexpr double invphi = 0.61803398874989484820;
    double bx = x0, bf = f0;
    double a = lo, b = hi;
    double c = b - invphi * (b - a);
    double d = a + invphi * (b - a);
    double fc = f(c), fd = f(d);
    for (int it = 0; it < 80 && (b - a) > 1e-12; ++it) {
        if (fc > bf + eps) { bx = c; bf = fc; }
        if (fd > bf + eps) { bx = d; bf = fd; }
        if (fc > fd) {
            b = d; d = c; fd = fc;
            c = b - invphi * (b - a);
            fc = f(c);
        } else {
            a = c; c = d; fc = fd;
            d = a + invphi * (b - a);
            fd = f(d);
        }
    }
    return {bx, bf};
}

} // namespace detail

// one variational layer: maximize the ground-space occupation of
// exp(-i alpha Hx) exp(-i beta Hz) |psi> over (alpha, beta) in [0, 2pi)^2
// by a uniform grid followed by per-coordinate golden-section refinement;
// ties resolve to the smallest (beta, alpha)
template <class Engine>
GreedyStep greedy_optimize_step(const Engine& eng, const typename Engine::State& psi,
                                const QaoaOptions& opt = {}) {
    const double h = 2.0 * M_PI / opt.grid;
    typename Engine::State scratch = psi;
    auto eval = [&](double alpha, double beta) {
        scratch = psi;
        eng.phase_z(scratch, beta);
        eng.mixer(scratch, alpha);
        return eng.occupation(scratch);
    };

    // near-ties (within 1e-12) keep the earlier grid point, i.e. the smallest
    // (beta, alpha) pair; this also keeps exact grid optima such as pi intact
    constexpr double kMoveEps = 1e-12;
    GreedyStep best{0.0, 0.0, eval(0.0, 0.0)};
    for (int ib = 0; ib < opt.grid; ++ib) {
        const double beta = h * ib;
        for (int ia = 0; ia < opt.grid; ++ia) {
            const double alpha = h * ia;
            const double occ = eval(alpha, beta);
            if (occ > best.occupation + kMoveEps) best = {alpha, beta, occ};
        }
    }

    for (int sweep = 0; sweep < opt.sweeps; ++sweep) {
        const double before = best.occupation;
        auto fa = [&](double a) { return eval(a, best.beta); };
        auto [a1, o1] = detail::golden_max(fa, std::max(0.0, best.alpha - h),
                                           std::min(2.0 * M_PI, best.alpha + h),
                                           best.alpha, best.occupation, kMoveEps);
        best.alpha = a1;
        best.occupation = o1;
        auto fb = [&](double b) { return eval(best.alpha, b); };
        auto [b1, o2] = detail::golden_max(fb, std::max(0.0, best.beta - h),
                                           std::min(2.0 * M_PI, best.beta + h),
                                           best.beta, best.occupation, kMoveEps);
        best.beta = b1;
        best.occupation = o2;
        if (best.occupation - before < opt.occupation_tol) break;
    }
    return best;
}

// repeats greedy layers until the occupation reaches `target`; the realized
// depth is the layer count
template <class Engine>
RunRecord run_qaoa_greedy(const Engine& eng, double target, const QaoaOptions& opt = {},
                          bool track_per_ground = false) {
    if (eng.p() <= 0.0) throw std::invalid_argument("run_qaoa_greedy: P must be positive");
    if (opt.warn_non_integer && !eng.integer_spectrum())
        std::fprintf(stderr, "qaoa: non-integer spectrum; the phase layer is not "
                             "2pi-periodic, angle domain kept at [0, 2pi)\n");
    RunRecord rec;
    rec.algorithm = "qaoa-greedy";
    auto psi = eng.initial();
    double occ = eng.occupation(psi);
    while (occ < target) {
        if (static_cast<int>(rec.angles.size()) >= opt.depth_cap)
            throw ResourceCapError("run_qaoa_greedy: depth cap " +
                                   std::to_string(opt.depth_cap) +
                                   " reached before occupation target");
        const auto step = greedy_optimize_step(eng, psi, opt);
        eng.phase_z(psi, step.beta);
        eng.mixer(psi, step.alpha);
        occ = eng.occupation(psi);
        rec.angles.emplace_back(step.alpha, step.beta);
        rec.occupations.push_back(occ);
        if constexpr (Engine::has_per_ground) {
            if (track_per_ground) rec.per_ground.push_back(eng.per_ground_occupation(psi));
        }
    }
    rec.steps = static_cast<long long>(rec.angles.size());
    rec.final_occupation = occ;
    return rec;
}

struct ConstantAngles {
    double alpha = 0.0, beta = 0.0;
    double occupation = 0.0; // achieved by the depth-T circuit
};

// one shared (alpha, beta) for all layers, chosen to maximize the final
// occupation of the fixed-depth circuit; same grid + refinement policy
template <class Engine>
ConstantAngles optimize_constant_angles(const Engine& eng, long long depth,
                                        const QaoaOptions& opt = {}) {
    if (depth < 0) throw std::invalid_argument("optimize_constant_angles: depth >= 0");
    const double h = 2.0 * M_PI / opt.grid;
    const auto psi0 = eng.initial();
    typename Engine::State scratch = psi0;
    auto eval = [&](double alpha, double beta) {
        scratch = psi0;
        for (long long t = 0; t < depth; ++t) {
            eng.phase_z(scratch, beta);
            eng.mixer(scratch, alpha);
        }
        return eng.occupation(scratch);
    };

    constexpr double kMoveEps = 1e-12;
    ConstantAngles best{0.0, 0.0, eval(0.0, 0.0)};
    for (int ib = 0; ib < opt.grid; ++ib) {
        const double beta = h * ib;
        for (int ia = 0; ia < opt.grid; ++ia) {
            const double alpha = h * ia;
            const double occ = eval(alpha, beta);
            if (occ > best.occupation + kMoveEps) best = {alpha, beta, occ};
        }
    }
    for (int sweep = 0; sweep < opt.sweeps; ++sweep) {
        const double before = best.occupation;
        auto fa = [&](double a) { return eval(a, best.beta); };
        auto [a1, o1] = detail::golden_max(fa, std::max(0.0, best.alpha - h),
                                           std::min(2.0 * M_PI, best.alpha + h),
                                           best.alpha, best.occupation, kMoveEps);
        best.alpha = a1;
        best.occupation = o1;
        auto fb = [&](double b) { return eval(best.alpha, b); };
        auto [b1, o2] = detail::golden_max(fb, std::max(0.0, best.beta - h),
                                           std::min(2.0 * M_PI, best.beta + h),
                                           best.beta, best.occupation, kMoveEps);
        best.beta = b1;
        best.occupation = o2;
        if (best.occupation - before < opt.occupation_tol) break;
    }
    return best;
}

template <class Engine>
RunRecord run_qaoa_constant(const Engine& eng, double alpha, double beta, long long depth,
                            bool track_per_ground = false) {
    RunRecord rec;
    rec.algorithm = "qaoa-constant";
    rec.steps = depth;
    auto psi = eng.initial();
    for (long long t = 0; t < depth; ++t) {
        eng.phase_z(psi, beta);
        eng.mixer(psi, alpha);
        rec.occupations.push_back(eng.occupation(psi));
        rec.angles.emplace_back(alpha, beta);
        if constexpr (Engine::has_per_ground) {
            if (track_per_ground) rec.per_ground.push_back(eng.per_ground_occupation(psi));
        }
    }
    rec.final_occupation = rec.occupations.empty() ? eng.occupation(psi)
                                                   : rec.occupations.back();
    return rec;
}

// csv columns: step,alpha_over_pi,beta_over_pi,occupation
void write_angle_csv(const RunRecord& rec, std::ostream& out);

} // namespace qcount

#endif
