#include "qcount/symspace.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>
#include <stdexcept>

namespace qcount {

double SymmetricSubspace::p() const {
    if (!ground_present)
        throw std::invalid_argument("symmetric subspace: ground level carries zero weight (P = 0)");
    return level_weights[0];
}

SymmetricSubspace SymmetricSubspace::from_spectrum(const SpectrumSummary& s) {
    SymmetricSubspace out;
    for (int j = 0; j < s.level_count(); ++j) {
        const double n1 = s.moment(j, 1);
        if (n1 <= 0.0) continue;
        out.energies.push_back(s.energies[j]);
        out.level_weights.push_back(n1);
    }
    if (out.energies.empty())
        throw std::invalid_argument("symmetric subspace: all levels have zero weight");
    out.ground_present =
        !s.energies.empty() && out.energies.front() == s.energies.front();
    double sum = 0.0;
    for (double w : out.level_weights) sum += w;
    if (std::abs(sum - 1.0) > 1e-9)
        throw std::invalid_argument("symmetric subspace: level weights do not sum to 1");
    return out;
}

double SecularSolution::gap() const {
    if (pole_offsets.size() < 2) return 0.0;
    return pole_offsets[0] + pole_offsets[1];
}

namespace {

// root of f on (lo, hi) where f(lo+) > 0 > f(hi-) or the reverse; bisection to
// abs_tol, then a few Newton steps (the secular function is smooth and
// monotone inside each bracket, so Newton polishes to machine precision)
template <typename F, typename DF>
double bisect_newton(F f, DF df, double lo, double hi, bool increasing, double abs_tol) {
    double a = lo, b = hi;
    for (int it = 0; it < 200 && (b - a) > abs_tol; ++it) {
        const double mid = 0.5 * (a + b);
        const double v = f(mid);
        if ((v < 0.0) == increasing)
            a = mid;
        else
            b = mid;
    }
    double x = 0.5 * (a + b);
    for (int it = 0; it < 6; ++it) {
        const double d = df(x);
        if (d == 0.0) break;
        const double nx = x - f(x) / d;
        if (!(nx > lo && nx < hi)) break;
        x = nx;
    }
    return x;
}

} // namespace

SecularSolution solve_secular(const SymmetricSubspace& s, double alpha, double beta) {
    if (alpha < 0.0 || beta < 0.0 || alpha + beta <= 0.0)
        throw std::invalid_argument("solve_secular: need alpha, beta >= 0 and alpha + beta > 0");
    const int m = s.dimension();
    const auto& e = s.energies;
    const auto& n = s.level_weights;

    SecularSolution sol;
    sol.alpha = alpha;
    sol.beta = beta;
    sol.lambdas.resize(m);
    sol.pole_offsets.resize(m);

    if (alpha == 0.0) {
        for (int j = 0; j < m; ++j) {
            sol.lambdas[j] = beta * e[j];
            sol.pole_offsets[j] = (j == 0) ? 0.0 : beta * (e[j] - e[j - 1]);
        }
        return sol;
    }

    const double scale = std::max(1.0, beta * std::abs(e[m - 1]));
    const double tol = 1e-12 * scale;
    const double inv_alpha = 1.0 / alpha;

    // ground root in the offset u = beta*E_0 - lambda, u in (0, alpha]:
    //   g(u) = sum_j n_j / (beta*(E_j - E_0) + u) - 1/alpha,  g(0+) = +inf, g(alpha) <= 0
    {
        auto g = [&](double u) {
            double acc = -inv_alpha;
            for (int j = 0; j < m; ++j) acc += n[j] / (beta * (e[j] - e[0]) + u);
            return acc;
        };
        auto dg = [&](double u) {
            double acc = 0.0;
            for (int j = 0; j < m; ++j) {
                const double d = beta * (e[j] - e[0]) + u;
                acc -= n[j] / (d * d);
            }
            return acc;
        };
        const double lo = 1e-14 * alpha, hi = alpha;
        if (!(g(lo) > 0.0))
            throw std::runtime_error("solve_secular: ground bracket has no sign change");
        const double u0 = (m == 1) ? alpha * n[0]
                                   : bisect_newton(g, dg, lo, hi, false, 1e-12 * alpha);
        sol.pole_offsets[0] = u0;
        sol.lambdas[0] = beta * e[0] - u0;
    }

    // interior roots in the offset t = lambda_j - beta*E_{j-1}, t in (0, w_j),
    // w_j = beta*(E_j - E_{j-1}): f(t) rises from -inf to +inf
    for (int j = 1; j < m; ++j) {
        const double w = beta * (e[j] - e[j - 1]);
        if (w <= 0.0) { // beta == 0: all poles coincide at 0
            sol.pole_offsets[j] = 0.0;
            sol.lambdas[j] = 0.0;
            continue;
        }
        auto f = [&](double t) {
            double acc = -inv_alpha;
            for (int k = 0; k < m; ++k) acc += n[k] / (beta * (e[k] - e[j - 1]) - t);
            return acc;
        };
        auto df = [&](double t) {
            double acc = 0.0;
            for (int k = 0; k < m; ++k) {
                const double d = beta * (e[k] - e[j - 1]) - t;
                acc += n[k] / (d * d);
            }
            return acc;
        };
        double lo = std::min(1e-14 * scale, 0.25 * w);
        double hi = w - std::min(1e-14 * scale, 0.25 * w);
        // roots can sit arbitrarily close to a pole (tiny alpha or tiny level
        // weight); shrink the nudge until the bracket straddles the root
        for (int k = 0; k < 80 && f(lo) >= 0.0 && lo > w * 1e-300; ++k) lo *= 1e-3;
        for (int k = 0; k < 80 && f(hi) <= 0.0 && (w - hi) > w * 1e-300; ++k)
            hi = w - (w - hi) * 1e-3;
        if (!(f(lo) < 0.0 && f(hi) > 0.0))
            throw std::runtime_error("solve_secular: interior bracket has no sign change "
                                     "(zero-weight level not dropped?)");
        const double t = bisect_newton(f, df, lo, hi, true, tol);
        sol.pole_offsets[j] = t;
        sol.lambdas[j] = beta * e[j - 1] + t;
    }
    return sol;
}

double gap_lower_bound(const SymmetricSubspace& s, double alpha, double beta) {
    if (s.dimension() < 2) return 0.0;
    return 2.0 * std::sqrt(alpha * beta * s.p() * (s.energies[1] - s.energies[0]));
}

namespace {

double schedule_alpha(const SymmetricSubspace& s, Schedule schedule, double beta) {
    if (schedule == Schedule::linear) return 1.0 - beta;
    if (s.dimension() < 2)
        throw std::invalid_argument("alt schedule needs at least two levels");
    return (s.energies[1] - s.energies[0]) * (1.0 - beta);
}

double gap_at(const SymmetricSubspace& s, Schedule schedule, double beta) {
    return solve_secular(s, schedule_alpha(s, schedule, beta), beta).gap();
}

} // namespace

MinGapResult min_gap_over_schedule(const SymmetricSubspace& s, Schedule schedule,
                                   int resolution) {
    if (resolution < 2) throw std::invalid_argument("min_gap_over_schedule: resolution >= 2");
    if (s.dimension() < 2) throw std::invalid_argument("min_gap_over_schedule: need m >= 2");

    double best_beta = 0.0, best_gap = 0.0;
    bool have = false;
    for (int i = 0; i <= resolution; ++i) {
        const double beta = static_cast<double>(i) / resolution;
        const double g = gap_at(s, schedule, beta);
        if (!have || g < best_gap) {
            best_gap = g;
            best_beta = beta;
            have = true;
        }
    }

    // golden-section refinement around the grid minimizer
    const double h = 1.0 / resolution;
    double a = std::max(0.0, best_beta - h);
    double b = std::min(1.0, best_beta + h);
    const double invphi = (std::sqrt(5.0) - 1.0) / 2.0;
    double c = b - invphi * (b - a);
    double d = a + invphi * (b - a);
    double fc = gap_at(s, schedule, c);
    double fd = gap_at(s, schedule, d);
    while (b - a > 1e-6) {
        if (fc < fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - invphi * (b - a);
            fc = gap_at(s, schedule, c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + invphi * (b - a);
            fd = gap_at(s, schedule, d);
        }
    }
    const double beta_star = 0.5 * (a + b);
    const double g = gap_at(s, schedule, beta_star);
    if (g < best_gap) {
        best_gap = g;
        best_beta = beta_star;
    }
    return {best_gap, best_beta};
}

double aqo_time_bound(const SymmetricSubspace& s, double eta) {
    if (s.dimension() < 2)
        throw std::invalid_argument("aqo_time_bound: need at least two levels");
    if (eta <= 0.0 || eta >= 1.0) throw std::invalid_argument("aqo_time_bound: eta in (0,1)");
    const double e0 = s.energies.front();
    const double e1 = s.energies[1];
    const double em = s.energies.back();
    const double d1 = e1 - e0;
    const double dm = em - e0;
    const double denom_min = std::min(d1 / ((1.0 + d1) * (1.0 + d1)),
                                      dm / ((1.0 + dm) * (1.0 + dm)));
    return (em + 1.0) / (4.0 * eta * s.p() * d1 * denom_min);
}

void write_gap_scan_csv(const SymmetricSubspace& s, Schedule schedule, int resolution,
                        std::ostream& out) {
    out << "beta";
    for (int j = 0; j < s.dimension(); ++j) out << ",lambda_" << j;
    out << ",delta\n";
    char buf[64];
    for (int i = 0; i <= resolution; ++i) {
        const double beta = static_cast<double>(i) / resolution;
        const auto sol = solve_secular(s, schedule_alpha(s, schedule, beta), beta);
        std::snprintf(buf, sizeof buf, "%.12g", beta);
        out << buf;
        for (double l : sol.lambdas) {
            std::snprintf(buf, sizeof buf, ",%.12g", l);
            out << buf;
        }
        std::snprintf(buf, sizeof buf, ",%.12g\n", sol.gap());
        out << buf;
    }
}

} // namespace qcount
