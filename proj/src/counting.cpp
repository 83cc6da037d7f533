#include "qcount/counting.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <set>
#include <stdexcept>

#include <json.hpp>

#include "qcount/errors.hpp"

namespace qcount {

namespace {

// Neumaier compensated accumulator with a running magnitude for the
// cancellation guard
struct CompensatedSum {
    double sum = 0.0, comp = 0.0, max_mag = 0.0;

    void add(double v) {
        max_mag = std::max(max_mag, std::abs(v));
        const double t = sum + v;
        if (std::abs(sum) >= std::abs(v))
            comp += (sum - t) + v;
        else
            comp += (v - t) + sum;
        sum = t;
    }
    double value() const { return sum + comp; }
};

void require_moments(const SpectrumSummary& s, int m, const char* who) {
    if (s.max_moment() < m)
        throw std::invalid_argument(std::string(who) +
                                    ": spectrum lacks moments up to order M");
    if (s.p() <= 0.0) throw std::invalid_argument(std::string(who) + ": P must be positive");
}

// P_mu / P^mu for mu = 0..m at the ground level
std::vector<double> ground_ratios(const SpectrumSummary& s, int m) {
    std::vector<double> r(m + 1);
    const double p = s.p();
    double pk = 1.0;
    for (int mu = 0; mu <= m; ++mu) {
        r[mu] = s.moment(0, mu) / pk;
        pk *= p;
    }
    return r;
}

bool ground_is_uniform(const SpectrumSummary& s) {
    // equality N1^2 = N0 N2 holds only for equal weights
    const double n0 = s.moment(0, 0), n1 = s.moment(0, 1), n2 = s.moment(0, 2);
    return std::abs(n1 * n1 - n0 * n2) <= 1e-12 * std::max(1.0, n0 * n2);
}

} // namespace

CaptureBatch collect_batch(const std::function<std::uint64_t()>& runner,
                           const std::function<bool(std::uint64_t)>& is_ground,
                           const std::function<double(std::uint64_t)>& weight_of,
                           int m, double expected_accept, long long* total_iterations) {
    if (m < 1) throw std::invalid_argument("collect_batch: m >= 1");
    if (expected_accept <= 0.0)
        throw std::invalid_argument("collect_batch: expected acceptance must be positive");
    const long long cap =
        static_cast<long long>(std::ceil(20.0 * m / expected_accept));
    CaptureBatch batch;
    batch.m = m;
    long long iters = 0;
    while (static_cast<int>(batch.measurements.size()) < m) {
        if (++iters > cap)
            throw ResourceCapError(
                "collect_batch: acceptance rate far below the expected 1-eta^2");
        const std::uint64_t phi = runner();
        if (!is_ground(phi)) continue;
        batch.measurements.push_back(phi);
        batch.r_m += weight_of(phi);
    }
    if (total_iterations) *total_iterations += iters;
    batch.q_m = static_cast<int>(
        std::set<std::uint64_t>(batch.measurements.begin(), batch.measurements.end()).size());
    return batch;
}

double expected_qm_uniform(double p0, int m) {
    return p0 * (1.0 - std::pow(1.0 - 1.0 / p0, m));
}

double expected_qm(const SpectrumSummary& s, int m) {
    require_moments(s, m, "expected_qm");
    const auto r = ground_ratios(s, m);
    CompensatedSum acc;
    double binom = 1.0; // C(m, mu)
    for (int mu = 1; mu <= m; ++mu) {
        binom = binom * (m - mu + 1) / mu;
        acc.add((mu & 1 ? 1.0 : -1.0) * binom * r[mu]);
    }
    const double v = acc.value();
    if (acc.max_mag > 1e12 * std::max(std::abs(v), 1e-300)) {
        if (ground_is_uniform(s)) return expected_qm_uniform(s.moment(0, 0), m);
        throw CancellationError("expected_qm: alternating series lost too much precision");
    }
    return v;
}

double expected_qm_truncated(double p, double p2, int m) {
    return m - 0.5 * m * (m - 1.0) * p2 / (p * p);
}

double expected_rm(double p, double p2, int m) { return m * p2 / p; }

double expected_rm(const SpectrumSummary& s, int m) {
    if (s.p() <= 0.0) throw std::invalid_argument("expected_rm: P must be positive");
    return expected_rm(s.p(), s.p2(), m);
}

double variance_qm_uniform(double p0, int m) {
    // indicator pairs with equal draw probabilities 1/P0
    const double q_mean = expected_qm_uniform(p0, m);
    const double pair_mean = 1.0 - 2.0 * std::pow(1.0 - 1.0 / p0, m) +
                             std::pow(1.0 - 2.0 / p0, m);
    const double q2_mean = q_mean + p0 * (p0 - 1.0) * pair_mean;
    return q2_mean - q_mean * q_mean;
}

double variance_qm(const SpectrumSummary& s, int m) {
    require_moments(s, m, "variance_qm");
    if (m == 1) return 0.0; // a single draw is always one distinct state
    const auto r = ground_ratios(s, m);
    const double p0 = r[0];

    // <Q> and A = sum_g (1-p_g)^M = P0 - <Q>
    const double q_mean = expected_qm(s, m);
    const double a = p0 - q_mean;

    // T = sum_{g != g'} (1 - p_g - p_g')^M expanded over moment-ratio products
    CompensatedSum t_acc;
    double binom_m = 1.0; // C(m, mu)
    for (int mu = 0; mu <= m; ++mu) {
        if (mu > 0) binom_m = binom_m * (m - mu + 1) / mu;
        double inner = 0.0;
        double binom_mu = 1.0; // C(mu, k)
        for (int k = 0; k <= mu; ++k) {
            if (k > 0) binom_mu = binom_mu * (mu - k + 1) / k;
            inner += binom_mu * r[k] * r[mu - k];
        }
        inner -= std::pow(2.0, mu) * r[mu];
        t_acc.add((mu & 1 ? -1.0 : 1.0) * binom_m * inner);
    }
    const double t = t_acc.value();
    const double q2_mean = q_mean + p0 * (p0 - 1.0) - 2.0 * (p0 - 1.0) * a + t;
    const double var = q2_mean - q_mean * q_mean;
    if (t_acc.max_mag > 1e12 * std::max(std::abs(var), 1e-300)) {
        if (ground_is_uniform(s)) return variance_qm_uniform(p0, m);
        throw CancellationError("variance_qm: alternating series lost too much precision");
    }
    return var;
}

double variance_qm_truncated(double p, double p2, int m) {
    return 0.5 * m * (m - 1.0) * p2 / (p * p);
}

double confidence(double p, double p2, int m, long long s, double epsilon) {
    if (epsilon <= 0.0 || epsilon >= 1.0)
        throw std::invalid_argument("confidence: epsilon in (0,1)");
    if (p <= 0.0 || p2 <= 0.0) throw std::invalid_argument("confidence: P, P2 > 0");
    const double arg =
        std::sqrt(static_cast<double>(m) * (m - 1.0) * static_cast<double>(s) * p2 /
                  (2.0 * p * p));
    return 0.5 * std::erf(epsilon / (1.0 - epsilon) * arg) +
           0.5 * std::erf(epsilon / (1.0 + epsilon) * arg);
}

CountEstimate estimate_p(const std::vector<CaptureBatch>& batches, double epsilon) {
    if (batches.empty()) throw std::invalid_argument("estimate_p: no batches");
    const int m = batches.front().m;
    const long long s = static_cast<long long>(batches.size());
    double q_sum = 0.0, r_sum = 0.0;
    for (const auto& b : batches) {
        if (b.m != m) throw std::invalid_argument("estimate_p: mixed batch sizes");
        q_sum += b.q_m;
        r_sum += b.r_m;
    }
    CountEstimate est;
    est.m = m;
    est.s = s;
    est.epsilon = epsilon;
    est.q_bar = q_sum / s;
    est.r_bar = r_sum / s;
    if (est.q_bar >= m)
        throw NoCollisionsError("estimate_p: every batch was collision-free; increase M");
    est.p_est = (m - 1.0) * est.r_bar / (2.0 * (m - est.q_bar));
    est.p2_est = est.p_est * est.r_bar / m;
    const double rho = est.p2_est / (est.p_est * est.p_est);
    est.truncation_suspect = rho > 0.5 || est.q_bar <= 1.0 + 1e-12;
    est.confidence = confidence(est.p_est, est.p2_est, m, s, epsilon);
    return est;
}

CountEstimate adaptive_count(const std::function<std::uint64_t()>& runner,
                             const std::function<bool(std::uint64_t)>& is_ground,
                             const std::function<double(std::uint64_t)>& weight_of,
                             double epsilon, double delta_target,
                             const AdaptiveCountOptions& opt) {
    int m = opt.initial_m;
    long long s = opt.initial_s;
    long long total_iters = 0;
    long long kept = 0;
    long long batch_count = 0;

    while (true) {
        std::vector<CaptureBatch> batches;
        batches.reserve(s);
        bool any_collision = false;
        for (long long i = 0; i < s; ++i) {
            batches.push_back(
                collect_batch(runner, is_ground, weight_of, m, opt.expected_accept,
                              &total_iters));
            kept += m;
            ++batch_count;
            if (batches.back().q_m < m) any_collision = true;
            if (total_iters > opt.measurement_budget)
                throw ResourceCapError("adaptive_count: measurement budget exceeded");
        }
        if (!any_collision) {
            m *= 2;
            continue;
        }
        CountEstimate est = estimate_p(batches, epsilon);
        est.total_iterations = total_iters;
        est.kept_measurements = kept;
        est.batches_collected = batch_count;
        est.steps_per_iteration = opt.steps_per_iteration;
        if (est.confidence >= 1.0 - delta_target) return est;
        s *= 2;
    }
}

void write_count_json(const CountEstimate& est, std::ostream& out, double gate_cost_total) {
    nlohmann::json j;
    j["p_est"] = est.p_est;
    j["p2_est"] = est.p2_est;
    j["m"] = est.m;
    j["s"] = est.s;
    j["q_bar"] = est.q_bar;
    j["r_bar"] = est.r_bar;
    j["epsilon"] = est.epsilon;
    j["confidence"] = est.confidence;
    j["truncation_suspect"] = est.truncation_suspect;
    j["resources"] = {{"total_iterations", est.total_iterations},
                      {"kept_measurements", est.kept_measurements},
                      {"batches", est.batches_collected},
                      {"steps_per_iteration", est.steps_per_iteration},
                      {"evolution_steps", est.total_iterations * est.steps_per_iteration},
                      {"gate_cost_total", gate_cost_total}};
    out << j.dump(2) << "\n";
}

} // namespace qcount
