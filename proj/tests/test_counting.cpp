#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <set>
#include <sstream>
#include <vector>

#include "qcount/counting.hpp"
#include "qcount/errors.hpp"
#include "qcount/evolve.hpp"
#include "qcount/problem.hpp"

using namespace qcount;

namespace {

struct DrawOracle {
    double q_mean = 0.0;
    double r_mean = 0.0;
    double q_var = 0.0;
};

// exhaustive expectation over all |G|^M weighted draw sequences
DrawOracle enumerate_draws(const std::vector<double>& weights, int m) {
    double p = 0.0;
    for (double w : weights) p += w;
    const int g = static_cast<int>(weights.size());
    std::vector<int> idx(m, 0);
    DrawOracle out;
    double q2_mean = 0.0;
    while (true) {
        double prob = 1.0, r = 0.0;
        std::set<int> distinct;
        for (int i = 0; i < m; ++i) {
            prob *= weights[idx[i]] / p;
            r += weights[idx[i]];
            distinct.insert(idx[i]);
        }
        const double q = static_cast<double>(distinct.size());
        out.q_mean += prob * q;
        q2_mean += prob * q * q;
        out.r_mean += prob * r;
        int pos = m - 1;
        while (pos >= 0 && ++idx[pos] == g) idx[pos--] = 0;
        if (pos < 0) break;
    }
    out.q_var = q2_mean - out.q_mean * out.q_mean;
    return out;
}

std::vector<double> ground_weights(const EdgeCoverProblem& prob) {
    std::vector<double> out;
    const std::uint64_t dim = 1ull << prob.hamiltonian.qubit_count;
    for (std::uint64_t phi = 0; phi < dim; ++phi)
        if (prob.hamiltonian.energy(phi) == 0.0) out.push_back(prob.weights.weight(phi));
    return out;
}

} // namespace

TEST_CASE("capture moments match exhaustive sequence enumeration") {
    for (double q : {0.3, 0.5, 0.62}) {
        const auto prob = make_edge_cover_problem(make_paw(), q, 6);
        const auto wg = ground_weights(prob);
        REQUIRE(wg.size() == 5);
        for (int m = 1; m <= 6; ++m) {
            const auto oracle = enumerate_draws(wg, m);
            CHECK(expected_qm(prob.spectrum, m) ==
                  doctest::Approx(oracle.q_mean).epsilon(1e-10));
            CHECK(expected_rm(prob.spectrum, m) ==
                  doctest::Approx(oracle.r_mean).epsilon(1e-10));
            CHECK(variance_qm(prob.spectrum, m) ==
                  doctest::Approx(oracle.q_var).epsilon(1e-10));
        }
    }
    // a 3-cover instance as well (2-edge ladder column pair)
    const auto tri = make_edge_cover_problem(make_triangle(), 0.44, 6);
    const auto wt = ground_weights(tri);
    REQUIRE(wt.size() == 4);
    for (int m = 1; m <= 6; ++m) {
        const auto oracle = enumerate_draws(wt, m);
        CHECK(expected_qm(tri.spectrum, m) == doctest::Approx(oracle.q_mean).epsilon(1e-10));
        CHECK(variance_qm(tri.spectrum, m) == doctest::Approx(oracle.q_var).epsilon(1e-10));
    }
}

TEST_CASE("M = 1 specializations") {
    const auto prob = make_edge_cover_problem(make_paw(), 0.3, 2);
    CHECK(expected_qm(prob.spectrum, 1) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(expected_rm(prob.spectrum, 1) ==
          doctest::Approx(prob.spectrum.p2() / prob.p()).epsilon(1e-14));
    CHECK(variance_qm(prob.spectrum, 1) == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("uniform weights reduce to the geometric series") {
    const auto prob = make_edge_cover_problem(make_paw(), 0.5, 16);
    for (int m : {1, 2, 4, 8, 16}) {
        const double series = expected_qm(prob.spectrum, m);
        const double closed = expected_qm_uniform(5.0, m);
        CHECK(series == doctest::Approx(closed).epsilon(1e-12));
    }
}

TEST_CASE("moment preconditions") {
    const auto prob = make_edge_cover_problem(make_paw(), 0.3, 2);
    CHECK_THROWS_AS(expected_qm(prob.spectrum, 5), std::invalid_argument);
    CHECK_THROWS_AS(variance_qm(prob.spectrum, 5), std::invalid_argument);
}

TEST_CASE("truncated forms are the leading order") {
    const auto prob = make_edge_cover_problem(make_linear(10), 0.35, 4);
    const double p = prob.p(), p2 = prob.spectrum.p2();
    const int m = 3;
    const double full = expected_qm(prob.spectrum, m);
    const double trunc = expected_qm_truncated(p, p2, m);
    CHECK(std::abs(full - trunc) <= 10.0 * p2 / (p * p) * p2 / (p * p) * m * m * m);
    CHECK(variance_qm_truncated(p, p2, m) ==
          doctest::Approx(0.5 * m * (m - 1) * p2 / (p * p)).epsilon(1e-14));
}

TEST_CASE("confidence is monotone in S, M, epsilon") {
    const double p = 0.3125, p2 = 0.01953125;
    CHECK(confidence(p, p2, 4, 100, 0.05) < confidence(p, p2, 4, 200, 0.05));
    CHECK(confidence(p, p2, 4, 100, 0.05) < confidence(p, p2, 8, 100, 0.05));
    CHECK(confidence(p, p2, 4, 100, 0.05) < confidence(p, p2, 4, 100, 0.1));
    // infinite-sample limit
    CHECK(confidence(p, p2, 4, 100000000000ll, 0.05) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("estimate_p recovers P exactly from exact truncated moments") {
    // paw, q = 1/2: P = 5/16, P2/P = 1/16. with M = 4 the truncated means are
    // Qbar = 2.8 and Rbar = 0.25; the estimator must invert them to P exactly
    std::vector<CaptureBatch> batches;
    for (int i = 0; i < 5; ++i) {
        CaptureBatch b;
        b.m = 4;
        b.q_m = (i == 4) ? 2 : 3; // mean 2.8
        b.r_m = 0.25;
        batches.push_back(b);
    }
    const auto est = estimate_p(batches, 0.05);
    CHECK(est.q_bar == doctest::Approx(2.8).epsilon(1e-15));
    CHECK(est.p_est == doctest::Approx(5.0 / 16).epsilon(1e-12));
    CHECK(est.p2_est == doctest::Approx(est.p_est * 0.25 / 4).epsilon(1e-12));
    CHECK_FALSE(est.truncation_suspect);
}

TEST_CASE("estimate_p degenerate and error paths") {
    // single ground state: every batch has Q = 1 and the regime flag trips
    std::vector<CaptureBatch> degen;
    const int m = 4;
    const double p = 0.2;
    for (int i = 0; i < 3; ++i) {
        CaptureBatch b;
        b.m = m;
        b.q_m = 1;
        b.r_m = m * p;
        degen.push_back(b);
    }
    const auto est = estimate_p(degen, 0.05);
    CHECK(est.truncation_suspect);
    CHECK(est.p_est == doctest::Approx(m * p / 2.0).epsilon(1e-12));

    // all collision-free: signal to increase M
    std::vector<CaptureBatch> free;
    CaptureBatch b;
    b.m = 3;
    b.q_m = 3;
    b.r_m = 0.1;
    free.push_back(b);
    CHECK_THROWS_AS(estimate_p(free, 0.05), NoCollisionsError);
}

TEST_CASE("collect_batch accepts at the ground rate and aborts when starved") {
    const auto prob = make_edge_cover_problem(make_paw(), 0.5);
    const FullEngine eng(prob.hamiltonian, prob.weights);
    const MeasurementSampler sampler(eng.initial());
    Rng rng(11);
    auto runner = [&]() { return sampler.draw(rng); };
    auto is_ground = [&](std::uint64_t phi) { return prob.hamiltonian.energy(phi) == 0.0; };
    auto weight_of = [&](std::uint64_t phi) { return prob.weights.weight(phi); };

    long long iters = 0;
    const int batches = 300, m = 4;
    for (int i = 0; i < batches; ++i) {
        const auto b = collect_batch(runner, is_ground, weight_of, m, prob.p(), &iters);
        CHECK(b.q_m >= 1);
        CHECK(b.q_m <= m);
        CHECK(b.r_m > 0.0);
    }
    // acceptance rate ~ P within 3 sigma of the binomial count
    const double expect = batches * m / prob.p();
    const double sigma = std::sqrt(batches * m * (1 - prob.p())) / prob.p();
    CHECK(std::abs(iters - expect) <= 3.5 * sigma);

    auto never = [](std::uint64_t) { return false; };
    long long dummy = 0;
    CHECK_THROWS_AS(collect_batch(runner, never, weight_of, 4, 0.9, &dummy),
                    ResourceCapError);
}

TEST_CASE("adaptive driver: paw with the exact target sampler") {
    const auto prob = make_edge_cover_problem(make_paw(), 0.5);
    StateVector target;
    target.qubit_count = 4;
    target.amplitudes.assign(16, 0.0);
    const FullEngine eng(prob.hamiltonian, prob.weights);
    for (std::uint64_t g : eng.ground_states())
        target.amplitudes[g] = std::sqrt(prob.weights.weight(g) / prob.p());
    const MeasurementSampler sampler(target);
    Rng rng(20250809);
    auto runner = [&]() { return sampler.draw(rng); };
    auto is_ground = [&](std::uint64_t phi) { return prob.hamiltonian.energy(phi) == 0.0; };
    auto weight_of = [&](std::uint64_t phi) { return prob.weights.weight(phi); };

    AdaptiveCountOptions opt;
    opt.initial_m = 2;   // exact collision regime for a 5-state ground set
    opt.initial_s = 8192;
    const auto est = adaptive_count(runner, is_ground, weight_of, 0.05, 0.05, opt);
    CHECK(est.confidence >= 0.95);
    CHECK(std::abs(1.0 - est.p_est / prob.p()) < 0.05);
    CHECK(est.total_iterations == est.kept_measurements); // exact sampler never discards
    CHECK(est.m == 2);

    // a tight budget trips the cap
    AdaptiveCountOptions tight = opt;
    tight.measurement_budget = 100;
    Rng rng2(5);
    auto runner2 = [&]() { return sampler.draw(rng2); };
    CHECK_THROWS_AS(adaptive_count(runner2, is_ground, weight_of, 0.05, 0.05, tight),
                    ResourceCapError);
}

TEST_CASE("adaptive driver doubles M out of the collision desert") {
    // 55 covers at |E| = 10, q = 1/2: batches of 2 rarely collide
    const auto prob = make_edge_cover_problem(make_linear(10), 0.5);
    const FullEngine eng(prob.hamiltonian, prob.weights);
    StateVector target;
    target.qubit_count = 10;
    target.amplitudes.assign(1 << 10, 0.0);
    for (std::uint64_t g : eng.ground_states())
        target.amplitudes[g] = std::sqrt(prob.weights.weight(g) / prob.p());
    const MeasurementSampler sampler(target);
    Rng rng(99);
    auto runner = [&]() { return sampler.draw(rng); };
    auto is_ground = [&](std::uint64_t phi) { return prob.hamiltonian.energy(phi) == 0.0; };
    auto weight_of = [&](std::uint64_t phi) { return prob.weights.weight(phi); };

    AdaptiveCountOptions opt;
    opt.initial_m = 2;
    opt.initial_s = 4;
    opt.measurement_budget = 50000000;
    const auto est = adaptive_count(runner, is_ground, weight_of, 0.1, 0.1, opt);
    CHECK(est.m > 2); // must have grown
    CHECK(est.p_est > 0.0);
    CHECK(std::abs(1.0 - est.p_est / prob.p()) < 0.5);

    // an initial M above the distinct-state count cannot deadlock
    AdaptiveCountOptions big;
    big.initial_m = 64; // only 5 distinct states exist on the paw
    big.initial_s = 4;
    const auto paw = make_edge_cover_problem(make_paw(), 0.5);
    const FullEngine peng(paw.hamiltonian, paw.weights);
    StateVector pt;
    pt.qubit_count = 4;
    pt.amplitudes.assign(16, 0.0);
    for (std::uint64_t g : peng.ground_states())
        pt.amplitudes[g] = std::sqrt(paw.weights.weight(g) / paw.p());
    const MeasurementSampler ps(pt);
    Rng prng(7);
    auto prunner = [&]() { return ps.draw(prng); };
    auto pground = [&](std::uint64_t phi) { return paw.hamiltonian.energy(phi) == 0.0; };
    auto pweight = [&](std::uint64_t phi) { return paw.weights.weight(phi); };
    const auto pest = adaptive_count(prunner, pground, pweight, 0.2, 0.2, big);
    CHECK(pest.m == 64);
}

TEST_CASE("count json") {
    CountEstimate est;
    est.p_est = 0.3;
    est.m = 2;
    est.s = 16;
    est.epsilon = 0.05;
    std::stringstream ss;
    write_count_json(est, ss, 123.0);
    CHECK(ss.str().find("\"p_est\"") != std::string::npos);
    CHECK(ss.str().find("\"gate_cost_total\": 123.0") != std::string::npos);
}
