#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <sstream>

#include "qcount/problem.hpp"
#include "qcount/qaoa.hpp"

using namespace qcount;

namespace {

// compare statevectors up to a global phase
double phase_aligned_distance(const StateVector& a, const StateVector& b) {
    std::complex<double> overlap = 0.0;
    for (std::size_t i = 0; i < a.amplitudes.size(); ++i)
        overlap += std::conj(a.amplitudes[i]) * b.amplitudes[i];
    const std::complex<double> phase =
        std::abs(overlap) > 0 ? overlap / std::abs(overlap) : 1.0;
    double worst = 0.0;
    for (std::size_t i = 0; i < a.amplitudes.size(); ++i)
        worst = std::max(worst, std::abs(a.amplitudes[i] * phase - b.amplitudes[i]));
    return worst;
}

} // namespace

TEST_CASE("greedy step never loses occupation") {
    const auto prob = make_edge_cover_problem(make_paw(), 0.62);
    const FullEngine eng(prob.hamiltonian, prob.weights);
    StateVector psi = eng.initial();
    double occ = eng.occupation(psi);
    for (int step = 0; step < 4; ++step) {
        const auto g = greedy_optimize_step(eng, psi);
        CHECK(g.occupation >= occ - 1e-12); // (0,0) is in the search set
        eng.phase_z(psi, g.beta);
        eng.mixer(psi, g.alpha);
        occ = eng.occupation(psi);
        CHECK(occ == doctest::Approx(g.occupation).epsilon(1e-12));
    }
}

TEST_CASE("ties resolve to the smallest angles") {
    // q = 0 concentrates all weight on one state: the occupation is 1 for
    // every angle pair, so the tie-break must pick (alpha, beta) = (0, 0)
    const auto prob = make_edge_cover_problem(make_linear(3), 0.0);
    const SubspaceEngine eng(prob.subspace());
    const auto step = greedy_optimize_step(eng, eng.initial());
    CHECK(step.alpha == 0.0);
    CHECK(step.beta == 0.0);
    CHECK(step.occupation == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("odd-spectrum instances choose the exact reflection pair") {
    const double q = std::pow(std::sin(0.4 * M_PI), 2);
    for (const auto& g : {make_triangle(), make_linear(2)}) {
        const auto prob = make_edge_cover_problem(g, q);
        const FullEngine eng(prob.hamiltonian, prob.weights);
        const auto rec = run_qaoa_greedy(eng, 0.9);
        REQUIRE(rec.steps >= 1);
        StateVector psi = eng.initial();
        for (const auto& [alpha, beta] : rec.angles) {
            CHECK(alpha == M_PI);
            CHECK(beta == M_PI);
            // the layer at (pi, pi) is the oracle followed by the diffusion
            StateVector layer = psi;
            eng.phase_z(layer, beta);
            eng.mixer(layer, alpha);
            StateVector grover = psi;
            eng.grover_oracle(grover);
            eng.mixer(grover, M_PI);
            CHECK(phase_aligned_distance(layer, grover) <= 1e-12);
            psi = layer;
        }
    }
}

TEST_CASE("greedy matches between the engines") {
    const auto prob = make_edge_cover_problem(make_paw(), 0.7);
    const FullEngine full(prob.hamiltonian, prob.weights);
    const SubspaceEngine sub(prob.subspace());
    const auto recf = run_qaoa_greedy(full, 0.8);
    const auto recs = run_qaoa_greedy(sub, 0.8);
    REQUIRE(recf.steps == recs.steps);
    for (long long j = 0; j < recf.steps; ++j) {
        CHECK(std::abs(recf.angles[j].first - recs.angles[j].first) <= 1e-6);
        CHECK(std::abs(recf.angles[j].second - recs.angles[j].second) <= 1e-6);
        CHECK(recf.occupations[j] == doctest::Approx(recs.occupations[j]).epsilon(1e-9));
    }
}

TEST_CASE("greedy depth cap raises a diagnostic") {
    const auto prob = make_edge_cover_problem(make_linear(8), std::pow(std::sin(0.3 * M_PI), 2));
    const SubspaceEngine eng(prob.subspace());
    QaoaOptions opt;
    opt.depth_cap = 2;
    CHECK_THROWS_AS(run_qaoa_greedy(eng, 0.999, opt), ResourceCapError);
}

TEST_CASE("constant angles") {
    // depth 0 leaves the initial occupation P
    const auto prob = make_edge_cover_problem(make_paw(), 0.55);
    const SubspaceEngine eng(prob.subspace());
    const auto res0 = optimize_constant_angles(eng, 0);
    CHECK(res0.occupation == doctest::Approx(eng.p()).epsilon(1e-12));

    // triangle at the grover-optimal depth: (pi, pi) reaches the rotation value
    const double q = std::pow(std::sin(0.3 * M_PI), 2);
    const auto tri = make_edge_cover_problem(make_triangle(), q);
    const SubspaceEngine teng(tri.subspace());
    const long long tg = grover_steps_to_target(teng.p(), 0.9);
    const auto res = optimize_constant_angles(teng, tg);
    const double theta = std::asin(std::sqrt(teng.p()));
    const double grover_occ = std::pow(std::sin((2.0 * tg + 1) * theta), 2);
    CHECK(res.occupation >= grover_occ - 1e-9);
    const auto rec = run_qaoa_constant(teng, M_PI, M_PI, tg);
    CHECK(rec.final_occupation == doctest::Approx(grover_occ).epsilon(1e-10));
}

TEST_CASE("constant angles track the greedy trajectory") {
    const auto prob = make_edge_cover_problem(make_linear(14), std::pow(std::sin(0.3 * M_PI), 2));
    const SubspaceEngine eng(prob.subspace());
    const auto greedy = run_qaoa_greedy(eng, 0.5);
    const auto constant = optimize_constant_angles(eng, greedy.steps);
    CHECK(constant.occupation >= 0.75 * greedy.final_occupation);

    // the shared-angle trajectory shadows the greedy one and still reaches the
    // target with at most twice the depth
    const auto traj = run_qaoa_constant(eng, constant.alpha, constant.beta, 2 * greedy.steps);
    double worst = 0.0, best = 0.0;
    for (long long j = 0; j < greedy.steps; ++j)
        worst = std::max(worst, std::abs(traj.occupations[j] - greedy.occupations[j]));
    for (double o : traj.occupations) best = std::max(best, o);
    CHECK(worst <= 0.15);
    CHECK(best >= 0.5);

    // greedy angles settle after the first step
    if (greedy.steps >= 4) {
        double ma = 0.0, mb = 0.0;
        const auto n = static_cast<double>(greedy.steps - 1);
        for (long long j = 1; j < greedy.steps; ++j) {
            ma += greedy.angles[j].first / n;
            mb += greedy.angles[j].second / n;
        }
        double va = 0.0, vb = 0.0;
        for (long long j = 1; j < greedy.steps; ++j) {
            va += std::pow(greedy.angles[j].first - ma, 2) / n;
            vb += std::pow(greedy.angles[j].second - mb, 2) / n;
        }
        CHECK(std::sqrt(va) < 0.1 * M_PI);
        CHECK(std::sqrt(vb) < 0.1 * M_PI);
    }
}

TEST_CASE("angle csv uses units of pi") {
    const auto prob = make_edge_cover_problem(make_triangle(), std::pow(std::sin(0.4 * M_PI), 2));
    const SubspaceEngine eng(prob.subspace());
    const auto rec = run_qaoa_greedy(eng, 0.5);
    std::stringstream ss;
    write_angle_csv(rec, ss);
    CHECK(ss.str().find("step,alpha_over_pi,beta_over_pi,occupation") == 0);
    CHECK(ss.str().find("1,1,1,") != std::string::npos); // (pi, pi) in pi units
}
