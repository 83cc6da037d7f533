// command-line driver: reproducible experiments over edge-cover counting
// instances. exit codes: 0 success, 2 resource cap exceeded, 3 invalid
// configuration or arguments.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qcount/config.hpp"
#include "qcount/counting.hpp"
#include "qcount/errors.hpp"
#include "qcount/evolve.hpp"
#include "qcount/gatecost.hpp"
#include "qcount/graph.hpp"
#include "qcount/lattice_moments.hpp"
#include "qcount/omcs.hpp"
#include "qcount/problem.hpp"
#include "qcount/qaoa.hpp"

using namespace qcount;

namespace {

struct CommonOpts {
    std::string config_path;
    std::vector<std::string> overrides;
    std::string out_path;

    std::string kind = "paw";
    int edges = 4;
    int columns = 2;
    double degree = 2.5;
    std::uint64_t graph_seed = 1;
    std::string graph_file;
    double q = 0.5;
};

void add_common(CLI::App* cmd, CommonOpts& o, bool with_graph = true) {
    cmd->add_option("--config", o.config_path, "key = value configuration file");
    cmd->add_option("--set", o.overrides, "override a config key, e.g. --set dt=0.05");
    cmd->add_option("-o,--out", o.out_path, "output path (default stdout)");
    if (with_graph) {
        cmd->add_option("--kind", o.kind,
                        "graph family: linear|grid2xn|paw|triangle|random");
        cmd->add_option("--edges", o.edges, "edge count (linear, random)");
        cmd->add_option("--columns", o.columns, "columns (grid2xn)");
        cmd->add_option("--degree", o.degree, "mean vertex degree (random)");
        cmd->add_option("--graph-seed", o.graph_seed, "graph sampling seed (random)");
        cmd->add_option("--graph", o.graph_file, "read the graph from a file instead");
        cmd->add_option("--q", o.q, "per-edge absence probability");
    }
}

Config load_config(const CommonOpts& o) {
    Config cfg;
    if (!o.config_path.empty()) cfg.load_file(o.config_path);
    for (const auto& kv : o.overrides) {
        const auto eq = kv.find('=');
        if (eq == std::string::npos) throw ConfigError("--set expects key=value: " + kv);
        cfg.set(kv.substr(0, eq), kv.substr(eq + 1));
    }
    return cfg;
}

Graph build_graph(const CommonOpts& o) {
    if (!o.graph_file.empty()) return load_graph_file(o.graph_file);
    if (o.kind == "linear") return make_linear(o.edges);
    if (o.kind == "grid2xn") return make_grid2xn(o.columns);
    if (o.kind == "paw") return make_paw();
    if (o.kind == "triangle") return make_triangle();
    if (o.kind == "random") return make_random_mean_degree(o.degree, o.edges, o.graph_seed);
    throw ConfigError("unknown graph kind: " + o.kind);
}

// run `fn(stream)` against --out or stdout
template <class Fn>
void with_output(const CommonOpts& o, Fn&& fn) {
    if (o.out_path.empty()) {
        fn(std::cout);
        return;
    }
    std::ofstream out(o.out_path);
    if (!out) throw ConfigError("cannot open output file: " + o.out_path);
    fn(out);
}

QaoaOptions qaoa_options(const Config& cfg) {
    QaoaOptions opt;
    opt.grid = cfg.qaoa_grid;
    opt.sweeps = cfg.qaoa_sweeps;
    opt.depth_cap = cfg.qaoa_depth_cap;
    return opt;
}

struct RunOutput {
    RunRecord record;
    long long steps_per_iteration = 0;
    double final_occupation = 0.0;
};

template <class Engine>
RunOutput run_algorithm_on(const Engine& eng, const std::string& algorithm,
                           const Config& cfg, long long depth, double alpha, double beta,
                           bool per_ground) {
    RunOutput out;
    const double target = 1.0 - cfg.eta2;
    if (algorithm == "grover") {
        const long long steps = depth > 0 ? depth : grover_steps_to_target(eng.p(), target);
        out.record = run_grover(eng, steps, per_ground);
    } else if (algorithm == "aqo") {
        AqoTimeOptions topt;
        topt.doubling_cap = cfg.aqo_doubling_cap;
        topt.refine = cfg.aqo_refine;
        topt.sampled = cfg.aqo_sampled;
        topt.shots = cfg.aqo_shots;
        topt.seed = cfg.seed;
        const long long steps = depth > 0 ? depth : find_aqo_steps(eng, cfg.eta2, cfg.dt, topt);
        out.record = run_aqo(eng, steps * cfg.dt, cfg.dt, per_ground);
    } else if (algorithm == "qaoa-greedy") {
        out.record = run_qaoa_greedy(eng, target, qaoa_options(cfg), per_ground);
    } else if (algorithm == "qaoa-constant") {
        if (depth <= 0) throw ConfigError("qaoa-constant needs --depth");
        if (alpha < 0 || beta < 0) {
            const auto best = optimize_constant_angles(eng, depth, qaoa_options(cfg));
            alpha = best.alpha;
            beta = best.beta;
        }
        out.record = run_qaoa_constant(eng, alpha, beta, depth, per_ground);
    } else {
        throw ConfigError("unknown algorithm: " + algorithm);
    }
    out.steps_per_iteration = out.record.steps;
    out.final_occupation = out.record.final_occupation;
    return out;
}

SpectrumSummary family_spectrum(const std::string& family, int edges, double q,
                                int max_moment) {
    if (family == "linear" || family == "path")
        return dp_spectrum(LatticeKind::path, edges, q, max_moment);
    if (family == "grid2xn")
        return dp_spectrum(LatticeKind::grid2xn, edges, q, max_moment);
    throw ConfigError("family must be linear or grid2xn, got " + family);
}

int cmd_gen_graph(const CommonOpts& o) {
    const Graph g = build_graph(o);
    with_output(o, [&](std::ostream& out) { write_graph(g, out); });
    return 0;
}

int cmd_brute_force(const CommonOpts& o) {
    const Config cfg = load_config(o);
    const Graph g = build_graph(o);
    const auto prob = make_edge_cover_problem(g, o.q, cfg.max_moment, cfg.exhaustive_limit);
    with_output(o, [&](std::ostream& out) {
        char buf[256];
        std::snprintf(buf, sizeof buf,
                      "# exact spectrum: edges=%d q=%.12g P=%.17g P2=%.17g levels=%d\n",
                      g.edge_count(), o.q, prob.p(), prob.spectrum.p2(),
                      prob.spectrum.level_count());
        out << buf;
        write_spectrum_csv(prob.spectrum, out);
    });
    return 0;
}

int cmd_spectrum_dp(const CommonOpts& o, const std::string& family, int edges,
                    int max_moment) {
    const Config cfg = load_config(o);
    const auto s = family_spectrum(family, edges, o.q, std::max(max_moment, cfg.max_moment));
    with_output(o, [&](std::ostream& out) { write_spectrum_csv(s, out); });
    return 0;
}

int cmd_gap_scan(const CommonOpts& o, const std::string& schedule_name, int resolution) {
    const Config cfg = load_config(o);
    const Graph g = build_graph(o);
    const auto prob = make_edge_cover_problem(g, o.q, cfg.max_moment, cfg.exhaustive_limit);
    const auto sub = prob.subspace();
    const Schedule schedule =
        schedule_name == "alt" ? Schedule::alt_scaled : Schedule::linear;
    const int res = resolution > 0 ? resolution : cfg.gap_resolution;
    const auto min_gap = min_gap_over_schedule(sub, schedule, res);
    with_output(o, [&](std::ostream& out) {
        char buf[256];
        std::snprintf(buf, sizeof buf,
                      "# interpolated-spectrum scan: schedule=%s resolution=%d "
                      "min_gap=%.12g beta_star=%.12g bound=%.12g\n",
                      schedule_name.c_str(), res, min_gap.gap, min_gap.beta_star,
                      gap_lower_bound(sub, 1.0 - min_gap.beta_star, min_gap.beta_star));
        out << buf;
        write_gap_scan_csv(sub, schedule, res, out);
    });
    return 0;
}

int cmd_run(const CommonOpts& o, const std::string& algorithm, const std::string& engine,
            long long depth, double alpha, double beta, bool per_ground, bool angles) {
    const Config cfg = load_config(o);
    const Graph g = build_graph(o);
    const auto prob = make_edge_cover_problem(g, o.q, cfg.max_moment, cfg.exhaustive_limit);

    RunOutput res;
    const bool use_full = engine == "full" ||
                          (engine == "auto" && g.edge_count() <= cfg.exhaustive_limit);
    if (per_ground && !use_full) throw ConfigError("--per-ground needs the full engine");
    if (use_full) {
        const FullEngine eng(prob.hamiltonian, prob.weights);
        res = run_algorithm_on(eng, algorithm, cfg, depth, alpha, beta, per_ground);
    } else {
        const SubspaceEngine eng(prob.subspace());
        res = run_algorithm_on(eng, algorithm, cfg, depth, alpha, beta, false);
    }
    res.record.seed = cfg.seed;
    with_output(o, [&](std::ostream& out) {
        char buf[288];
        double search_overhead = 0.0;
        if (algorithm == "qaoa-greedy")
            search_overhead = variational_search_overhead(
                SearchCostMode::greedy, static_cast<double>(res.record.steps));
        else if (algorithm == "qaoa-constant")
            search_overhead = variational_search_overhead(SearchCostMode::constant, 0.0);
        std::snprintf(buf, sizeof buf,
                      "# algorithm=%s edges=%d q=%.12g P=%.17g steps=%lld "
                      "final_occupation=%.17g search_overhead=%.12g\n",
                      algorithm.c_str(), g.edge_count(), o.q, prob.p(), res.record.steps,
                      res.final_occupation, search_overhead);
        out << buf;
        if (per_ground)
            write_per_ground_csv(res.record, cfg.dt, out);
        else if (angles)
            write_angle_csv(res.record, out);
        else
            write_run_csv(res.record, out);
    });
    return 0;
}

int cmd_count(const CommonOpts& o, const std::string& algorithm, int trials) {
    const Config cfg = load_config(o);
    const Graph g = build_graph(o);
    const auto prob = make_edge_cover_problem(g, o.q, cfg.max_moment, cfg.exhaustive_limit);
    const FullEngine eng(prob.hamiltonian, prob.weights);

    // the runner's final state is deterministic, so evolve once and sample it
    StateVector final_state;
    long long steps_per_iteration = 0;
    if (algorithm == "exact") {
        final_state.qubit_count = prob.hamiltonian.qubit_count;
        final_state.amplitudes.assign(1ull << final_state.qubit_count, 0.0);
        for (std::uint64_t gs : eng.ground_states())
            final_state.amplitudes[gs] = std::sqrt(prob.weights.weight(gs) / prob.p());
    } else {
        const auto res = run_algorithm_on(eng, algorithm, cfg, 0, -1.0, -1.0, false);
        steps_per_iteration = res.steps_per_iteration;
        StateVector psi = eng.initial();
        for (std::size_t j = 0; j < res.record.angles.size(); ++j) {
            if (algorithm == "grover") {
                eng.grover_oracle(psi);
                eng.mixer(psi, M_PI);
            } else if (algorithm == "aqo") {
                eng.phase_z(psi, res.record.angles[j].second * cfg.dt);
                eng.mixer(psi, res.record.angles[j].first * cfg.dt);
            } else {
                eng.phase_z(psi, res.record.angles[j].second);
                eng.mixer(psi, res.record.angles[j].first);
            }
        }
        final_state = psi;
    }

    const double accept = ground_occupation(final_state, eng.ground_states());
    const MeasurementSampler sampler(final_state);
    auto is_ground = [&](std::uint64_t phi) {
        return prob.hamiltonian.energy(phi) == eng.ground_energy();
    };
    auto weight_of = [&](std::uint64_t phi) { return prob.weights.weight(phi); };

    AdaptiveCountOptions opt;
    opt.initial_m = cfg.count_m;
    opt.initial_s = cfg.count_s;
    opt.measurement_budget = cfg.measurement_budget;
    opt.expected_accept = accept;
    opt.steps_per_iteration = steps_per_iteration;

    if (trials > 1) { // coverage-study log over independent seeds
        with_output(o, [&](std::ostream& out) {
            out << "trial,p_est,m,s,confidence,truncation_suspect,total_iterations\n";
            char buf[160];
            for (int t = 0; t < trials; ++t) {
                Rng rng(derive_seed(cfg.seed, t));
                auto runner = [&]() { return sampler.draw(rng); };
                const auto est = adaptive_count(runner, is_ground, weight_of, cfg.epsilon,
                                                cfg.delta, opt);
                std::snprintf(buf, sizeof buf, "%d,%.17g,%d,%lld,%.12g,%d,%lld\n", t,
                              est.p_est, est.m, est.s, est.confidence,
                              est.truncation_suspect ? 1 : 0, est.total_iterations);
                out << buf;
            }
        });
        return 0;
    }

    Rng rng(cfg.seed);
    auto runner = [&]() { return sampler.draw(rng); };
    const auto est = adaptive_count(runner, is_ground, weight_of, cfg.epsilon, cfg.delta, opt);

    const auto costs = circuit_costs(g, GateCostModel{});
    const double gate_total =
        total_quantum_cost(costs, static_cast<double>(steps_per_iteration),
                           static_cast<double>(est.total_iterations));
    with_output(o, [&](std::ostream& out) { write_count_json(est, out, gate_total); });
    return 0;
}

int cmd_omcs(const CommonOpts& o, int trials) {
    const Config cfg = load_config(o);
    const Graph g = build_graph(o);
    const SpinHamiltonian h = build_edge_cover_hamiltonian(g);
    const WeightModel w = WeightModel::bernoulli(h.qubit_count, o.q);
    if (trials <= 1) {
        const auto res = omcs_estimate(h, w, 0.0, cfg.epsilon, cfg.delta, cfg.seed,
                                       cfg.omcs_sample_cap);
        with_output(o, [&](std::ostream& out) {
            char buf[256];
            std::snprintf(buf, sizeof buf,
                          "{\n  \"p_est\": %.17g,\n  \"samples_drawn\": %lld,\n"
                          "  \"epsilon\": %.12g,\n  \"delta\": %.12g,\n  \"seed\": %llu\n}\n",
                          res.p_est, res.samples_drawn, res.epsilon, res.delta,
                          static_cast<unsigned long long>(res.seed));
            out << buf;
        });
        return 0;
    }
    std::vector<OmcsResult> all;
    for (int t = 0; t < trials; ++t)
        all.push_back(omcs_estimate(h, w, 0.0, cfg.epsilon, cfg.delta,
                                    derive_seed(cfg.seed, t), cfg.omcs_sample_cap));
    with_output(o, [&](std::ostream& out) { write_omcs_trials_csv(all, out); });
    return 0;
}

int cmd_scaling_study(const CommonOpts& o, const std::string& family,
                      const std::vector<int>& sizes, const std::string& algorithms,
                      int instances) {
    const Config cfg = load_config(o);
    std::vector<std::string> algos;
    {
        std::stringstream ss(algorithms);
        std::string item;
        while (std::getline(ss, item, ',')) algos.push_back(item);
    }
    with_output(o, [&](std::ostream& out) {
        char buf[256];
        std::snprintf(buf, sizeof buf,
                      "# scaling study: family=%s q=%.12g eta2=%.12g dt=%.12g\n",
                      family.c_str(), o.q, cfg.eta2, cfg.dt);
        out << buf;
        out << "family,edges,q,seed,p,p2,algorithm,steps\n";
        for (int size : sizes) {
            const int reps = (family == "random") ? instances : 1;
            for (int inst = 0; inst < reps; ++inst) {
                SpectrumSummary spectrum;
                std::uint64_t seed = 0;
                if (family == "random") {
                    seed = derive_seed(cfg.seed, static_cast<std::uint64_t>(size) * 1000 + inst);
                    const Graph g = make_random_mean_degree(o.degree, size, seed);
                    const auto prob =
                        make_edge_cover_problem(g, o.q, cfg.max_moment, cfg.exhaustive_limit);
                    spectrum = prob.spectrum;
                } else {
                    spectrum = family_spectrum(family, size, o.q, cfg.max_moment);
                }
                const SubspaceEngine eng(SymmetricSubspace::from_spectrum(spectrum));
                for (const auto& algo : algos) {
                    long long steps = 0;
                    try {
                        if (algo == "aqo") {
                            AqoTimeOptions topt;
                            topt.doubling_cap = cfg.aqo_doubling_cap;
                            topt.refine = cfg.aqo_refine;
                            topt.sampled = cfg.aqo_sampled;
                            topt.shots = cfg.aqo_shots;
                            topt.seed = derive_seed(cfg.seed, static_cast<std::uint64_t>(size));
                            steps = find_aqo_steps(eng, cfg.eta2, cfg.dt, topt);
                        } else if (algo == "qaoa") {
                            steps = run_qaoa_greedy(eng, 1.0 - cfg.eta2, qaoa_options(cfg)).steps;
                        } else if (algo == "grover") {
                            steps = grover_steps_to_target(eng.p(), 1.0 - cfg.eta2);
                        } else {
                            throw ConfigError("unknown algorithm in list: " + algo);
                        }
                    } catch (const ResourceCapError&) {
                        continue; // cap-filtered point
                    }
                    std::snprintf(buf, sizeof buf, "%s,%d,%.12g,%llu,%.17g,%.17g,%s,%lld\n",
                                  family.c_str(), size, o.q,
                                  static_cast<unsigned long long>(seed), spectrum.p(),
                                  spectrum.p2(), algo.c_str(), steps);
                    out << buf;
                }
            }
        }
    });
    return 0;
}

int cmd_gate_cost(const CommonOpts& o, const std::string& family,
                  const std::vector<int>& sizes, const std::string& ancillas,
                  const std::string& search) {
    const Config cfg = load_config(o);
    GateCostModel model;
    if (ancillas == "without") model.policy = AncillaPolicy::without_ancillas;
    SearchCostMode search_mode = SearchCostMode::excluded;
    if (search == "greedy") search_mode = SearchCostMode::greedy;
    else if (search == "constant") search_mode = SearchCostMode::constant;
    else if (search != "excluded") throw ConfigError("--search: excluded|greedy|constant");
    with_output(o, [&](std::ostream& out) {
        char buf[256];
        std::snprintf(buf, sizeof buf,
                      "# abstract cost comparison: eta2=%.12g epsilon=%.12g delta=%.12g\n",
                      cfg.eta2, cfg.epsilon, cfg.delta);
        out << buf;
        out << "family,edges,q,qaoa_total,omcs_total\n";
        for (int size : sizes) {
            const auto spectrum = family_spectrum(family, size, o.q, cfg.max_moment);
            const SubspaceEngine eng(SymmetricSubspace::from_spectrum(spectrum));
            const long long t_qaoa =
                run_qaoa_greedy(eng, 1.0 - cfg.eta2, qaoa_options(cfg)).steps;
            const double p = spectrum.p(), p2 = spectrum.p2();
            const double t_count = std::sqrt(std::abs(std::log(cfg.delta))) /
                                   (cfg.epsilon * (1.0 - cfg.eta2)) * std::sqrt(p * p / p2);
            const Graph g = family == "grid2xn" ? make_grid2xn((size + 2) / 3)
                                                : make_linear(size);
            const auto costs = circuit_costs(g, model);
            const double qaoa_total =
                total_quantum_cost(costs, static_cast<double>(t_qaoa), t_count) +
                variational_search_overhead(search_mode, static_cast<double>(t_qaoa)) *
                    (costs.t_psi0 + (costs.t_x + costs.t_z) * t_qaoa);
            const double omcs_total =
                omcs_unit_cost(g) * omcs_threshold(cfg.epsilon, cfg.delta) / p;
            std::snprintf(buf, sizeof buf, "%s,%d,%.12g,%.17g,%.17g\n", family.c_str(), size,
                          o.q, qaoa_total, omcs_total);
            out << buf;
        }
    });
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"weighted ground-state counting toolkit"};
    app.require_subcommand(1);

    CommonOpts gen_o;
    auto* gen = app.add_subcommand("gen-graph", "emit a graph file");
    add_common(gen, gen_o);

    CommonOpts bf_o;
    auto* bf = app.add_subcommand("brute-force", "exact spectrum and weighted count");
    add_common(bf, bf_o);

    CommonOpts dp_o;
    std::string dp_family = "linear";
    int dp_edges = 10, dp_moment = 2;
    auto* dp = app.add_subcommand("spectrum-dp", "transfer-matrix spectrum oracle");
    add_common(dp, dp_o, false);
    dp->add_option("--family", dp_family, "linear|grid2xn");
    dp->add_option("--edges", dp_edges, "edge count");
    dp->add_option("--q", dp_o.q, "per-edge absence probability");
    dp->add_option("--max-moment", dp_moment, "highest moment order");

    CommonOpts gap_o;
    std::string gap_schedule = "linear";
    int gap_res = 0;
    auto* gap = app.add_subcommand("gap-scan", "interpolated-spectrum scan");
    add_common(gap, gap_o);
    gap->add_option("--schedule", gap_schedule, "linear|alt");
    gap->add_option("--resolution", gap_res, "grid points (default from config)");

    CommonOpts run_o;
    std::string run_algorithm = "aqo", run_engine = "auto";
    long long run_depth = 0;
    double run_alpha = -1.0, run_beta = -1.0;
    bool run_per_ground = false, run_angles = false;
    auto* run = app.add_subcommand("run", "one evolution with a trajectory record");
    add_common(run, run_o);
    run->add_option("--algorithm", run_algorithm, "grover|aqo|qaoa-greedy|qaoa-constant");
    run->add_option("--engine", run_engine, "auto|full|subspace");
    run->add_option("--depth", run_depth, "fixed step count (0 = choose automatically)");
    run->add_option("--alpha", run_alpha, "fixed mixer angle (qaoa-constant)");
    run->add_option("--beta", run_beta, "fixed phase angle (qaoa-constant)");
    run->add_flag("--per-ground", run_per_ground, "emit per-ground-state occupations");
    run->add_flag("--angles", run_angles, "emit the angle schedule in units of pi");

    CommonOpts count_o;
    std::string count_algorithm = "exact";
    int count_trials = 1;
    auto* count = app.add_subcommand("count", "adaptive capture-recapture estimate");
    add_common(count, count_o);
    count->add_option("--algorithm", count_algorithm, "exact|grover|aqo|qaoa-greedy");
    count->add_option("--trials", count_trials, "repeat with derived seeds and emit a csv log");

    CommonOpts omcs_o;
    int omcs_trials = 1;
    auto* om = app.add_subcommand("omcs", "stopping-rule Monte Carlo estimate");
    add_common(om, omcs_o);
    om->add_option("--trials", omcs_trials, "repeat with derived seeds and emit a csv log");

    CommonOpts sc_o;
    std::string sc_family = "linear", sc_algorithms = "aqo,qaoa,grover";
    std::vector<int> sc_sizes;
    int sc_instances = 1;
    auto* sc = app.add_subcommand("scaling-study", "steps-to-target across sizes");
    add_common(sc, sc_o, false);
    sc->add_option("--family", sc_family, "linear|grid2xn|random");
    sc->add_option("--sizes", sc_sizes, "edge counts")->required();
    sc->add_option("--q", sc_o.q, "per-edge absence probability");
    sc->add_option("--degree", sc_o.degree, "mean vertex degree (random family)");
    sc->add_option("--algorithms", sc_algorithms, "comma list: aqo,qaoa,grover");
    sc->add_option("--instances", sc_instances, "instances per size (random family)");

    CommonOpts gc_o;
    std::string gc_family = "linear", gc_ancillas = "with", gc_search = "excluded";
    std::vector<int> gc_sizes;
    auto* gc = app.add_subcommand("gate-cost", "total abstract cost vs the classical baseline");
    add_common(gc, gc_o, false);
    gc->add_option("--family", gc_family, "linear|grid2xn");
    gc->add_option("--sizes", gc_sizes, "edge counts")->required();
    gc->add_option("--q", gc_o.q, "per-edge absence probability");
    gc->add_option("--ancillas", gc_ancillas, "with|without");
    gc->add_option("--search", gc_search,
                   "angle-search accounting: excluded|greedy|constant");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 3;
    }

    try {
        if (gen->parsed()) return cmd_gen_graph(gen_o);
        if (bf->parsed()) return cmd_brute_force(bf_o);
        if (dp->parsed()) return cmd_spectrum_dp(dp_o, dp_family, dp_edges, dp_moment);
        if (gap->parsed()) return cmd_gap_scan(gap_o, gap_schedule, gap_res);
        if (run->parsed())
            return cmd_run(run_o, run_algorithm, run_engine, run_depth, run_alpha, run_beta,
                           run_per_ground, run_angles);
        if (count->parsed()) return cmd_count(count_o, count_algorithm, count_trials);
        if (om->parsed()) return cmd_omcs(omcs_o, omcs_trials);
        if (sc->parsed())
            return cmd_scaling_study(sc_o, sc_family, sc_sizes, sc_algorithms, sc_instances);
        if (gc->parsed())
            return cmd_gate_cost(gc_o, gc_family, gc_sizes, gc_ancillas, gc_search);
    } catch (const ResourceCapError& e) {
        std::cerr << "resource cap: " << e.what() << "\n";
        return 2;
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid arguments: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
