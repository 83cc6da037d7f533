#ifndef QCOUNT_CONFIG_HPP
#define QCOUNT_CONFIG_HPP

#include <cstdint>
#include <string>

namespace qcount {

// every tunable default lives here; values load from a "key = value" file
// ('#' starts a comment) and individual --set key=value overrides
struct Config {
    double dt = 0.1;
    double eta2 = 0.5;       // evolve until occupation >= 1 - eta2
    double epsilon = 0.05;
    double delta = 0.05;
    int count_m = 16;        // initial capture batch size
    long long count_s = 8;   // initial batch count
    int qaoa_grid = 64;
    int qaoa_sweeps = 3;
    int qaoa_depth_cap = 2000;
    int aqo_doubling_cap = 30;
    bool aqo_refine = false;  // bisect to the minimal passing evolution time
    bool aqo_sampled = false; // estimate occupation from measurements, not exactly
    int aqo_shots = 64;
    int gap_resolution = 1024;
    long long measurement_budget = 10000000;
    long long omcs_sample_cap = 100000000;
    int exhaustive_limit = 24;
    int max_moment = 2;
    std::uint64_t seed = 1;

    void load_file(const std::string& path);       // throws ConfigError
    void set(const std::string& key, const std::string& value);
};

} // namespace qcount

#endif
