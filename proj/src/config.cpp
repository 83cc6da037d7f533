#include "qcount/config.hpp"

#include <fstream>
#include <sstream>

#include "qcount/errors.hpp"

namespace qcount {

namespace {

std::string trim(const std::string& s) {
    const auto a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    const auto b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

template <typename T>
T parse_num(const std::string& key, const std::string& value) {
    std::istringstream in(value);
    T v{};
    if (!(in >> v) || !(in >> std::ws).eof())
        throw ConfigError("config: bad value for '" + key + "': " + value);
    return v;
}

} // namespace

void Config::set(const std::string& key, const std::string& value) {
    if (key == "dt") dt = parse_num<double>(key, value);
    else if (key == "eta2") eta2 = parse_num<double>(key, value);
    else if (key == "epsilon") epsilon = parse_num<double>(key, value);
    else if (key == "delta") delta = parse_num<double>(key, value);
    else if (key == "count_m") count_m = parse_num<int>(key, value);
    else if (key == "count_s") count_s = parse_num<long long>(key, value);
    else if (key == "qaoa_grid") qaoa_grid = parse_num<int>(key, value);
    else if (key == "qaoa_sweeps") qaoa_sweeps = parse_num<int>(key, value);
    else if (key == "qaoa_depth_cap") qaoa_depth_cap = parse_num<int>(key, value);
    else if (key == "aqo_doubling_cap") aqo_doubling_cap = parse_num<int>(key, value);
    else if (key == "aqo_refine") aqo_refine = parse_num<int>(key, value) != 0;
    else if (key == "aqo_sampled") aqo_sampled = parse_num<int>(key, value) != 0;
    else if (key == "aqo_shots") aqo_shots = parse_num<int>(key, value);
    else if (key == "gap_resolution") gap_resolution = parse_num<int>(key, value);
    else if (key == "measurement_budget") measurement_budget = parse_num<long long>(key, value);
    else if (key == "omcs_sample_cap") omcs_sample_cap = parse_num<long long>(key, value);
    else if (key == "exhaustive_limit") exhaustive_limit = parse_num<int>(key, value);
    else if (key == "max_moment") max_moment = parse_num<int>(key, value);
    else if (key == "seed") seed = parse_num<std::uint64_t>(key, value);
    else throw ConfigError("config: unknown key '" + key + "'");
}

void Config::load_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("config: cannot open " + path);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigError("config: " + path + ":" + std::to_string(lineno) +
                              ": expected key = value");
        set(trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
    }
}

} // namespace qcount
