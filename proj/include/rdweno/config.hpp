// Line-oriented "key = value" run configuration files.
#pragma once

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "rdweno/harness.hpp"

namespace rdweno {

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

namespace detail {

inline std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

template <class T>
T parse_number(const std::string& key, const std::string& value) {
    std::istringstream is(value);
    T out;
    is >> out;
    if (!is || !(is >> std::ws).eof())
        throw ConfigError("invalid value for '" + key + "': " + value);
    return out;
}

}  // namespace detail

// Applies one key/value pair to the run options. Recognized keys: problem,
// n, nx, ny, cfl, max_iters, tol, out_dir, average_state, direction.
inline void apply_config_entry(RunOptions& opt, const std::string& key,
                               const std::string& value) {
    if (key == "problem") {
        opt.problem = value;
    } else if (key == "n") {
        opt.n = detail::parse_number<int>(key, value);
    } else if (key == "nx") {
        opt.nx = detail::parse_number<int>(key, value);
    } else if (key == "ny") {
        opt.ny = detail::parse_number<int>(key, value);
    } else if (key == "cfl") {
        opt.solver.cfl = detail::parse_number<double>(key, value);
    } else if (key == "max_iters") {
        opt.solver.max_iters = detail::parse_number<long>(key, value);
    } else if (key == "tol") {
        opt.solver.residue_tol = detail::parse_number<double>(key, value);
    } else if (key == "out_dir") {
        opt.out_dir = value;
    } else if (key == "average_state") {
        if (value == "arithmetic")
            opt.solver.dist.average = AverageKind::Arithmetic;
        else if (value == "roe")
            opt.solver.dist.average = AverageKind::Roe;
        else
            throw ConfigError("average_state must be 'arithmetic' or 'roe', got: " +
                              value);
    } else if (key == "direction") {
        if (value == "x")
            opt.solver.dist.fixed_direction = true;
        else if (value == "velocity")
            opt.solver.dist.fixed_direction = false;
        else
            throw ConfigError("direction must be 'velocity' or 'x', got: " + value);
    } else {
        throw ConfigError("unknown config key: " + key);
    }
}

inline void load_config_file(RunOptions& opt, const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file: " + path);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = detail::trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigError(path + ":" + std::to_string(lineno) +
                              ": expected 'key = value'");
        const std::string key = detail::trim(line.substr(0, eq));
        const std::string value = detail::trim(line.substr(eq + 1));
        if (key.empty())
            throw ConfigError(path + ":" + std::to_string(lineno) + ": empty key");
        try {
            apply_config_entry(opt, key, value);
        } catch (const ConfigError& e) {
            throw ConfigError(path + ":" + std::to_string(lineno) + ": " + e.what());
        }
    }
}

}  // namespace rdweno
