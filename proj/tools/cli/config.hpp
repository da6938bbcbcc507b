#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

namespace cli {

using nlohmann::json;

// config/schema problems; the CLI maps these to exit code 1
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct CondensateCfg {
    double mass = 0.0;
    double coupling = 0.0;
    double density = 0.0;
    double impurity_coupling = 0.0;
    double hbar = 1.0;
    std::optional<double> particle_number;
    std::optional<double> box_length;
};

struct TrajectoryCfg {
    std::string type;  // constant_velocity | exponential_decay | uniform_acceleration | sampled
    double v = 0.0;
    double zeta0 = 0.0;
    double gamma0 = 0.0;
    double a = 0.0;
    double c = 0.0;
    std::string path;  // sampled: CSV file
    std::vector<double> t, z;  // sampled: inline arrays
    int order = 3;
    bool inline_samples = false;
};

struct WindowCfg {
    bool has = false;
    double t_i = 0.0, t_f = 0.0;
    bool inf_i = false, inf_f = false;
};

struct RegulatorCfg {
    bool has = false;
    std::string kind = "none";
    std::vector<double> ladder;
    int order = 0;  // 0 = automatic
};

struct KGridCfg {
    bool explicit_values = false;
    std::vector<double> values;
    double min = 0.0, max = 0.0;
    int count = 0;
    std::string spacing = "log";
    std::vector<double> resolve() const;
};

struct SpectrumCfg {
    bool has = false;
    KGridCfg k;
    int n_theta = 32;  // theta grid midpoints pi (j + 1/2) / n_theta
    double tol = 1e-9;
};

struct EnergyCfg {
    bool has = false;
    double k_max = 0.0;
    int n_theta = 32;
    double k_min = 0.0;
    double tol = 1e-7;
};

struct DepletionCfg {
    bool has = false;
    double k_max = 0.0;
    double t = 0.0;
};

struct SweepCfg {
    bool has = false;
    std::string axis;  // a | gamma0 | T | v | lambda | zeta0 | epsilon
    std::vector<double> values;
    std::string observable;  // spectrum | energy (absent for epsilon)
    double k = 0.0, theta = 0.0;  // epsilon axis: probe mode
};

struct RunConfig {
    std::string units;  // "input" | "natural"
    CondensateCfg condensate;
    TrajectoryCfg trajectory;
    WindowCfg window;
    RegulatorCfg regulator;
    SpectrumCfg spectrum;
    EnergyCfg energy;
    DepletionCfg depletion;
    SweepCfg sweep;
};

// Strict parse: unknown keys and missing required keys raise ConfigError
// naming the full key path. Physics has no defaults; numerics do.
RunConfig parse_config(const json& doc);
RunConfig load_config(const std::string& path);

// Canonical form with numeric defaults materialized; feeding it back through
// parse_config yields an equivalent RunConfig (the round-trip contract).
json resolved_json(const RunConfig& cfg);

}  // namespace cli
