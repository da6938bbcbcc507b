#include "config.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <initializer_list>

namespace cli {
namespace {

void check_keys(const json& obj, const std::string& path,
                std::initializer_list<const char*> allowed) {
    if (!obj.is_object()) throw ConfigError(path + " must be an object");
    for (auto it = obj.begin(); it != obj.end(); ++it) {
        const std::string& key = it.key();
        bool ok = false;
        for (const char* a : allowed)
            if (key == a) { ok = true; break; }
        if (!ok) throw ConfigError("unknown key: " + path + "." + key);
    }
}

const json& get_req(const json& obj, const std::string& path, const char* key) {
    auto it = obj.find(key);
    if (it == obj.end()) throw ConfigError("missing key: " + path + "." + key);
    return *it;
}

double as_num(const json& v, const std::string& path) {
    if (!v.is_number()) throw ConfigError(path + " must be a number");
    double x = v.get<double>();
    if (!std::isfinite(x)) throw ConfigError(path + " must be finite");
    return x;
}

double req_num(const json& obj, const std::string& path, const char* key) {
    return as_num(get_req(obj, path, key), path + "." + key);
}

double opt_num(const json& obj, const std::string& path, const char* key, double fallback) {
    auto it = obj.find(key);
    if (it == obj.end()) return fallback;
    return as_num(*it, path + "." + key);
}

long as_int(const json& v, const std::string& path) {
    if (!v.is_number_integer()) throw ConfigError(path + " must be an integer");
    return v.get<long>();
}

std::string as_str(const json& v, const std::string& path) {
    if (!v.is_string()) throw ConfigError(path + " must be a string");
    return v.get<std::string>();
}

std::vector<double> as_num_array(const json& v, const std::string& path) {
    if (!v.is_array() || v.empty()) throw ConfigError(path + " must be a non-empty array of numbers");
    std::vector<double> out;
    out.reserve(v.size());
    for (std::size_t i = 0; i < v.size(); ++i)
        out.push_back(as_num(v[i], path + "[" + std::to_string(i) + "]"));
    return out;
}

// window endpoints accept a number or the strings "-inf" / "inf" / "+inf"
void parse_time(const json& v, const std::string& path, double& t, bool& inf, bool lower) {
    if (v.is_string()) {
        std::string s = v.get<std::string>();
        if ((lower && s == "-inf") || (!lower && (s == "inf" || s == "+inf"))) {
            inf = true;
            t = 0.0;
            return;
        }
        throw ConfigError(path + ": expected a number or \"" + (lower ? "-inf" : "inf") + "\"");
    }
    inf = false;
    t = as_num(v, path);
}

CondensateCfg parse_condensate(const json& j) {
    const std::string p = "condensate";
    check_keys(j, p, {"mass", "coupling", "density", "impurity_coupling", "hbar",
                      "particle_number", "box_length"});
    CondensateCfg c;
    c.mass = req_num(j, p, "mass");
    c.coupling = req_num(j, p, "coupling");
    c.density = req_num(j, p, "density");
    c.impurity_coupling = req_num(j, p, "impurity_coupling");
    c.hbar = opt_num(j, p, "hbar", 1.0);
    if (j.contains("particle_number")) c.particle_number = as_num(j["particle_number"], p + ".particle_number");
    if (j.contains("box_length")) c.box_length = as_num(j["box_length"], p + ".box_length");
    return c;
}

TrajectoryCfg parse_trajectory(const json& j) {
    const std::string p = "trajectory";
    TrajectoryCfg t;
    t.type = as_str(get_req(j, p, "type"), p + ".type");
    if (t.type == "constant_velocity") {
        check_keys(j, p, {"type", "v"});
        t.v = req_num(j, p, "v");
    } else if (t.type == "exponential_decay") {
        check_keys(j, p, {"type", "zeta0", "gamma0"});
        t.zeta0 = req_num(j, p, "zeta0");
        t.gamma0 = req_num(j, p, "gamma0");
    } else if (t.type == "uniform_acceleration") {
        check_keys(j, p, {"type", "a", "c"});
        t.a = req_num(j, p, "a");
        t.c = req_num(j, p, "c");
    } else if (t.type == "sampled") {
        check_keys(j, p, {"type", "path", "t", "z", "order"});
        t.order = static_cast<int>(opt_num(j, p, "order", 3.0));
        const bool has_path = j.contains("path");
        const bool has_arrays = j.contains("t") || j.contains("z");
        if (has_path == has_arrays)
            throw ConfigError(p + ": sampled trajectory needs either path or t/z arrays");
        if (has_path) {
            t.path = as_str(j["path"], p + ".path");
        } else {
            t.inline_samples = true;
            t.t = as_num_array(get_req(j, p, "t"), p + ".t");
            t.z = as_num_array(get_req(j, p, "z"), p + ".z");
            if (t.t.size() != t.z.size())
                throw ConfigError(p + ": t and z must have equal length");
        }
    } else {
        throw ConfigError(p + ".type: unknown trajectory type '" + t.type + "'");
    }
    return t;
}

WindowCfg parse_window(const json& j) {
    const std::string p = "window";
    check_keys(j, p, {"t_i", "t_f"});
    WindowCfg w;
    w.has = true;
    parse_time(get_req(j, p, "t_i"), p + ".t_i", w.t_i, w.inf_i, true);
    parse_time(get_req(j, p, "t_f"), p + ".t_f", w.t_f, w.inf_f, false);
    if (!w.inf_i && !w.inf_f && !(w.t_f > w.t_i))
        throw ConfigError(p + ": t_f must exceed t_i");
    return w;
}

RegulatorCfg parse_regulator(const json& j) {
    const std::string p = "regulator";
    check_keys(j, p, {"kind", "ladder", "order"});
    RegulatorCfg r;
    r.has = true;
    r.kind = as_str(get_req(j, p, "kind"), p + ".kind");
    if (r.kind != "none" && r.kind != "exponential" && r.kind != "gaussian")
        throw ConfigError(p + ".kind: expected none, exponential, or gaussian");
    if (j.contains("ladder")) {
        r.ladder = as_num_array(j["ladder"], p + ".ladder");
        for (double e : r.ladder)
            if (!(e > 0.0)) throw ConfigError(p + ".ladder: entries must be positive");
    }
    if (j.contains("order")) {
        long o = as_int(j["order"], p + ".order");
        if (o < 0) throw ConfigError(p + ".order must be non-negative");
        r.order = static_cast<int>(o);
    }
    return r;
}

KGridCfg parse_kgrid(const json& j, const std::string& p) {
    KGridCfg g;
    if (j.is_array()) {
        g.explicit_values = true;
        g.values = as_num_array(j, p);
        for (double k : g.values)
            if (!(k > 0.0)) throw ConfigError(p + ": wavenumbers must be positive");
        return g;
    }
    check_keys(j, p, {"min", "max", "count", "spacing"});
    g.min = req_num(j, p, "min");
    g.max = req_num(j, p, "max");
    g.count = static_cast<int>(as_int(get_req(j, p, "count"), p + ".count"));
    if (j.contains("spacing")) {
        g.spacing = as_str(j["spacing"], p + ".spacing");
        if (g.spacing != "log" && g.spacing != "linear")
            throw ConfigError(p + ".spacing: expected log or linear");
    }
    if (!(g.min > 0.0)) throw ConfigError(p + ".min must be positive");
    if (g.count < 1) throw ConfigError(p + ".count must be at least 1");
    if (g.count > 1 && !(g.max > g.min)) throw ConfigError(p + ".max must exceed min");
    return g;
}

SpectrumCfg parse_spectrum(const json& j) {
    const std::string p = "spectrum";
    check_keys(j, p, {"k", "n_theta", "tol"});
    SpectrumCfg s;
    s.has = true;
    s.k = parse_kgrid(get_req(j, p, "k"), p + ".k");
    s.n_theta = static_cast<int>(opt_num(j, p, "n_theta", 32.0));
    if (s.n_theta < 1) throw ConfigError(p + ".n_theta must be at least 1");
    s.tol = opt_num(j, p, "tol", 1e-9);
    if (!(s.tol > 0.0)) throw ConfigError(p + ".tol must be positive");
    return s;
}

EnergyCfg parse_energy(const json& j) {
    const std::string p = "energy";
    check_keys(j, p, {"k_max", "n_theta", "k_min", "tol"});
    EnergyCfg e;
    e.has = true;
    e.k_max = req_num(j, p, "k_max");
    if (!(e.k_max > 0.0)) throw ConfigError(p + ".k_max must be positive");
    e.n_theta = static_cast<int>(opt_num(j, p, "n_theta", 32.0));
    if (e.n_theta < 1) throw ConfigError(p + ".n_theta must be at least 1");
    e.k_min = opt_num(j, p, "k_min", 0.0);
    if (e.k_min < 0.0 || e.k_min >= e.k_max) throw ConfigError(p + ".k_min must lie in [0, k_max)");
    e.tol = opt_num(j, p, "tol", 1e-7);
    if (!(e.tol > 0.0)) throw ConfigError(p + ".tol must be positive");
    return e;
}

DepletionCfg parse_depletion(const json& j) {
    const std::string p = "depletion";
    check_keys(j, p, {"k_max", "t"});
    DepletionCfg d;
    d.has = true;
    d.k_max = req_num(j, p, "k_max");
    if (!(d.k_max > 0.0)) throw ConfigError(p + ".k_max must be positive");
    d.t = req_num(j, p, "t");
    return d;
}

SweepCfg parse_sweep(const json& j) {
    const std::string p = "sweep";
    check_keys(j, p, {"axis", "values", "observable", "k", "theta"});
    SweepCfg s;
    s.has = true;
    s.axis = as_str(get_req(j, p, "axis"), p + ".axis");
    static const char* axes[] = {"a", "gamma0", "T", "v", "lambda", "zeta0", "epsilon"};
    if (std::find_if(std::begin(axes), std::end(axes),
                     [&](const char* a) { return s.axis == a; }) == std::end(axes))
        throw ConfigError(p + ".axis: unknown sweep axis '" + s.axis + "'");
    s.values = as_num_array(get_req(j, p, "values"), p + ".values");
    if (s.axis == "epsilon") {
        if (j.contains("observable"))
            throw ConfigError(p + ".observable: not allowed for the epsilon axis");
        s.k = req_num(j, p, "k");
        s.theta = req_num(j, p, "theta");
        if (!(s.k > 0.0)) throw ConfigError(p + ".k must be positive");
        if (s.values.size() < 2)
            throw ConfigError(p + ".values: extrapolation needs at least two strengths");
        for (double e : s.values)
            if (!(e > 0.0)) throw ConfigError(p + ".values: regulator strengths must be positive");
        for (std::size_t i = 1; i < s.values.size(); ++i)
            if (!(s.values[i] < s.values[i - 1]))
                throw ConfigError(p + ".values: regulator ladder must be strictly decreasing");
    } else {
        if (j.contains("k") || j.contains("theta"))
            throw ConfigError(p + ": k/theta are only allowed for the epsilon axis");
        s.observable = as_str(get_req(j, p, "observable"), p + ".observable");
        if (s.observable != "spectrum" && s.observable != "energy")
            throw ConfigError(p + ".observable: expected spectrum or energy");
    }
    return s;
}

json time_json(double t, bool inf, bool lower) {
    if (inf) return json(lower ? "-inf" : "inf");
    return json(t);
}

}  // namespace

std::vector<double> KGridCfg::resolve() const {
    if (explicit_values) return values;
    std::vector<double> out;
    out.reserve(static_cast<std::size_t>(count));
    if (count == 1) {
        out.push_back(min);
        return out;
    }
    for (int i = 0; i < count; ++i) {
        double f = static_cast<double>(i) / static_cast<double>(count - 1);
        out.push_back(spacing == "log" ? min * std::pow(max / min, f)
                                       : min + (max - min) * f);
    }
    return out;
}

RunConfig parse_config(const json& doc) {
    check_keys(doc, "config", {"units", "condensate", "trajectory", "window", "regulator",
                               "spectrum", "energy", "depletion", "sweep"});
    RunConfig cfg;
    cfg.units = as_str(get_req(doc, "config", "units"), "config.units");
    if (cfg.units != "input" && cfg.units != "natural")
        throw ConfigError("config.units: expected input or natural");
    cfg.condensate = parse_condensate(get_req(doc, "config", "condensate"));
    cfg.trajectory = parse_trajectory(get_req(doc, "config", "trajectory"));
    if (doc.contains("window")) cfg.window = parse_window(doc["window"]);
    if (doc.contains("regulator")) cfg.regulator = parse_regulator(doc["regulator"]);
    if (doc.contains("spectrum")) cfg.spectrum = parse_spectrum(doc["spectrum"]);
    if (doc.contains("energy")) cfg.energy = parse_energy(doc["energy"]);
    if (doc.contains("depletion")) cfg.depletion = parse_depletion(doc["depletion"]);
    if (doc.contains("sweep")) cfg.sweep = parse_sweep(doc["sweep"]);
    if (cfg.sweep.has && cfg.sweep.axis == "T" && cfg.window.has)
        throw ConfigError("sweep: axis T supplies the window; remove the window block");
    return cfg;
}

RunConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file: " + path);
    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::parse_error& e) {
        throw ConfigError(std::string("config is not valid JSON: ") + e.what());
    }
    return parse_config(doc);
}

json resolved_json(const RunConfig& cfg) {
    json doc;
    doc["units"] = cfg.units;

    json c;
    c["mass"] = cfg.condensate.mass;
    c["coupling"] = cfg.condensate.coupling;
    c["density"] = cfg.condensate.density;
    c["impurity_coupling"] = cfg.condensate.impurity_coupling;
    c["hbar"] = cfg.condensate.hbar;
    if (cfg.condensate.particle_number) c["particle_number"] = *cfg.condensate.particle_number;
    if (cfg.condensate.box_length) c["box_length"] = *cfg.condensate.box_length;
    doc["condensate"] = c;

    json t;
    t["type"] = cfg.trajectory.type;
    if (cfg.trajectory.type == "constant_velocity") {
        t["v"] = cfg.trajectory.v;
    } else if (cfg.trajectory.type == "exponential_decay") {
        t["zeta0"] = cfg.trajectory.zeta0;
        t["gamma0"] = cfg.trajectory.gamma0;
    } else if (cfg.trajectory.type == "uniform_acceleration") {
        t["a"] = cfg.trajectory.a;
        t["c"] = cfg.trajectory.c;
    } else {
        t["order"] = cfg.trajectory.order;
        if (cfg.trajectory.inline_samples) {
            t["t"] = cfg.trajectory.t;
            t["z"] = cfg.trajectory.z;
        } else {
            t["path"] = cfg.trajectory.path;
        }
    }
    doc["trajectory"] = t;

    if (cfg.window.has) {
        json w;
        w["t_i"] = time_json(cfg.window.t_i, cfg.window.inf_i, true);
        w["t_f"] = time_json(cfg.window.t_f, cfg.window.inf_f, false);
        doc["window"] = w;
    }
    if (cfg.regulator.has) {
        json r;
        r["kind"] = cfg.regulator.kind;
        if (!cfg.regulator.ladder.empty()) r["ladder"] = cfg.regulator.ladder;
        if (cfg.regulator.order > 0) r["order"] = cfg.regulator.order;
        doc["regulator"] = r;
    }
    if (cfg.spectrum.has) {
        json s;
        if (cfg.spectrum.k.explicit_values) {
            s["k"] = cfg.spectrum.k.values;
        } else {
            json k;
            k["min"] = cfg.spectrum.k.min;
            k["max"] = cfg.spectrum.k.max;
            k["count"] = cfg.spectrum.k.count;
            k["spacing"] = cfg.spectrum.k.spacing;
            s["k"] = k;
        }
        s["n_theta"] = cfg.spectrum.n_theta;
        s["tol"] = cfg.spectrum.tol;
        doc["spectrum"] = s;
    }
    if (cfg.energy.has) {
        json e;
        e["k_max"] = cfg.energy.k_max;
        e["n_theta"] = cfg.energy.n_theta;
        e["k_min"] = cfg.energy.k_min;
        e["tol"] = cfg.energy.tol;
        doc["energy"] = e;
    }
    if (cfg.depletion.has) {
        json d;
        d["k_max"] = cfg.depletion.k_max;
        d["t"] = cfg.depletion.t;
        doc["depletion"] = d;
    }
    if (cfg.sweep.has) {
        json s;
        s["axis"] = cfg.sweep.axis;
        s["values"] = cfg.sweep.values;
        if (cfg.sweep.axis == "epsilon") {
            s["k"] = cfg.sweep.k;
            s["theta"] = cfg.sweep.theta;
        } else {
            s["observable"] = cfg.sweep.observable;
        }
        doc["sweep"] = s;
    }
    return doc;
}

}  // namespace cli
