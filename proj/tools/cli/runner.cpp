#include "runner.hpp"

#include <atomic>
#include <cmath>
#include <cstring>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "becrad.h"
#include "config.hpp"
#include "output.hpp"

namespace cli {
namespace {

// ---------------------------------------------------------------- plumbing

struct ApiError : std::runtime_error {
    br_status status;
    ApiError(br_status s, const std::string& msg) : std::runtime_error(msg), status(s) {}
};

void check(br_status s) {
    if (s != BR_OK) throw ApiError(s, br_last_error());
}

int exit_for(br_status s) {
    return (s == BR_INVALID_ARGUMENT || s == BR_DOMAIN_ERROR) ? 1 : 2;
}

int guarded(const std::function<int()>& body) {
    try {
        return body();
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 1;
    } catch (const ApiError& e) {
        std::cerr << "becrad: " << e.what() << "\n";
        return exit_for(e.status);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}

// Fixed output slots per task index keep results byte-identical for any
// worker count; only the scheduling order varies.
void parallel_for(std::size_t n, int threads, const std::function<void(std::size_t)>& body) {
    if (n == 0) return;
    std::size_t nw = std::min<std::size_t>(threads < 1 ? 1 : static_cast<std::size_t>(threads), n);
    if (nw <= 1) {
        for (std::size_t i = 0; i < n; ++i) body(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::exception_ptr> errs(nw);
    std::vector<std::thread> pool;
    pool.reserve(nw);
    for (std::size_t w = 0; w < nw; ++w) {
        pool.emplace_back([&, w] {
            try {
                for (;;) {
                    std::size_t i = next.fetch_add(1);
                    if (i >= n) break;
                    body(i);
                }
            } catch (...) {
                errs[w] = std::current_exception();
            }
        });
    }
    for (auto& th : pool) th.join();
    for (auto& e : errs)
        if (e) std::rethrow_exception(e);
}

const char* prov_name(int p) {
    switch (p) {
        case BR_PROV_NUMERIC: return "numeric";
        case BR_PROV_CLOSED_FORM: return "closed_form";
        case BR_PROV_REGULATOR_EXTRAPOLATED: return "regulator_extrapolated";
        case BR_PROV_ASYMPTOTIC: return "asymptotic";
    }
    return "unknown";
}

// ------------------------------------------------------------ unit context

// The C API works in input units. A natural-units config converts its values
// on the way in and the results on the way out; for a condensate with
// M = g = n = hbar = 1 every factor is 1 and the two modes coincide.
struct UnitCtx {
    double L0 = 1.0, T0 = 1.0, E0 = 1.0;
    bool natural = false;

    double in_k(double k) const { return natural ? k / L0 : k; }
    double in_len(double z) const { return natural ? z * L0 : z; }
    double in_time(double t) const { return natural ? t * T0 : t; }
    double in_rate(double g) const { return natural ? g / T0 : g; }
    double in_speed(double v) const { return natural ? v * L0 / T0 : v; }
    double in_accel(double a) const { return natural ? a * L0 / (T0 * T0) : a; }
    double in_reg(double e, int kind) const {
        if (!natural) return e;
        return kind == BR_REG_GAUSSIAN ? e / (T0 * T0) : e / T0;
    }

    double out_k(double k) const { return natural ? k * L0 : k; }
    double out_len(double z) const { return natural ? z / L0 : z; }
    double out_omega(double w) const { return natural ? w * T0 : w; }
    double out_dn(double dn) const { return natural ? dn / L0 : dn; }
    double out_dE(double dE) const { return natural ? dE / (L0 * E0) : dE; }
    double out_energy(double E) const { return natural ? E / E0 : E; }
    double out_phase(double I) const { return natural ? I / T0 : I; }
};

// ---------------------------------------------------------------- session

struct CondHandle {
    br_condensate* h = nullptr;
    ~CondHandle() { br_condensate_destroy(h); }
    CondHandle() = default;
    CondHandle(const CondHandle&) = delete;
    CondHandle& operator=(const CondHandle&) = delete;
};

struct TrajHandle {
    br_trajectory* h = nullptr;
    ~TrajHandle() { br_trajectory_destroy(h); }
    TrajHandle() = default;
    TrajHandle(const TrajHandle&) = delete;
    TrajHandle& operator=(const TrajHandle&) = delete;
};

// two-column waypoint file, used when a natural-units config names a sampled
// path (values must be rescaled before the trajectory is built)
void read_waypoints(const std::string& path, std::vector<double>& t, std::vector<double>& z) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open trajectory file: " + path);
    std::string line;
    bool first = true;
    while (std::getline(in, line)) {
        for (char& ch : line)
            if (ch == ',' || ch == '\t') ch = ' ';
        std::istringstream row(line);
        double a = 0.0, b = 0.0;
        if (row >> a >> b) {
            t.push_back(a);
            z.push_back(b);
        } else if (!first && line.find_first_not_of(" \r\n") != std::string::npos) {
            throw ConfigError("malformed waypoint row in " + path + ": " + line);
        }
        first = false;
    }
    if (t.size() < 2) throw ConfigError("trajectory file needs at least two waypoints: " + path);
}

// Owns the C API handles plus the converted window/regulator for one config.
struct Session {
    RunConfig cfg;
    UnitCtx u;
    CondHandle cond;
    TrajHandle traj;
    br_window win{};
    std::vector<double> ladder_in;
    br_regulator reg{};
    bool has_reg = false;

    explicit Session(RunConfig c) : cfg(std::move(c)) {
        br_condensate_params p{};
        p.mass = cfg.condensate.mass;
        p.coupling = cfg.condensate.coupling;
        p.density = cfg.condensate.density;
        p.impurity_coupling = cfg.condensate.impurity_coupling;
        p.hbar = cfg.condensate.hbar;
        p.particle_number = cfg.condensate.particle_number ? *cfg.condensate.particle_number : 0.0;
        p.box_length = cfg.condensate.box_length ? *cfg.condensate.box_length : 0.0;
        check(br_condensate_create(&p, &cond.h));

        br_unit_scales s{};
        check(br_condensate_unit_scales(cond.h, &s));
        u.L0 = s.L0;
        u.T0 = s.T0;
        u.E0 = s.E0;
        u.natural = cfg.units == "natural";

        const TrajectoryCfg& t = cfg.trajectory;
        if (t.type == "constant_velocity") {
            check(br_trajectory_constant_velocity(u.in_speed(t.v), &traj.h));
        } else if (t.type == "exponential_decay") {
            check(br_trajectory_exponential_decay(u.in_len(t.zeta0), u.in_rate(t.gamma0), &traj.h));
        } else if (t.type == "uniform_acceleration") {
            check(br_trajectory_uniform_acceleration(u.in_accel(t.a), u.in_speed(t.c), &traj.h));
        } else if (t.inline_samples) {
            std::vector<double> ti(t.t), zi(t.z);
            for (double& x : ti) x = u.in_time(x);
            for (double& x : zi) x = u.in_len(x);
            check(br_trajectory_sampled(ti.data(), zi.data(), ti.size(), t.order, &traj.h));
        } else if (u.natural) {
            std::vector<double> ti, zi;
            read_waypoints(t.path, ti, zi);
            for (double& x : ti) x = u.in_time(x);
            for (double& x : zi) x = u.in_len(x);
            check(br_trajectory_sampled(ti.data(), zi.data(), ti.size(), t.order, &traj.h));
        } else {
            check(br_trajectory_sampled_csv(t.path.c_str(), t.order, &traj.h));
        }

        if (cfg.window.has) {
            win.t_i = u.in_time(cfg.window.t_i);
            win.t_f = u.in_time(cfg.window.t_f);
            win.infinite_i = cfg.window.inf_i ? 1 : 0;
            win.infinite_f = cfg.window.inf_f ? 1 : 0;
        }

        if (cfg.regulator.has && cfg.regulator.kind != "none") {
            has_reg = true;
            reg.kind = cfg.regulator.kind == "gaussian" ? BR_REG_GAUSSIAN : BR_REG_EXPONENTIAL;
            ladder_in = cfg.regulator.ladder;
            for (double& e : ladder_in) e = u.in_reg(e, reg.kind);
            reg.ladder = ladder_in.empty() ? nullptr : ladder_in.data();
            reg.ladder_len = ladder_in.size();
            reg.order = cfg.regulator.order;
        }
    }

    const br_regulator* reg_ptr() const { return has_reg ? &reg : nullptr; }

    void need_window() const {
        if (!cfg.window.has) throw ConfigError("missing key: config.window");
    }

    double v_natural(double v_cfg) const { return u.in_speed(v_cfg) * u.T0 / u.L0; }
};

// ----------------------------------------------------------- spectrum rows

enum class SpecRoute { zero_rows, ed_full, ed_window, ua_closed, numeric };

SpecRoute pick_spectrum_route(const Session& s) {
    const TrajectoryCfg& t = s.cfg.trajectory;
    const bool full_line = s.cfg.window.inf_i && s.cfg.window.inf_f;
    if (t.type == "constant_velocity") {
        if (!full_line) return SpecRoute::numeric;
        if (std::abs(s.v_natural(t.v)) <= 1.0) return SpecRoute::zero_rows;
        throw ApiError(BR_UNSUPPORTED,
                       "steady supersonic motion radiates at a constant rate with no "
                       "per-event spectrum; use the Cherenkov rate or a finite window");
    }
    if (t.type == "exponential_decay") {
        if (t.zeta0 == 0.0) return SpecRoute::zero_rows;  // motionless impurity
        if (full_line) return SpecRoute::ed_full;
        if (s.cfg.window.inf_f) return SpecRoute::numeric;
        return SpecRoute::ed_window;
    }
    if (t.type == "uniform_acceleration")
        return full_line ? SpecRoute::ua_closed : SpecRoute::numeric;
    return SpecRoute::numeric;
}

br_spectrum_point eval_spectrum_point(const Session& s, SpecRoute route, double k_cfg,
                                      double theta) {
    const double k_in = s.u.in_k(k_cfg);
    br_spectrum_point pt{};
    switch (route) {
        case SpecRoute::zero_rows: {
            br_mode m{};
            check(br_condensate_mode(s.cond.h, k_in, theta, &m));
            pt.k = k_in;
            pt.theta = theta;
            pt.omega = m.omega;
            pt.dn_dk_domega = 0.0;
            pt.dE_dk_domega = 0.0;
            pt.provenance = BR_PROV_CLOSED_FORM;
            return pt;
        }
        case SpecRoute::ed_full: {
            const double g0 = s.u.in_rate(s.cfg.trajectory.gamma0);
            const int hemi = std::cos(theta) * s.cfg.trajectory.zeta0 > 0.0 ? BR_HEMI_UPPER
                                                                            : BR_HEMI_LOWER;
            check(br_spectrum_exponential(s.cond.h, g0, k_in, theta, hemi, &pt));
            return pt;
        }
        case SpecRoute::ed_window: {
            const double g0 = s.u.in_rate(s.cfg.trajectory.gamma0);
            const double z0 = s.u.in_len(s.cfg.trajectory.zeta0);
            check(br_spectrum_exponential_windowed(s.cond.h, g0, z0, &s.win, k_in, theta, &pt));
            return pt;
        }
        case SpecRoute::ua_closed: {
            const double a = s.u.in_accel(s.cfg.trajectory.a);
            check(br_spectrum_uniform_acceleration(s.cond.h, a, k_in, theta, &pt));
            return pt;
        }
        case SpecRoute::numeric:
            break;
    }
    br_phase_integral I{};
    check(br_phase_integral_numeric(s.cond.h, s.traj.h, k_in, theta, &s.win, s.reg_ptr(),
                                    s.cfg.spectrum.tol, &I));
    check(br_spectrum_occupation(s.cond.h, k_in, theta, &I, &pt));
    return pt;
}

std::vector<br_spectrum_point> compute_spectrum_rows(const Session& s, int threads) {
    const std::vector<double> ks = s.cfg.spectrum.k.resolve();
    const int n_theta = s.cfg.spectrum.n_theta;
    const SpecRoute route = pick_spectrum_route(s);
    std::vector<br_spectrum_point> pts(ks.size() * static_cast<std::size_t>(n_theta));
    parallel_for(pts.size(), threads, [&](std::size_t i) {
        const std::size_t ik = i / static_cast<std::size_t>(n_theta);
        const std::size_t it = i % static_cast<std::size_t>(n_theta);
        const double theta = M_PI * (static_cast<double>(it) + 0.5) / n_theta;
        pts[i] = eval_spectrum_point(s, route, ks[ik], theta);
    });
    return pts;
}

// ------------------------------------------------------------------ output

const char* kSpectrumHeader = "k,theta,omega,dn_dk_domega,dE_dk_domega,provenance";
const char* kEnergyHeader = "total,upper,lower,k_max,truncation_error,divergent,tail_exponent";
const char* kDepletionHeader =
    "leading,correction,modes_used,box_length,particle_number,k_max,tail_estimate";

std::string spectrum_row_csv(const UnitCtx& u, const br_spectrum_point& p) {
    std::string r;
    r += fmt17(u.out_k(p.k));
    r += ',';
    r += fmt17(p.theta);
    r += ',';
    r += fmt17(u.out_omega(p.omega));
    r += ',';
    r += fmt17(u.out_dn(p.dn_dk_domega));
    r += ',';
    r += fmt17(u.out_dE(p.dE_dk_domega));
    r += ',';
    r += prov_name(p.provenance);
    return r;
}

json spectrum_row_json(const UnitCtx& u, const br_spectrum_point& p) {
    json row;
    row["k"] = u.out_k(p.k);
    row["theta"] = p.theta;
    row["omega"] = u.out_omega(p.omega);
    row["dn_dk_domega"] = u.out_dn(p.dn_dk_domega);
    row["dE_dk_domega"] = u.out_dE(p.dE_dk_domega);
    row["provenance"] = prov_name(p.provenance);
    return row;
}

std::string energy_row_csv(const UnitCtx& u, const br_energy_report& r) {
    std::string row;
    row += fmt17(u.out_energy(r.total));
    row += ',';
    row += fmt17(u.out_energy(r.upper));
    row += ',';
    row += fmt17(u.out_energy(r.lower));
    row += ',';
    row += fmt17(u.out_k(r.k_max));
    row += ',';
    row += fmt17(u.out_energy(r.truncation_error));
    row += ',';
    row += std::to_string(r.divergent);
    row += ',';
    row += fmt17(r.tail_exponent);
    return row;
}

json energy_row_json(const UnitCtx& u, const br_energy_report& r) {
    json row;
    row["total"] = u.out_energy(r.total);
    row["upper"] = u.out_energy(r.upper);
    row["lower"] = u.out_energy(r.lower);
    row["k_max"] = u.out_k(r.k_max);
    row["truncation_error"] = u.out_energy(r.truncation_error);
    row["divergent"] = r.divergent != 0;
    row["tail_exponent"] = r.tail_exponent;
    return row;
}

std::string json_doc(json doc) {
    doc["version"] = br_version();
    return doc.dump(2) + "\n";
}

// ---------------------------------------------------------------- commands

}  // namespace

int cmd_spectrum(const RunOptions& opt) {
    return guarded([&]() -> int {
        Session s(load_config(opt.config_path));
        if (!s.cfg.spectrum.has) throw ConfigError("missing key: config.spectrum");
        s.need_window();
        const auto pts = compute_spectrum_rows(s, opt.threads);
        std::string text;
        if (opt.format == "json") {
            json doc;
            doc["config"] = resolved_json(s.cfg);
            json rows = json::array();
            for (const auto& p : pts) rows.push_back(spectrum_row_json(s.u, p));
            doc["rows"] = rows;
            text = json_doc(std::move(doc));
        } else {
            text = header_comment(resolved_json(s.cfg));
            text += kSpectrumHeader;
            text += '\n';
            for (const auto& p : pts) {
                text += spectrum_row_csv(s.u, p);
                text += '\n';
            }
        }
        write_output(opt.out_path, text);
        return 0;
    });
}

int cmd_energy(const RunOptions& opt) {
    return guarded([&]() -> int {
        Session s(load_config(opt.config_path));
        if (!s.cfg.energy.has) throw ConfigError("missing key: config.energy");
        s.need_window();
        br_energy_grid grid{};
        grid.n_theta = s.cfg.energy.n_theta;
        grid.k_min = s.u.in_k(s.cfg.energy.k_min);
        grid.tol = s.cfg.energy.tol;
        br_energy_report rep{};
        check(br_total_energy(s.cond.h, s.traj.h, &s.win, s.reg_ptr(),
                              s.u.in_k(s.cfg.energy.k_max), &grid, &rep));
        std::string text;
        if (opt.format == "json") {
            json doc;
            doc["config"] = resolved_json(s.cfg);
            doc["report"] = energy_row_json(s.u, rep);
            text = json_doc(std::move(doc));
        } else {
            text = header_comment(resolved_json(s.cfg));
            text += kEnergyHeader;
            text += '\n';
            text += energy_row_csv(s.u, rep);
            text += '\n';
        }
        write_output(opt.out_path, text);
        return 0;
    });
}

int cmd_depletion(const RunOptions& opt) {
    return guarded([&]() -> int {
        Session s(load_config(opt.config_path));
        if (!s.cfg.depletion.has) throw ConfigError("missing key: config.depletion");
        s.need_window();
        br_depletion_report rep{};
        check(br_depletion(s.cond.h, s.traj.h, &s.win, s.reg_ptr(),
                           s.u.in_k(s.cfg.depletion.k_max), s.u.in_time(s.cfg.depletion.t),
                           &rep));
        std::string text;
        if (opt.format == "json") {
            json doc;
            doc["config"] = resolved_json(s.cfg);
            json r;
            r["leading"] = rep.leading;
            r["correction"] = rep.correction;
            r["modes_used"] = rep.modes_used;
            r["box_length"] = s.u.out_len(rep.box_length);
            r["particle_number"] = rep.particle_number;
            r["k_max"] = s.u.out_k(rep.k_max);
            r["tail_estimate"] = rep.tail_estimate;
            doc["report"] = r;
            text = json_doc(std::move(doc));
        } else {
            text = header_comment(resolved_json(s.cfg));
            text += kDepletionHeader;
            text += '\n';
            text += fmt17(rep.leading);
            text += ',';
            text += fmt17(rep.correction);
            text += ',';
            text += std::to_string(rep.modes_used);
            text += ',';
            text += fmt17(s.u.out_len(rep.box_length));
            text += ',';
            text += fmt17(rep.particle_number);
            text += ',';
            text += fmt17(s.u.out_k(rep.k_max));
            text += ',';
            text += fmt17(rep.tail_estimate);
            text += '\n';
        }
        write_output(opt.out_path, text);
        return 0;
    });
}

namespace {

RunConfig apply_axis(const RunConfig& base, const std::string& axis, double value) {
    RunConfig cfg = base;
    if (axis == "a") {
        if (cfg.trajectory.type != "uniform_acceleration")
            throw ConfigError("sweep.axis a requires a uniform_acceleration trajectory");
        cfg.trajectory.a = value;
    } else if (axis == "gamma0") {
        if (cfg.trajectory.type != "exponential_decay")
            throw ConfigError("sweep.axis gamma0 requires an exponential_decay trajectory");
        cfg.trajectory.gamma0 = value;
    } else if (axis == "zeta0") {
        if (cfg.trajectory.type != "exponential_decay")
            throw ConfigError("sweep.axis zeta0 requires an exponential_decay trajectory");
        cfg.trajectory.zeta0 = value;
    } else if (axis == "v") {
        if (cfg.trajectory.type != "constant_velocity")
            throw ConfigError("sweep.axis v requires a constant_velocity trajectory");
        cfg.trajectory.v = value;
    } else if (axis == "lambda") {
        // condensate parameters define the unit scales, so these values are
        // always input units; lambda itself never feeds the scales
        cfg.condensate.impurity_coupling = value;
    } else if (axis == "T") {
        if (!(value > 0.0)) throw ConfigError("sweep.values: window durations must be positive");
        cfg.window.has = true;
        cfg.window.t_i = 0.0;
        cfg.window.t_f = value;
        cfg.window.inf_i = cfg.window.inf_f = false;
    } else {
        throw ConfigError("sweep.axis: unknown axis " + axis);
    }
    return cfg;
}

int run_value_sweep(const RunOptions& opt, const RunConfig& base) {
    const SweepCfg& sw = base.sweep;
    if (sw.observable == "spectrum" && !base.spectrum.has)
        throw ConfigError("missing key: config.spectrum");
    if (sw.observable == "energy" && !base.energy.has)
        throw ConfigError("missing key: config.energy");
    if (sw.axis != "T" && !base.window.has) throw ConfigError("missing key: config.window");

    const std::size_t n = sw.values.size();
    std::vector<std::string> csv_blocks(n);
    std::vector<json> json_blocks(n);
    const bool want_json = opt.format == "json";

    parallel_for(n, opt.threads, [&](std::size_t i) {
        Session s(apply_axis(base, sw.axis, sw.values[i]));
        if (sw.observable == "spectrum") {
            const auto pts = compute_spectrum_rows(s, 1);
            if (want_json) {
                json b;
                b["value"] = sw.values[i];
                json rows = json::array();
                for (const auto& p : pts) rows.push_back(spectrum_row_json(s.u, p));
                b["rows"] = rows;
                json_blocks[i] = std::move(b);
            } else {
                std::string& blk = csv_blocks[i];
                for (const auto& p : pts) {
                    blk += fmt17(sw.values[i]);
                    blk += ',';
                    blk += spectrum_row_csv(s.u, p);
                    blk += '\n';
                }
            }
        } else {
            br_energy_grid grid{};
            grid.n_theta = s.cfg.energy.n_theta;
            grid.k_min = s.u.in_k(s.cfg.energy.k_min);
            grid.tol = s.cfg.energy.tol;
            br_energy_report rep{};
            check(br_total_energy(s.cond.h, s.traj.h, &s.win, s.reg_ptr(),
                                  s.u.in_k(s.cfg.energy.k_max), &grid, &rep));
            if (want_json) {
                json b;
                b["value"] = sw.values[i];
                b["report"] = energy_row_json(s.u, rep);
                json_blocks[i] = std::move(b);
            } else {
                csv_blocks[i] = fmt17(sw.values[i]) + "," + energy_row_csv(s.u, rep) + "\n";
            }
        }
    });

    std::string text;
    if (want_json) {
        json doc;
        doc["config"] = resolved_json(base);
        doc["axis"] = sw.axis;
        json blocks = json::array();
        for (auto& b : json_blocks) blocks.push_back(std::move(b));
        doc["blocks"] = blocks;
        text = json_doc(std::move(doc));
    } else {
        text = header_comment(resolved_json(base));
        text += sw.axis;
        text += ',';
        text += sw.observable == "spectrum" ? kSpectrumHeader : kEnergyHeader;
        text += '\n';
        for (const auto& blk : csv_blocks) text += blk;
    }
    write_output(opt.out_path, text);
    return 0;
}

int run_epsilon_sweep(const RunOptions& opt, const RunConfig& base) {
    const SweepCfg& sw = base.sweep;
    if (!base.window.has) throw ConfigError("missing key: config.window");
    if (!base.regulator.has || base.regulator.kind == "none")
        throw ConfigError("sweep.axis epsilon requires a regulator block with a kind");
    if (!base.regulator.ladder.empty())
        throw ConfigError("sweep.values supplies the ladder; remove regulator.ladder");

    Session s(base);
    const int kind = base.regulator.kind == "gaussian" ? BR_REG_GAUSSIAN : BR_REG_EXPONENTIAL;
    const std::size_t n = sw.values.size();
    std::vector<double> eps_in(n);
    for (std::size_t i = 0; i < n; ++i) eps_in[i] = s.u.in_reg(sw.values[i], kind);
    const double k_in = s.u.in_k(sw.k);

    std::vector<br_phase_integral> rungs(n);
    parallel_for(n, opt.threads, [&](std::size_t i) {
        br_regulator reg{};
        reg.kind = kind;
        reg.ladder = &eps_in[i];
        reg.ladder_len = 1;
        check(br_phase_integral_numeric(s.cond.h, s.traj.h, k_in, sw.theta, &s.win, &reg,
                                        1e-9, &rungs[i]));
    });
    br_phase_integral limit{};
    const int max_order = static_cast<int>(n) - 1;
    const int order = base.regulator.order >= 1
                          ? std::min(base.regulator.order, max_order)
                          : max_order;  // 0 = unset: use the full ladder
    check(br_phase_integral_extrapolate(eps_in.data(), rungs.data(), n, order, &limit));

    std::string text;
    if (opt.format == "json") {
        json doc;
        doc["config"] = resolved_json(base);
        doc["axis"] = "epsilon";
        json blocks = json::array();
        for (std::size_t i = 0; i <= n; ++i) {
            const br_phase_integral& r = i < n ? rungs[i] : limit;
            json b;
            b["epsilon"] = i < n ? sw.values[i] : 0.0;
            b["value_re"] = s.u.out_phase(r.value_re);
            b["value_im"] = s.u.out_phase(r.value_im);
            b["error"] = s.u.out_phase(r.error);
            b["provenance"] = prov_name(r.provenance);
            blocks.push_back(std::move(b));
        }
        doc["blocks"] = blocks;
        text = json_doc(std::move(doc));
    } else {
        text = header_comment(resolved_json(base));
        text += "epsilon,value_re,value_im,error,provenance\n";
        for (std::size_t i = 0; i <= n; ++i) {
            const br_phase_integral& r = i < n ? rungs[i] : limit;
            text += fmt17(i < n ? sw.values[i] : 0.0);
            text += ',';
            text += fmt17(s.u.out_phase(r.value_re));
            text += ',';
            text += fmt17(s.u.out_phase(r.value_im));
            text += ',';
            text += fmt17(s.u.out_phase(r.error));
            text += ',';
            text += prov_name(r.provenance);
            text += '\n';
        }
    }
    write_output(opt.out_path, text);
    return 0;
}

}  // namespace

int cmd_sweep(const RunOptions& opt) {
    return guarded([&]() -> int {
        RunConfig base = load_config(opt.config_path);
        if (!base.sweep.has) throw ConfigError("missing key: config.sweep");
        if (base.sweep.axis == "epsilon") return run_epsilon_sweep(opt, base);
        return run_value_sweep(opt, base);
    });
}

int cmd_validate(const RunOptions& opt) {
    return guarded([&]() -> int {
        char* report_json = nullptr;
        int all_pass = 0;
        check(br_validate_run(opt.k1_perturbation, opt.seed, &report_json, &all_pass));
        std::string raw = report_json ? report_json : "{}";
        br_string_free(report_json);

        std::string text;
        if (opt.format == "json") {
            json doc;
            doc["report"] = json::parse(raw);
            text = json_doc(std::move(doc));
        } else {
            json rep = json::parse(raw);
            text = "# becrad ";
            text += br_version();
            text += '\n';
            text += "name,measured,tolerance,pass,detail\n";
            for (const auto& c : rep.at("checks")) {
                text += csv_field(c.at("name").get<std::string>());
                text += ',';
                text += fmt17(c.at("measured").get<double>());
                text += ',';
                text += fmt17(c.at("tolerance").get<double>());
                text += ',';
                text += c.at("pass").get<bool>() ? "1" : "0";
                text += ',';
                text += csv_field(c.at("detail").get<std::string>());
                text += '\n';
            }
            for (const auto& d : rep.at("diagnostics")) {
                text += "# diagnostic ";
                text += d.at("name").get<std::string>();
                text += ' ';
                text += fmt17(d.at("value").get<double>());
                text += ' ';
                text += d.at("detail").get<std::string>();
                text += '\n';
            }
        }
        write_output(opt.out_path, text);
        return all_pass ? 0 : 3;
    });
}

}  // namespace cli
