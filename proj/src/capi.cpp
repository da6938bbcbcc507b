#include "becrad.h"

#include <cstdlib>
#include <cstring>
#include <string>
#include <vector>

#include "common.hpp"
#include "condensate.hpp"
#include "phase_integral.hpp"
#include "spectrum.hpp"
#include "trajectory.hpp"
#include "validate.hpp"
#include "version.hpp"

struct br_condensate {
    becrad::Condensate impl;
};
struct br_trajectory {
    becrad::Trajectory impl;
};

namespace {

thread_local std::string g_error;

template <typename F>
br_status wrap(F&& body) {
    try {
        body();
        g_error.clear();
        return BR_OK;
    } catch (const becrad::Error& e) {
        g_error = e.what();
        return static_cast<br_status>(static_cast<int>(e.status()));
    } catch (const std::exception& e) {
        g_error = e.what();
        return BR_NUMERICAL_FAILURE;
    }
}

void need(const void* p, const char* what) {
    becrad::require(p != nullptr, becrad::Status::invalid_argument,
                    std::string(what) + " must not be null");
}

// input times -> natural times
becrad::Window to_natural(const br_window& w, double T0) {
    becrad::Window out;
    out.infinite_i = w.infinite_i != 0;
    out.infinite_f = w.infinite_f != 0;
    out.t_i = out.infinite_i ? 0.0 : w.t_i / T0;
    out.t_f = out.infinite_f ? 0.0 : w.t_f / T0;
    return out;
}

// the exponential strength is a rate, the gaussian one a rate squared
becrad::RegulatorSpec to_natural(const br_regulator& r, double T0) {
    becrad::RegulatorSpec out;
    becrad::require(r.kind >= 0 && r.kind <= 2, becrad::Status::invalid_argument,
                    "regulator kind must be 0 (none), 1 (exponential) or 2 (gaussian)");
    out.kind = static_cast<becrad::RegulatorKind>(r.kind);
    out.order = r.order;
    if (r.ladder_len > 0) {
        need(r.ladder, "regulator ladder");
        const double scale = out.kind == becrad::RegulatorKind::gaussian ? T0 * T0 : T0;
        out.ladder.assign(r.ladder, r.ladder + r.ladder_len);
        for (double& e : out.ladder) e *= scale;
    }
    return out;
}

becrad::RegulatorSpec reg_or_none(const br_regulator* r, double T0) {
    return r == nullptr ? becrad::RegulatorSpec::none_spec() : to_natural(*r, T0);
}

void to_c(const becrad::PhaseIntegral& I, double T0, br_phase_integral* out) {
    out->value_re = I.value.real() * T0;
    out->value_im = I.value.imag() * T0;
    out->error = I.error * T0;
    out->provenance = static_cast<int>(I.provenance);
    out->flag = static_cast<int>(I.flag);
    out->flag_coefficient = I.flag_coefficient;
}

void to_c(const becrad::SpectrumPoint& p, const becrad::UnitScales& u,
          br_spectrum_point* out) {
    out->k = p.k / u.L0;
    out->theta = p.theta;
    out->omega = p.omega / u.T0;
    out->dn_dk_domega = p.dn_dk_domega * u.L0;
    out->dE_dk_domega = p.dE_dk_domega * u.L0 * u.E0;
    out->provenance = static_cast<int>(p.provenance);
}

}  // namespace

extern "C" {

const char* br_version(void) { return BECRAD_VERSION_STRING; }

const char* br_last_error(void) { return g_error.c_str(); }

br_status br_condensate_create(const br_condensate_params* params, br_condensate** out) {
    return wrap([&] {
        need(params, "params");
        need(out, "out");
        becrad::CondensateParams p;
        p.mass = params->mass;
        p.coupling = params->coupling;
        p.density = params->density;
        p.impurity_coupling = params->impurity_coupling;
        p.hbar = params->hbar > 0.0 ? params->hbar : 1.0;
        if (params->particle_number > 0.0) p.particle_number = params->particle_number;
        if (params->box_length > 0.0) p.box_length = params->box_length;
        *out = new br_condensate{becrad::Condensate(p)};
    });
}

void br_condensate_destroy(br_condensate* cond) { delete cond; }

br_status br_condensate_unit_scales(const br_condensate* cond, br_unit_scales* out) {
    return wrap([&] {
        need(cond, "cond");
        need(out, "out");
        const becrad::UnitScales& u = cond->impl.scales().units;
        out->L0 = u.L0;
        out->T0 = u.T0;
        out->E0 = u.E0;
    });
}

br_status br_condensate_derived(const br_condensate* cond, br_derived_scales* out) {
    return wrap([&] {
        need(cond, "cond");
        need(out, "out");
        const becrad::DerivedScales& s = cond->impl.scales();
        out->sound_speed = s.c;
        out->coherence_length = s.xi;
        out->scattering_length = s.a_s;
        out->diluteness = cond->impl.diluteness();
        out->diluteness_warning = cond->impl.diluteness_warning() ? 1 : 0;
    });
}

br_status br_condensate_mode(const br_condensate* cond, double k, double theta, br_mode* out) {
    return wrap([&] {
        need(cond, "cond");
        need(out, "out");
        const becrad::UnitScales& u = cond->impl.scales().units;
        const becrad::Mode m = cond->impl.make_mode(k, theta);
        out->k = m.k / u.L0;
        out->theta = m.theta;
        out->omega = m.omega / u.T0;
        out->epsilon = m.eps * u.E0;
        out->kz = m.kz() / u.L0;
    });
}

br_status br_trajectory_constant_velocity(double v, br_trajectory** out) {
    return wrap([&] {
        need(out, "out");
        *out = new br_trajectory{becrad::Trajectory(becrad::ConstantVelocity{v})};
    });
}

br_status br_trajectory_exponential_decay(double zeta0, double gamma0, br_trajectory** out) {
    return wrap([&] {
        need(out, "out");
        *out = new br_trajectory{becrad::Trajectory(becrad::ExponentialDecay{zeta0, gamma0})};
    });
}

br_status br_trajectory_uniform_acceleration(double a, double c, br_trajectory** out) {
    return wrap([&] {
        need(out, "out");
        *out =
            new br_trajectory{becrad::Trajectory(becrad::UniformAccelerationRel{a, c})};
    });
}

br_status br_trajectory_sampled(const double* t, const double* z, size_t n, int order,
                                br_trajectory** out) {
    return wrap([&] {
        need(out, "out");
        becrad::require(n == 0 || (t != nullptr && z != nullptr),
                        becrad::Status::invalid_argument,
                        "sampled trajectory arrays must not be null");
        becrad::Sampled s;
        s.t.assign(t, t + n);
        s.z.assign(z, z + n);
        s.order = order;
        *out = new br_trajectory{becrad::Trajectory(std::move(s))};
    });
}

br_status br_trajectory_sampled_csv(const char* path, int order, br_trajectory** out) {
    return wrap([&] {
        need(path, "path");
        need(out, "out");
        *out = new br_trajectory{becrad::load_sampled_csv(path, order)};
    });
}

void br_trajectory_destroy(br_trajectory* traj) { delete traj; }

br_status br_trajectory_position(const br_trajectory* traj, double t, double* out) {
    return wrap([&] {
        need(traj, "traj");
        need(out, "out");
        *out = traj->impl.position(t);
    });
}

br_status br_trajectory_speed(const br_trajectory* traj, double t, double* out) {
    return wrap([&] {
        need(traj, "traj");
        need(out, "out");
        *out = traj->impl.speed(t);
    });
}

br_status br_trajectory_classical_potential(const br_trajectory* traj, double zeta,
                                            double m_imp, double* out) {
    return wrap([&] {
        need(traj, "traj");
        need(out, "out");
        *out = traj->impl.classical_potential(zeta, m_imp);
    });
}

br_status br_trajectory_translated(const br_trajectory* traj, double zeta_c,
                                   br_trajectory** out) {
    return wrap([&] {
        need(traj, "traj");
        need(out, "out");
        *out = new br_trajectory{traj->impl.translated(zeta_c)};
    });
}

br_status br_trajectory_diagnostics_get(const br_trajectory* traj, double t_lo, double t_hi,
                                        double hbar, br_trajectory_diagnostics* out) {
    return wrap([&] {
        need(traj, "traj");
        need(out, "out");
        const auto d = traj->impl.diagnostics(t_lo, t_hi, 513, hbar > 0.0 ? hbar : 1.0);
        out->max_speed = d.max_speed;
        out->has_gamma_char = d.has_gamma_char ? 1 : 0;
        out->gamma_char = d.gamma_char;
        out->has_l_a = d.has_l_a ? 1 : 0;
        out->l_a = d.l_a;
        out->t_unruh = d.t_unruh;
        out->t_accel = d.t_accel;
    });
}

br_status br_phase_integral_numeric(const br_condensate* cond, const br_trajectory* traj,
                                    double k, double theta, const br_window* window,
                                    const br_regulator* reg, double tol,
                                    br_phase_integral* out) {
    return wrap([&] {
        need(cond, "cond");
        need(traj, "traj");
        need(window, "window");
        need(out, "out");
        const becrad::UnitScales& u = cond->impl.scales().units;
        const becrad::Mode m = cond->impl.make_mode(k, theta);
        const becrad::Trajectory nat = traj->impl.rescaled(u.L0, u.T0);
        const becrad::PhaseIntegral I = becrad::integrate_numeric(
            m, nat, to_natural(*window, u.T0), reg_or_none(reg, u.T0),
            tol > 0.0 ? tol : 1e-9);
        to_c(I, u.T0, out);
    });
}

br_status br_phase_integral_closed_exponential(const br_condensate* cond, double zeta0,
                                               double gamma0, double k, double theta,
                                               const br_window* window,
                                               br_phase_integral* out) {
    return wrap([&] {
        need(cond, "cond");
        need(window, "window");
        need(out, "out");
        const becrad::UnitScales& u = cond->impl.scales().units;
        const becrad::Mode m = cond->impl.make_mode(k, theta);
        const becrad::PhaseIntegral I = becrad::integrate_closed_exponential(
            m, zeta0 / u.L0, gamma0 * u.T0, to_natural(*window, u.T0));
        to_c(I, u.T0, out);
    });
}

br_status br_phase_integral_closed_uniform_acceleration(const br_condensate* cond, double a,
                                                        double k, double theta,
                                                        br_phase_integral* out) {
    return wrap([&] {
        need(cond, "cond");
        need(out, "out");
        const becrad::UnitScales& u = cond->impl.scales().units;
        const becrad::Mode m = cond->impl.make_mode(k, theta);
        // natural acceleration: a_hat = a T0^2 / L0
        const becrad::PhaseIntegral I = becrad::integrate_closed_uniform_acceleration(
            m, a * u.T0 * u.T0 / u.L0);
        to_c(I, u.T0, out);
    });
}

br_status br_phase_integral_extrapolate(const double* eps, const br_phase_integral* values,
                                        size_t n, int order, br_phase_integral* out) {
    return wrap([&] {
        need(out, "out");
        becrad::require(n == 0 || (eps != nullptr && values != nullptr),
                        becrad::Status::invalid_argument,
                        "extrapolation arrays must not be null");
        // the ladder is unit-agnostic: scaling eps or value does not move eps = 0
        std::vector<std::pair<double, becrad::PhaseIntegral>> ladder;
        ladder.reserve(n);
        for (size_t i = 0; i < n; ++i) {
            becrad::PhaseIntegral I;
            I.value = becrad::Complex(values[i].value_re, values[i].value_im);
            I.error = values[i].error;
            I.provenance = static_cast<becrad::Provenance>(values[i].provenance);
            I.flag = static_cast<becrad::DistributionFlag>(values[i].flag);
            I.flag_coefficient = values[i].flag_coefficient;
            ladder.emplace_back(eps[i], I);
        }
        to_c(becrad::extrapolate_regulator(ladder, order), 1.0, out);
    });
}

br_status br_spectrum_occupation(const br_condensate* cond, double k, double theta,
                                 const br_phase_integral* integral, br_spectrum_point* out) {
    return wrap([&] {
        need(cond, "cond");
        need(integral, "integral");
        need(out, "out");
        const becrad::UnitScales& u = cond->impl.scales().units;
        const becrad::Mode m = cond->impl.make_mode(k, theta);
        becrad::PhaseIntegral I;
        I.value = becrad::Complex(integral->value_re, integral->value_im) / u.T0;
        I.error = integral->error / u.T0;
        I.provenance = static_cast<becrad::Provenance>(integral->provenance);
        I.flag = static_cast<becrad::DistributionFlag>(integral->flag);
        I.flag_coefficient = integral->flag_coefficient;
        to_c(becrad::occupation_density(cond->impl, m, I), u, out);
    });
}

br_status br_spectrum_exponential(const br_condensate* cond, double gamma0, double k,
                                  double theta, int hemisphere, br_spectrum_point* out) {
    return wrap([&] {
        need(cond, "cond");
        need(out, "out");
        becrad::require(hemisphere == 1 || hemisphere == -1,
                        becrad::Status::invalid_argument,
                        "hemisphere must be +1 (suppressed) or -1 (enhanced)");
        const becrad::UnitScales& u = cond->impl.scales().units;
        const auto p = becrad::exponential_spectrum(
            cond->impl, gamma0 * u.T0, k * u.L0, theta,
            hemisphere == 1 ? becrad::Hemisphere::upper : becrad::Hemisphere::lower);
        to_c(p, u, out);
    });
}

br_status br_spectrum_exponential_windowed(const br_condensate* cond, double gamma0,
                                           double zeta0, const br_window* window, double k,
                                           double theta, br_spectrum_point* out) {
    return wrap([&] {
        need(cond, "cond");
        need(window, "window");
        need(out, "out");
        const becrad::UnitScales& u = cond->impl.scales().units;
        const auto p = becrad::exponential_spectrum_windowed(
            cond->impl, gamma0 * u.T0, zeta0 / u.L0, to_natural(*window, u.T0), k * u.L0,
            theta);
        to_c(p, u, out);
    });
}

br_status br_spectrum_uniform_acceleration(const br_condensate* cond, double a, double k,
                                           double theta, br_spectrum_point* out) {
    return wrap([&] {
        need(cond, "cond");
        need(out, "out");
        const becrad::UnitScales& u = cond->impl.scales().units;
        const auto p = becrad::uniform_acceleration_spectrum(
            cond->impl, a * u.T0 * u.T0 / u.L0, k * u.L0, theta);
        to_c(p, u, out);
    });
}

br_status br_spectrum_asymptotic(const br_condensate* cond, int law, double parameter,
                                 double k, double theta, br_spectrum_point* out) {
    return wrap([&] {
        need(cond, "cond");
        need(out, "out");
        const becrad::UnitScales& u = cond->impl.scales().units;
        const double kh = k * u.L0;
        becrad::SpectrumPoint p;
        switch (law) {
            case BR_ASY_IR_EXPONENTIAL:
                p = becrad::asymptotic_ir_exponential(cond->impl, kh, theta);
                break;
            case BR_ASY_UV_EXPONENTIAL_LOWER:
                p = becrad::asymptotic_uv_exponential_lower(cond->impl, parameter * u.T0,
                                                            kh, theta);
                break;
            case BR_ASY_IR_WINDOWED:
                p = becrad::asymptotic_ir_windowed(cond->impl, parameter / u.T0, kh, theta);
                break;
            case BR_ASY_IR_UNIFORM:
                p = becrad::asymptotic_ir_uniform(cond->impl,
                                                  parameter * u.T0 * u.T0 / u.L0, kh, theta);
                break;
            case BR_ASY_UV_UNIFORM:
                p = becrad::asymptotic_uv_uniform(cond->impl,
                                                  parameter * u.T0 * u.T0 / u.L0, kh, theta);
                break;
            default:
                becrad::fail(becrad::Status::invalid_argument,
                             "unknown asymptotic law selector");
        }
        to_c(p, u, out);
    });
}

br_status br_total_energy(const br_condensate* cond, const br_trajectory* traj,
                          const br_window* window, const br_regulator* reg, double k_max,
                          const br_energy_grid* grid, br_energy_report* out) {
    return wrap([&] {
        need(cond, "cond");
        need(traj, "traj");
        need(window, "window");
        need(out, "out");
        const becrad::UnitScales& u = cond->impl.scales().units;
        becrad::EnergyGrid g;
        if (grid != nullptr) {
            if (grid->n_theta > 0) g.n_theta = grid->n_theta;
            if (grid->k_min > 0.0) g.k_min = grid->k_min * u.L0;
            if (grid->tol > 0.0) g.tol = grid->tol;
        }
        const becrad::Trajectory nat = traj->impl.rescaled(u.L0, u.T0);
        const becrad::EnergyReport r =
            becrad::total_energy(cond->impl, nat, to_natural(*window, u.T0),
                                 reg_or_none(reg, u.T0), k_max * u.L0, g);
        out->total = r.total * u.E0;
        out->upper = r.upper * u.E0;
        out->lower = r.lower * u.E0;
        out->k_max = r.k_max / u.L0;
        out->truncation_error = r.truncation_error * u.E0;
        out->divergent = r.divergent ? 1 : 0;
        out->tail_exponent = r.tail_exponent;
    });
}

br_status br_cherenkov_rate(const br_condensate* cond, double v, double k_max, double* out) {
    return wrap([&] {
        need(cond, "cond");
        need(out, "out");
        const becrad::UnitScales& u = cond->impl.scales().units;
        const double rate_nat =
            becrad::cherenkov_rate(cond->impl, v * u.T0 / u.L0, k_max * u.L0);
        *out = rate_nat * u.E0 / u.T0;
    });
}

br_status br_depletion(const br_condensate* cond, const br_trajectory* traj,
                       const br_window* window, const br_regulator* reg, double k_max,
                       double t, br_depletion_report* out) {
    return wrap([&] {
        need(cond, "cond");
        need(traj, "traj");
        need(window, "window");
        need(out, "out");
        const becrad::UnitScales& u = cond->impl.scales().units;
        const becrad::Trajectory nat = traj->impl.rescaled(u.L0, u.T0);
        const becrad::DepletionReport r =
            becrad::depletion(cond->impl, nat, to_natural(*window, u.T0),
                              reg_or_none(reg, u.T0), k_max * u.L0, t / u.T0);
        out->leading = r.leading;
        out->correction = r.correction;
        out->modes_used = r.modes_used;
        out->box_length = r.box_length;
        out->particle_number = r.particle_number;
        out->k_max = r.k_max / u.L0;
        out->tail_estimate = r.tail_estimate;
    });
}

br_status br_validate_run(double k1_perturbation, unsigned long long seed, char** json_out,
                          int* all_pass) {
    return wrap([&] {
        need(json_out, "json_out");
        need(all_pass, "all_pass");
        becrad::ValidationOptions opt;
        opt.k1_perturbation = k1_perturbation;
        opt.seed = seed;
        const becrad::ValidationReport rep = becrad::run_validation(opt);
        const std::string json = rep.to_json();
        char* buf = static_cast<char*>(std::malloc(json.size() + 1));
        becrad::require(buf != nullptr, becrad::Status::numerical_failure,
                        "out of memory serializing the validation report");
        std::memcpy(buf, json.c_str(), json.size() + 1);
        *json_out = buf;
        *all_pass = rep.all_pass() ? 1 : 0;
    });
}

void br_string_free(char* s) { std::free(s); }

}  // extern "C"
