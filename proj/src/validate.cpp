#include "validate.hpp"

#include <cmath>
#include <complex>
#include <cstdio>
#include <functional>
#include <limits>
#include <sstream>

#include "condensate.hpp"
#include "phase_integral.hpp"
#include "quadrature.hpp"
#include "specfun.hpp"
#include "spectrum.hpp"
#include "trajectory.hpp"

namespace becrad {
namespace {

constexpr double TWO_PI = 6.2831853071795864769;
constexpr double TWO_PI_CUBED = 248.05021344239856140;

double rel_diff(double a, double b) {
    const double scale = std::max(std::abs(a), std::abs(b));
    return scale == 0.0 ? 0.0 : std::abs(a - b) / scale;
}

double rel_diff(Complex a, Complex b) {
    const double scale = std::max(std::abs(a), std::abs(b));
    return scale == 0.0 ? 0.0 : std::abs(a - b) / scale;
}

Condensate natural_condensate() {
    CondensateParams p;
    p.mass = 1.0;
    p.coupling = 1.0;
    p.density = 1.0;
    p.impurity_coupling = 0.3;
    return Condensate(p);
}

void fmt_double(std::string& out, double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    out += buf;
}

void fmt_string(std::string& out, const std::string& s) {
    out += '"';
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    out += '"';
}

struct Runner {
    ValidationReport report;

    // run `body` to get the measured deviation; harness errors count as failures
    void check(const std::string& name, double tolerance, const std::string& detail,
               const std::function<double()>& body) {
        ValidationCheck c;
        c.name = name;
        c.tolerance = tolerance;
        c.detail = detail;
        try {
            c.measured = body();
            c.pass = c.measured <= tolerance;
        } catch (const Error& e) {
            c.measured = std::numeric_limits<double>::infinity();
            c.pass = false;
            c.detail += " [raised: ";
            c.detail += e.what();
            c.detail += "]";
        }
        report.checks.push_back(std::move(c));
    }
};

}  // namespace

bool ValidationReport::all_pass() const {
    for (const auto& c : checks)
        if (!c.pass) return false;
    return true;
}

std::string ValidationReport::to_json() const {
    std::string out = "{\n  \"all_pass\": ";
    out += all_pass() ? "true" : "false";
    out += ",\n  \"checks\": [\n";
    for (std::size_t i = 0; i < checks.size(); ++i) {
        const auto& c = checks[i];
        out += "    {\"name\": ";
        fmt_string(out, c.name);
        out += ", \"measured\": ";
        fmt_double(out, c.measured);
        out += ", \"tolerance\": ";
        fmt_double(out, c.tolerance);
        out += ", \"pass\": ";
        out += c.pass ? "true" : "false";
        out += ", \"detail\": ";
        fmt_string(out, c.detail);
        out += i + 1 < checks.size() ? "},\n" : "}\n";
    }
    out += "  ],\n  \"diagnostics\": [\n";
    for (std::size_t i = 0; i < diagnostics.size(); ++i) {
        const auto& d = diagnostics[i];
        out += "    {\"name\": ";
        fmt_string(out, d.name);
        out += ", \"value\": ";
        fmt_double(out, d.value);
        out += ", \"detail\": ";
        fmt_string(out, d.detail);
        out += i + 1 < diagnostics.size() ? "},\n" : "}\n";
    }
    out += "  ]\n}\n";
    return out;
}

ValidationReport run_validation(const ValidationOptions& options) {
    Runner r;
    const Condensate cond = natural_condensate();
    const double s0 = cond.sigma0();

    r.check("gamma_reflection", 1e-9,
            "|Gamma(i x)|^2 x sinh(pi x) = pi on a log grid x in [0.05, 20]", [&] {
                double worst = 0.0;
                for (int i = 0; i < 40; ++i) {
                    const double x = 0.05 * std::pow(400.0, i / 39.0);
                    const double g2 =
                        std::exp(2.0 * specfun::log_gamma(Complex(0.0, x)).real());
                    worst = std::max(worst, std::abs(g2 * x * std::sinh(M_PI * x) / M_PI - 1.0));
                }
                return worst;
            });

    r.check("gamma_factorial", 1e-12, "Gamma(5) = 24", [&] {
        return rel_diff(std::exp(specfun::log_gamma(Complex(5.0, 0.0)).real()), 24.0);
    });

    r.check("incomplete_gamma_recurrence", 1e-9,
            "gamma(s+1, z) = s gamma(s, z) - z^s e^{-z} on a complex grid", [&] {
                const Complex ss[] = {{0.6, 0.3}, {1.5, -0.8}, {0.0, 1.0}, {-0.4, 0.7}};
                const Complex zs[] = {{0.5, 0.0}, {1.3, 2.0}, {0.0, 3.0}, {4.0, -1.0}};
                double worst = 0.0;
                for (const Complex& s : ss)
                    for (const Complex& z : zs) {
                        const Complex lhs = specfun::lower_incomplete_gamma(s + 1.0, z);
                        const Complex rhs = s * specfun::lower_incomplete_gamma(s, z) -
                                            std::exp(s * std::log(z) - z);
                        worst = std::max(worst, rel_diff(lhs, rhs));
                    }
                return worst;
            });

    r.check("incomplete_gamma_quadrature", 1e-8,
            "gamma(s, z) = z^s int_0^1 u^{s-1} e^{-z u} du against direct quadrature", [&] {
                const Complex ss[] = {{1.0, 0.0}, {2.3, 1.1}, {0.8, -2.0}};
                const Complex zs[] = {{1.5, 0.0}, {0.0, 1.3}, {2.0, 2.0}};
                double worst = 0.0;
                for (const Complex& s : ss)
                    for (const Complex& z : zs) {
                        auto f = [&](double u) -> Complex {
                            return std::exp((s - 1.0) * std::log(u) - z * u);
                        };
                        auto rate = [&](double u) {
                            return std::abs(s.imag()) / std::max(u, 1e-12) + std::abs(z);
                        };
                        const Complex integral =
                            quad::adaptive(f, 1e-14, 1.0, 1e-13, rate).value;
                        const Complex direct = std::exp(s * std::log(z)) * integral;
                        worst = std::max(
                            worst, rel_diff(direct, specfun::lower_incomplete_gamma(s, z)));
                    }
                return worst;
            });

    r.check("bessel_k1_integral", 1e-9,
            "K1(x) = int_0^inf e^{-x cosh t} cosh t dt against direct quadrature "
            "(canary target: receives the injected K1 perturbation)",
            [&] {
                const double xs[] = {0.5, 1.0, 3.0, 10.0};
                double worst = 0.0;
                for (double x : xs) {
                    const double T = std::acosh(720.0 / x);
                    auto f = [&](double t) -> Complex {
                        return std::exp(-x * std::cosh(t)) * std::cosh(t);
                    };
                    auto rate = [](double) { return 1.0; };
                    const double integral =
                        quad::adaptive(f, 0.0, T, 1e-16 + 1e-13 * specfun::bessel_k1(x), rate)
                            .value.real();
                    const double lib = specfun::bessel_k1(x) * (1.0 + options.k1_perturbation);
                    worst = std::max(worst, rel_diff(integral, lib));
                }
                return worst;
            });

    r.check("exponential_closed_vs_numeric", 1e-6,
            "windowed decay phase integral: incomplete-gamma closed form against the "
            "numeric route",
            [&] {
                const Trajectory traj(ExponentialDecay{1.0, 1.0});
                const Window w = Window::finite(-1.5, 2.0);
                double worst = 0.0;
                for (double k : {0.5, 2.0})
                    for (double th : {0.6, 2.3}) {
                        const Mode m = cond.make_mode_natural(k, th);
                        const PhaseIntegral closed =
                            integrate_closed_exponential(m, 1.0, 1.0, w);
                        const PhaseIntegral num = integrate_numeric(
                            m, traj, w, RegulatorSpec::none_spec(), 1e-10);
                        worst = std::max(worst, rel_diff(closed.value, num.value));
                    }
                return worst;
            });

    r.check("exponential_full_line_planck_identity", 1e-10,
            "|closed full-line integral|^2 equals 2 pi / (omega gamma0) times the "
            "occupation factor",
            [&] {
                double worst = 0.0;
                for (double k : {0.4, 1.2, 2.5})
                    for (double th : {0.7, 2.6}) {
                        const Mode m = cond.make_mode_natural(k, th);
                        const PhaseIntegral closed =
                            integrate_closed_exponential(m, 1.0, 1.0, Window::full_line());
                        const double a2 = std::norm(closed.value);
                        const double y = TWO_PI * m.omega;
                        const double f = m.kz() > 0.0 ? 1.0 / std::expm1(y)
                                                      : -1.0 / std::expm1(-y);
                        worst = std::max(worst, rel_diff(a2, TWO_PI / m.omega * f));
                    }
                return worst;
            });

    r.check("exponential_regulated_ladder", 1e-2,
            "full-line closed value against the regulator-extrapolated numeric route",
            [&] {
                const Trajectory traj(ExponentialDecay{1.0, 1.0});
                const Mode m = cond.make_mode_natural(0.9, 0.8);
                const PhaseIntegral closed =
                    integrate_closed_exponential(m, 1.0, 1.0, Window::full_line());
                const PhaseIntegral num =
                    integrate_numeric(m, traj, Window::full_line(),
                                      RegulatorSpec::auto_spec(RegulatorKind::exponential),
                                      1e-9);
                return rel_diff(closed.value, num.value);
            });

    r.check("hemisphere_difference_identity", 1e-12,
            "|I_enhanced|^2 - |I_suppressed|^2 = 2 pi / (omega gamma0) for the full-line "
            "decay spectrum",
            [&] {
                const double G = 0.7;
                double worst = 0.0;
                for (double k : {0.3, 1.0, 2.2}) {
                    const Mode m = cond.make_mode_natural(k, 0.4);
                    const double pref =
                        s0 * (m.eps / m.omega) * k * k / TWO_PI_CUBED;
                    const double up =
                        exponential_spectrum(cond, G, k, 0.4, Hemisphere::upper).dn_dk_domega;
                    const double lo =
                        exponential_spectrum(cond, G, k, 0.4, Hemisphere::lower).dn_dk_domega;
                    const double diff = (lo - up) / pref;
                    worst = std::max(worst, rel_diff(diff, TWO_PI / (m.omega * G)));
                }
                return worst;
            });

    r.check("hemisphere_ratio", 1e-12,
            "suppressed / enhanced = e^{-2 pi omega / gamma0} for the full-line decay "
            "spectrum",
            [&] {
                const double G = 1.3;
                double worst = 0.0;
                for (double k : {0.3, 1.0, 2.2}) {
                    const Mode m = cond.make_mode_natural(k, 1.1);
                    const double up =
                        exponential_spectrum(cond, G, k, 1.1, Hemisphere::upper).dn_dk_domega;
                    const double lo =
                        exponential_spectrum(cond, G, k, 1.1, Hemisphere::lower).dn_dk_domega;
                    worst = std::max(
                        worst, rel_diff(up / lo, std::exp(-TWO_PI * m.omega / G)));
                }
                return worst;
            });

    r.check("uniform_closed_vs_numeric", 1e-5,
            "hyperbolic-trajectory phase integral: K1 closed form against the "
            "regulator-extrapolated numeric route",
            [&] {
                const Trajectory traj(UniformAccelerationRel{1.0, 1.0});
                double worst = 0.0;
                for (double k : {0.5, 2.0})
                    for (double th : {0.7, 2.0}) {
                        const Mode m = cond.make_mode_natural(k, th);
                        const PhaseIntegral closed =
                            integrate_closed_uniform_acceleration(m, 1.0);
                        const PhaseIntegral num = integrate_numeric(
                            m, traj, Window::full_line(),
                            RegulatorSpec::auto_spec(RegulatorKind::gaussian), 1e-9);
                        worst = std::max(worst, rel_diff(closed.value, num.value));
                    }
                return worst;
            });

    r.check("delta_remnant_suppression", 0.0,
            "k_z = 0 modes emit exactly zero: transverse decay spectrum and hyperbolic "
            "spectrum at theta = pi/2",
            [&] {
                const double ed = exponential_spectrum(cond, 1.0, 1.3, M_PI_2,
                                                       Hemisphere::upper)
                                      .dn_dk_domega;
                const double ua =
                    uniform_acceleration_spectrum(cond, 1.0, 1.3, M_PI_2).dn_dk_domega;
                return std::abs(ed) + std::abs(ua);
            });

    r.check("ir_exponential_fit", 0.03,
            "full-line decay spectrum is linear in k in the infrared", [&] {
                std::vector<double> ks, dn;
                for (int i = 0; i < 9; ++i) {
                    const double k = 1e-4 * std::pow(10.0, i / 8.0);
                    ks.push_back(k);
                    dn.push_back(exponential_spectrum(cond, 1.0, k, 0.9, Hemisphere::lower)
                                     .dn_dk_domega);
                }
                return std::abs(loglog_slope(ks, dn) - 1.0);
            });

    r.check("ir_windowed_fit", 0.05, "windowed decay spectrum follows k^3 in the infrared",
            [&] {
                const Window w = Window::finite(0.0, 2.0);
                std::vector<double> ks, dn;
                for (int i = 0; i < 9; ++i) {
                    const double k = 1e-3 * std::pow(10.0, i / 8.0);
                    ks.push_back(k);
                    dn.push_back(exponential_spectrum_windowed(cond, 1.0, 1.0, w, k, 0.9)
                                     .dn_dk_domega);
                }
                return std::abs(loglog_slope(ks, dn) - 3.0);
            });

    r.check("uv_uniform_fit", 0.02,
            "hyperbolic spectrum: ln dE/dk dOmega falls like -k^2/a at large k", [&] {
                const double a = 0.5;
                std::vector<double> k2, ln_de;
                for (int i = 0; i < 9; ++i) {
                    const double k = 6.0 + 6.0 * i / 8.0;
                    k2.push_back(k * k);
                    ln_de.push_back(std::log(
                        uniform_acceleration_spectrum(cond, a, k, M_PI / 4.0).dE_dk_domega));
                }
                const double slope = linear_fit(k2, ln_de).slope;
                return std::abs(slope * a + 1.0);  // relative deviation from -1/a
            });

    r.check("cherenkov_monotone", 1e-15,
            "supersonic emission rate grows monotonically with speed", [&] {
                double worst = 0.0;
                double prev = cherenkov_rate(cond, 1.0, 50.0);
                for (int i = 1; i <= 40; ++i) {
                    const double v = 1.0 + 2.0 * i / 40.0;
                    const double cur = cherenkov_rate(cond, v, 50.0);
                    worst = std::max(worst, prev - cur);
                    prev = cur;
                }
                return worst;
            });

    r.check("translation_invariance", 1e-12,
            "|I_k| from the numeric route is unchanged by a rigid trajectory shift", [&] {
                const Trajectory traj(ConstantVelocity{0.4});
                const Trajectory moved = traj.translated(3.7);
                const Window w = Window::finite(0.0, 5.0);
                const Mode m = cond.make_mode_natural(1.3, 1.0);
                const double a = std::abs(
                    integrate_numeric(m, traj, w, RegulatorSpec::none_spec(), 1e-11).value);
                const double b = std::abs(
                    integrate_numeric(m, moved, w, RegulatorSpec::none_spec(), 1e-11).value);
                return rel_diff(a, b);
            });

    r.check("depletion_leading_term", 1e-12,
            "switched-off impurity: depletion reduces to (8/3) sqrt(n a_s^3 / pi)", [&] {
                CondensateParams p;
                p.mass = 1.0;
                p.coupling = 1.0;
                p.density = 1.0;
                p.impurity_coupling = 0.0;
                p.particle_number = 512.0;
                p.box_length = 8.0;
                const Condensate boxed(p);
                const Trajectory traj(ExponentialDecay{1.0, 1.0});
                const DepletionReport rep =
                    depletion(boxed, traj, Window::finite(0.0, 2.0),
                              RegulatorSpec::none_spec(), 2.0, 2.0);
                const double expected =
                    (8.0 / 3.0) * std::sqrt(boxed.diluteness() / M_PI);
                return std::abs(rep.correction) + rel_diff(rep.leading, expected);
            });

    // Diagnostic: finite-ladder extrapolations remember the regulator shape.
    // Exponential and gaussian ladders on the full-line decay integral land
    // within a fraction of a percent of the closed form, yet farther apart
    // than their combined internal error estimates. Reported, never failing.
    {
        ValidationDiagnostic d;
        d.name = "regulator_dependence_exponential_line";
        const Trajectory traj(ExponentialDecay{1.0, 1.0});
        const Mode m = cond.make_mode_natural(1.0, 3.0 * M_PI / 4.0);
        try {
            const PhaseIntegral ie =
                integrate_numeric(m, traj, Window::full_line(),
                                  RegulatorSpec::auto_spec(RegulatorKind::exponential), 1e-9);
            const PhaseIntegral ig =
                integrate_numeric(m, traj, Window::full_line(),
                                  RegulatorSpec::auto_spec(RegulatorKind::gaussian), 1e-9);
            const PhaseIntegral closed =
                integrate_closed_exponential(m, 1.0, 1.0, Window::full_line());
            const double diff = std::abs(ie.value - ig.value);
            const double bars = ie.error + ig.error;
            d.value = bars > 0.0 ? diff / bars : std::numeric_limits<double>::infinity();
            std::ostringstream os;
            os << "enhanced-branch mode k = 1, theta = 3pi/4: |I_exp| = " << std::abs(ie.value)
               << " +- " << ie.error << ", |I_gauss| = " << std::abs(ig.value) << " +- "
               << ig.error << ", closed |I| = " << std::abs(closed.value)
               << "; the extrapolated values differ by " << diff
               << " (ratio to combined error bars: " << d.value
               << "), so the regulated sum keeps a regulator imprint at finite order";
            d.detail = os.str();
        } catch (const Error& e) {
            d.value = std::numeric_limits<double>::quiet_NaN();
            d.detail = std::string("probe raised: ") + e.what();
        }
        r.report.diagnostics.push_back(std::move(d));
    }

    // Diagnostic: on the Cherenkov resonance the regulated integral grows like
    // 1/eps; the spread across the ladder is the physics signal that a steady
    // emission line has no regulated limit. Reported, never failing.
    {
        ValidationDiagnostic d;
        d.name = "regulator_dependence_on_resonance";
        const Trajectory traj(ConstantVelocity{2.0});
        const Mode probe = cond.make_mode_natural(1.0, 0.1);
        const double cth = probe.omega / (probe.k * 2.0);
        const Mode m = cond.make_mode_natural(1.0, std::acos(cth));
        double v_coarse = 0.0, v_fine = 0.0;
        try {
            RegulatorSpec rung;
            rung.kind = RegulatorKind::exponential;
            rung.ladder = {0.2};
            rung.order = 1;
            v_coarse = std::abs(
                integrate_numeric(m, traj, Window::full_line(), rung, 1e-8).value);
            rung.ladder = {0.1};
            v_fine = std::abs(
                integrate_numeric(m, traj, Window::full_line(), rung, 1e-8).value);
            d.value = v_coarse == 0.0 ? 0.0 : v_fine / v_coarse;
            std::ostringstream os;
            os << "on-resonance supersonic mode: |I| at eps = 0.2 is " << v_coarse
               << ", at eps = 0.1 it is " << v_fine
               << "; the ~2x growth shows the regulated limit does not exist there "
                  "(steady emission line), which extrapolate_regulator reports as a "
                  "failure by design";
            d.detail = os.str();
        } catch (const Error& e) {
            d.value = std::numeric_limits<double>::quiet_NaN();
            d.detail = std::string("probe raised: ") + e.what();
        }
        r.report.diagnostics.push_back(std::move(d));
    }

    return r.report;
}

}  // namespace becrad
