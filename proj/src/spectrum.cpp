#include "spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>
#include <map>
#include <sstream>

#include "quadrature.hpp"
#include "specfun.hpp"

namespace becrad {
namespace {

constexpr double TWO_PI = 6.2831853071795864769;
constexpr double TWO_PI_CUBED = 248.05021344239856140;  // (2 pi)^3

double sq(double v) { return v * v; }

double omega_of(double k) { return k * std::sqrt(1.0 + 0.25 * k * k); }

// hemisphere occupation factors at y = 2 pi omega / gamma0
double factor_suppressed(double y) {
    if (y > 700.0) return 0.0;  // e^y overflows; the factor underflows anyway
    return 1.0 / std::expm1(y);
}
double factor_enhanced(double y) { return -1.0 / std::expm1(-y); }

SpectrumPoint bare_point(double k, double theta, double omega, Provenance prov) {
    SpectrumPoint p;
    p.k = k;
    p.theta = theta;
    p.omega = omega;
    p.provenance = prov;
    return p;
}

void set_density(SpectrumPoint& p, double dn) {
    p.dn_dk_domega = dn;
    p.dE_dk_domega = p.omega * dn;
}

// Integrate g over [k_lo, k_hi] to a relative target; the magnitude is probed
// on a log grid first so the adaptive driver gets an absolute tolerance.
double k_integral(const std::function<double(double)>& g, double k_lo, double k_hi,
                  double tol_rel, double rate_extra) {
    double scale = 0.0;
    const double probe_lo = k_lo > 0.0 ? k_lo : k_hi * 1e-6;
    for (int i = 0; i < 12; ++i) {
        const double f = (i + 0.5) / 12.0;
        const double k = probe_lo * std::pow(k_hi / probe_lo, f);
        scale = std::max(scale, std::abs(g(k)) * k);
    }
    if (scale == 0.0) return 0.0;
    auto rate = [&](double k) { return 4.0 / std::max(k, 1e-300) + rate_extra; };
    return quad::adaptive(g, k_lo, k_hi, tol_rel * scale, rate).value.real();
}

struct TailFit {
    bool fitted = false;
    double slope = 0.0;
    double g_last = 0.0;
};

// log-log slope of the integrand over [k_max/4, k_max]
TailFit fit_tail(const std::function<double(double)>& g, double k_max) {
    const int n = 9;
    std::vector<double> ks(n), gs(n);
    bool positive = true;
    for (int i = 0; i < n; ++i) {
        ks[i] = 0.25 * k_max * std::pow(4.0, i / double(n - 1));
        gs[i] = g(ks[i]);
        if (!(gs[i] > 0.0)) positive = false;
    }
    TailFit t;
    t.g_last = std::max(gs.back(), 0.0);
    if (!positive) return t;
    t.fitted = true;
    t.slope = loglog_slope(ks, gs);
    return t;
}

// Fold a tail fit into the report: decaying faster than 1/k gives a power-law
// remainder estimate, anything else marks the cutoff-dependence.
void apply_tail(EnergyReport& rep, const TailFit& t, double k_max) {
    rep.tail_exponent = t.fitted ? t.slope : 0.0;
    if (t.fitted && t.slope >= -1.0) {
        rep.divergent = true;
        rep.truncation_error += t.g_last * k_max;
    } else if (t.fitted) {
        rep.truncation_error += t.g_last * k_max / (-1.0 - t.slope);
    } else {
        rep.truncation_error += t.g_last * k_max;
    }
}

void check_grid(const EnergyGrid& grid, double k_max) {
    require(std::isfinite(k_max) && k_max > 0.0, Status::invalid_argument,
            "total_energy: k_max must be finite and > 0");
    require(grid.n_theta >= 2 && grid.n_theta <= 512, Status::invalid_argument,
            "total_energy: n_theta must lie in [2, 512]");
    require(std::isfinite(grid.tol) && grid.tol > 0.0 && grid.tol <= 0.1,
            Status::invalid_argument, "total_energy: tol must lie in (0, 0.1]");
    require(std::isfinite(grid.k_min) && grid.k_min >= 0.0 && grid.k_min < k_max,
            Status::invalid_argument, "total_energy: k_min must lie in [0, k_max)");
}

void check_window_sane(const Window& w) {
    if (!w.infinite_i)
        require(std::isfinite(w.t_i), Status::invalid_argument, "window: t_i must be finite");
    if (!w.infinite_f)
        require(std::isfinite(w.t_f), Status::invalid_argument, "window: t_f must be finite");
    if (w.both_finite())
        require(w.t_i < w.t_f, Status::invalid_argument, "window: t_i must precede t_f");
}

}  // namespace

SpectrumPoint occupation_density(const Condensate& cond, const Mode& mode,
                                 const PhaseIntegral& I) {
    require(mode.k > 0.0, Status::invalid_argument, "occupation_density: mode k must be > 0");
    if (I.flag == DistributionFlag::delta_omega)
        require(mode.kz() == 0.0, Status::invalid_argument,
                "occupation_density: the integral carries a delta(omega) remnant, which only "
                "arises for k_z = 0, but the mode has k_z != 0");
    // Flagged remnants live at omega = 0 (delta_omega) or mu = 0 (delta_mu),
    // both excluded for k > 0 modes; x delta(x) = 0 removes them from the
    // density, so only the regular part contributes.
    const double amp2 = std::norm(I.value);
    SpectrumPoint p = bare_point(mode.k, mode.theta, mode.omega, I.provenance);
    set_density(p, cond.sigma0() * (mode.eps / mode.omega) * amp2 * mode.k * mode.k /
                       TWO_PI_CUBED);
    return p;
}

SpectrumPoint exponential_spectrum(const Condensate& cond, double gamma0, double k,
                                   double theta, Hemisphere hemisphere) {
    require(std::isfinite(gamma0) && gamma0 > 0.0, Status::invalid_argument,
            "exponential_spectrum: gamma0 must be > 0");
    const Mode m = cond.make_mode_natural(k, theta);
    SpectrumPoint p = bare_point(k, theta, m.omega, Provenance::closed_form);
    // Transverse modes never couple: k_z = 0 gives exactly zero emission.
    if (m.cos_theta == 0.0) return p;
    // |I|^2 = (2 pi / (omega gamma0)) * occupation factor, decay amplitude
    // taken positive so the upper hemisphere is the suppressed one.
    const double y = TWO_PI * m.omega / gamma0;
    const double f =
        hemisphere == Hemisphere::upper ? factor_suppressed(y) : factor_enhanced(y);
    const double amp2 = TWO_PI / (m.omega * gamma0) * f;
    set_density(p, cond.sigma0() * (m.eps / m.omega) * amp2 * k * k / TWO_PI_CUBED);
    return p;
}

SpectrumPoint exponential_spectrum_windowed(const Condensate& cond, double gamma0,
                                            double zeta0, const Window& window, double k,
                                            double theta) {
    const Mode m = cond.make_mode_natural(k, theta);
    const PhaseIntegral I = integrate_closed_exponential(m, zeta0, gamma0, window);
    return occupation_density(cond, m, I);
}

SpectrumPoint uniform_acceleration_spectrum(const Condensate& cond, double a, double k,
                                            double theta) {
    const Mode m = cond.make_mode_natural(k, theta);
    const PhaseIntegral I = integrate_closed_uniform_acceleration(m, a);
    return occupation_density(cond, m, I);
}

SpectrumPoint asymptotic_ir_exponential(const Condensate& cond, double k, double theta) {
    const Mode m = cond.make_mode_natural(k, theta);
    SpectrumPoint p = bare_point(k, theta, m.omega, Provenance::asymptotic);
    set_density(p, cond.sigma0() * k / (2.0 * TWO_PI_CUBED));
    return p;
}

SpectrumPoint asymptotic_uv_exponential_lower(const Condensate& cond, double gamma0, double k,
                                              double theta) {
    require(std::isfinite(gamma0) && gamma0 > 0.0, Status::invalid_argument,
            "asymptotic_uv_exponential_lower: gamma0 must be > 0");
    const Mode m = cond.make_mode_natural(k, theta);
    SpectrumPoint p = bare_point(k, theta, m.omega, Provenance::asymptotic);
    const double damp = TWO_PI * m.omega / gamma0;
    const double corr = damp > 700.0 ? 0.0 : std::exp(-damp);
    set_density(p, cond.sigma0() / (2.0 * M_PI * M_PI * gamma0) * (1.0 + corr));
    return p;
}

SpectrumPoint asymptotic_ir_windowed(const Condensate& cond, double duration, double k,
                                     double theta) {
    require(std::isfinite(duration) && duration > 0.0, Status::invalid_argument,
            "asymptotic_ir_windowed: duration must be > 0");
    const Mode m = cond.make_mode_natural(k, theta);
    SpectrumPoint p = bare_point(k, theta, m.omega, Provenance::asymptotic);
    set_density(p, cond.sigma0() * duration * duration * k * k * k / (2.0 * TWO_PI_CUBED));
    return p;
}

SpectrumPoint asymptotic_ir_uniform(const Condensate& cond, double a, double k,
                                    double theta) {
    require(std::isfinite(a) && a > 0.0, Status::invalid_argument,
            "asymptotic_ir_uniform: a must be > 0");
    const Mode m = cond.make_mode_natural(k, theta);
    SpectrumPoint p = bare_point(k, theta, m.omega, Provenance::asymptotic);
    const double s2 = sq(std::sin(theta)) + 0.25 * k * k;
    set_density(p, 2.0 * cond.sigma0() * k * sq(m.cos_theta) / (TWO_PI_CUBED * s2 * s2));
    return p;
}

SpectrumPoint asymptotic_uv_uniform(const Condensate& cond, double a, double k,
                                    double theta) {
    require(std::isfinite(a) && a > 0.0, Status::invalid_argument,
            "asymptotic_uv_uniform: a must be > 0");
    const Mode m = cond.make_mode_natural(k, theta);
    SpectrumPoint p = bare_point(k, theta, m.omega, Provenance::asymptotic);
    const double mu = (k / a) * std::sqrt(sq(std::sin(theta)) + 0.25 * k * k);
    const double damp = 2.0 * mu;
    if (damp > 1400.0) return p;  // underflow
    const double dn = cond.sigma0() * (m.eps / m.omega) * TWO_PI * std::pow(k, 4) *
                      sq(m.cos_theta) * std::exp(-damp) /
                      (TWO_PI_CUBED * std::pow(a, 4) * mu * mu * mu);
    set_density(p, dn);
    return p;
}

EnergyReport total_energy(const Condensate& cond, const Trajectory& traj,
                          const Window& window, const RegulatorSpec& reg, double k_max,
                          const EnergyGrid& grid) {
    check_grid(grid, k_max);
    check_window_sane(window);
    EnergyReport rep;
    rep.k_max = k_max;
    const bool full_line = window.infinite_i && window.infinite_f;
    const double s0 = cond.sigma0();

    if (const auto* cv = std::get_if<ConstantVelocity>(&traj.variant())) {
        if (full_line) {
            if (std::abs(cv->v) <= 1.0) return rep;  // subsonic steady motion: exactly zero
            fail(Status::unsupported,
                 "total_energy: supersonic steady motion radiates at a constant rate, not a "
                 "finite energy; use cherenkov_rate");
        }
        // windowed transients fall through to the numeric route
    }

    const auto* ed = std::get_if<ExponentialDecay>(&traj.variant());
    const auto* ua = std::get_if<UniformAccelerationRel>(&traj.variant());

    if (ed && full_line) {
        // theta-independent hemisphere integrands:
        // dE/dk = sigma0 eps k^2 f(2 pi omega / gamma0) / (2 pi omega gamma0)
        const double G = ed->gamma0;
        auto base = [&](double k) {
            if (k <= 0.0) return 0.0;
            return s0 * 0.5 * k * k * k * k / (TWO_PI * omega_of(k) * G);
        };
        auto g_sup = [&](double k) {
            const double b = base(k);
            return b == 0.0 ? 0.0 : b * factor_suppressed(TWO_PI * omega_of(k) / G);
        };
        auto g_enh = [&](double k) {
            const double b = base(k);
            return b == 0.0 ? 0.0 : b * factor_enhanced(TWO_PI * omega_of(k) / G);
        };
        const bool upper_suppressed = ed->zeta0 > 0.0;
        const std::function<double(double)> fs = g_sup, fe = g_enh;
        rep.upper = k_integral(upper_suppressed ? fs : fe, grid.k_min, k_max, grid.tol, 0.0);
        rep.lower = k_integral(upper_suppressed ? fe : fs, grid.k_min, k_max, grid.tol, 0.0);
        rep.total = rep.upper + rep.lower;
        auto g_tot = [&](double k) { return g_sup(k) + g_enh(k); };
        apply_tail(rep, fit_tail(g_tot, k_max), k_max);
        return rep;
    }

    if (ua && full_line) {
        require(std::abs(ua->c - 1.0) <= 1e-9, Status::unsupported,
                "total_energy: the closed hyperbolic-trajectory route needs the trajectory "
                "in natural units (c = 1); rescale it first");
        const double a = ua->a;
        // Angular integral taken in mu = (k/a) sqrt(sin^2 theta + k^2/4), the
        // natural variable of the K1 decay; a fixed cos(theta) grid cannot
        // resolve the forward cone that carries the weak-acceleration limit.
        // dE/dk per hemisphere = sigma0 eps k^2 / (pi^2 a^2) *
        //     int_{k^2/2a}^{omega/a} cos(theta(mu)) K1(mu)^2 / mu dmu
        auto g_hemi = [&](double k) -> double {
            if (k <= 0.0) return 0.0;
            const double mu_lo = 0.5 * k * k / a;
            const double mu_hi = omega_of(k) / a;
            if (mu_lo > 745.0) return 0.0;  // K1 underflows across the whole range
            auto f = [&](double mu) {
                const double c2 = 1.0 + 0.25 * k * k - sq(a * mu / k);
                if (c2 <= 0.0) return 0.0;
                const double k1 = specfun::bessel_k1(mu);
                return std::sqrt(c2) * k1 * k1 / mu;
            };
            const double hi = std::min(mu_hi, 746.0);
            const double fscale = f(mu_lo * 1.0000001);
            if (fscale == 0.0) return 0.0;
            const double tol_abs =
                std::max(1e-290, 0.05 * grid.tol * fscale * std::min(hi - mu_lo, 1.0));
            auto rate = [](double mu) { return 2.0 + 2.0 / std::max(mu, 1e-300); };
            const double J = quad::adaptive(f, mu_lo, hi, tol_abs, rate).value.real();
            return s0 * 0.5 * k * k * k * k * J / (M_PI * M_PI * a * a);
        };
        const double half = k_integral(g_hemi, grid.k_min, k_max, grid.tol, 0.0);
        rep.upper = rep.lower = half;  // cos^2(theta) weight: hemispheres identical
        rep.total = 2.0 * half;
        auto g_tot = [&](double k) { return 2.0 * g_hemi(k); };
        apply_tail(rep, fit_tail(g_tot, k_max), k_max);
        return rep;
    }

    // generic route: Gauss-Legendre in cos(theta) per hemisphere, adaptive in k
    const bool ed_closed = ed != nullptr && !(window.infinite_f && !window.infinite_i);
    const double point_tol = std::max(1e-10, 1e-2 * grid.tol);
    auto point = [&](double k, double theta) -> double {
        const Mode m = cond.make_mode_natural(k, theta);
        // |I|^2 is translation invariant, so the trajectory offset is irrelevant
        const PhaseIntegral I =
            ed_closed ? integrate_closed_exponential(m, ed->zeta0, ed->gamma0, window)
                      : integrate_numeric(m, traj, window, reg, point_tol);
        return occupation_density(cond, m, I).dE_dk_domega;
    };
    std::vector<double> gx, gw;
    quad::gauss_legendre(grid.n_theta, gx, gw);
    auto g_hemi = [&](double k, int sign) -> double {
        double s = 0.0;
        for (std::size_t i = 0; i < gx.size(); ++i) {
            const double u = 0.5 * (gx[i] + 1.0);  // cos(theta) in (0, 1)
            const double th = std::acos(sign > 0 ? u : -u);
            s += 0.5 * gw[i] * point(k, th);
        }
        return TWO_PI * s;
    };
    // numeric phase integrals get slow for omega -> 0; floor the k range and
    // account for the skipped infrared sliver (integrand grows like k there)
    double k_lo = grid.k_min;
    if (!ed_closed && k_lo == 0.0) k_lo = k_max * 1e-6;
    const double rate_extra =
        ed != nullptr ? std::abs(ed->zeta0) : 0.0;  // window-edge oscillation in k
    auto g_up = [&](double k) { return g_hemi(k, +1); };
    auto g_lo = [&](double k) { return g_hemi(k, -1); };
    rep.upper = k_integral(g_up, k_lo, k_max, grid.tol, rate_extra);
    rep.lower = k_integral(g_lo, k_lo, k_max, grid.tol, rate_extra);
    rep.total = rep.upper + rep.lower;
    auto g_tot = [&](double k) { return g_hemi(k, +1) + g_hemi(k, -1); };
    if (k_lo > grid.k_min) rep.truncation_error += g_tot(k_lo) * k_lo;
    apply_tail(rep, fit_tail(g_tot, k_max), k_max);
    return rep;
}

double cherenkov_rate(const Condensate& cond, double v, double k_max) {
    require(std::isfinite(v) && v >= 0.0, Status::invalid_argument,
            "cherenkov_rate: v must be finite and >= 0");
    require(std::isfinite(k_max) && k_max > 0.0, Status::invalid_argument,
            "cherenkov_rate: k_max must be finite and > 0");
    if (v <= 1.0) return 0.0;  // subsonic: the emission cone is closed
    const double k_c = std::min(2.0 * std::sqrt(v * v - 1.0), k_max);
    return cond.sigma0() * std::pow(k_c, 4) / (16.0 * M_PI * v);
}

DepletionReport depletion(const Condensate& cond, const Trajectory& traj,
                          const Window& window, const RegulatorSpec& reg, double k_max,
                          double t) {
    const CondensateParams& P = cond.params();
    require(P.particle_number.has_value() && P.box_length.has_value(),
            Status::invalid_argument,
            "depletion: the condensate needs particle_number and box_length");
    require(std::isfinite(k_max) && k_max > 0.0, Status::invalid_argument,
            "depletion: k_max must be finite and > 0");
    require(std::isfinite(t), Status::invalid_argument, "depletion: t must be finite");
    if (!window.infinite_i)
        require(t > window.t_i, Status::domain_error,
                "depletion: evaluation time must exceed the window start");

    DepletionReport rep;
    rep.leading = (8.0 / 3.0) * std::sqrt(cond.diluteness() / M_PI);
    rep.box_length = *P.box_length;
    rep.particle_number = *P.particle_number;
    rep.k_max = k_max;

    const double N = *P.particle_number;
    const double L_hat = *P.box_length / cond.scales().units.L0;
    const double dk = TWO_PI / L_hat;
    const double nmax_f = k_max / dk;
    if (nmax_f < 1.0) return rep;  // no box mode below the cutoff
    require(nmax_f < 180.0, Status::numerical_failure,
            "depletion: more than ~2e7 box modes below k_max; raise L or lower k_max");

    const double R2 = nmax_f * nmax_f * (1.0 + 1e-12);
    const long nzmax = static_cast<long>(std::floor(nmax_f + 1e-12));
    std::map<long, long> shells;  // n_x^2 + n_y^2 -> multiplicity
    const long pmax = nzmax;
    for (long nx = -pmax; nx <= pmax; ++nx)
        for (long ny = -pmax; ny <= pmax; ++ny) {
            const double r2 = double(nx) * nx + double(ny) * ny;
            if (r2 <= R2) ++shells[nx * nx + ny * ny];
        }

    const double lam = cond.impurity_coupling_natural();
    const double nhat = cond.density_natural();
    Window W;
    W.t_i = window.t_i;
    W.infinite_i = window.infinite_i;
    W.t_f = t;
    W.infinite_f = false;
    const auto* ed = std::get_if<ExponentialDecay>(&traj.variant());

    auto integral = [&](const Mode& m) -> Complex {
        if (ed) return integrate_closed_exponential(m, ed->zeta0, ed->gamma0, W).value;
        return integrate_numeric(m, traj, W, reg, 1e-8).value;
    };

    const int NB = 6;
    double bin_sum[NB] = {0, 0, 0, 0, 0, 0};
    const double binw = k_max / NB;
    double raw = 0.0;  // sum over modes of multiplicity * <n_k>, fixed order
    for (long nz = 0; nz <= nzmax; ++nz) {
        for (const auto& [r2, cnt] : shells) {
            const double rad2 = double(nz) * nz + double(r2);
            if (rad2 > R2) break;  // shells ascend in r2
            if (nz == 0 && r2 == 0) continue;
            const double k_hat = dk * std::sqrt(rad2);
            const double cth = double(nz) / std::sqrt(rad2);
            const Mode m = cond.make_mode_natural(k_hat, std::acos(cth));
            rep.modes_used += static_cast<std::size_t>(cnt) * (nz > 0 ? 2 : 1);
            if (lam == 0.0) continue;
            const Complex Ip = integral(m);
            Complex Im = Ip;
            if (nz > 0) {
                const Mode mm = cond.make_mode_natural(k_hat, std::acos(-cth));
                Im = integral(mm);
            }
            // coherent amplitude phi_k = -i nhat lam sqrt(eps/(N omega)) I_k e^{-i omega t}
            const double amp = nhat * lam * std::sqrt(m.eps / (N * m.omega));
            const Complex ph = std::exp(Complex(0.0, -m.omega * t));
            const Complex a_p = Complex(0.0, -1.0) * amp * Ip * ph;
            const Complex a_m = Complex(0.0, -1.0) * amp * Im * ph;
            auto n_of = [&](const Complex& self, const Complex& opposite) {
                return (m.eps / m.omega) * std::norm(self) +
                       0.5 / m.omega * std::norm(std::conj(self) - opposite);
            };
            const double contrib =
                nz > 0 ? cnt * (n_of(a_p, a_m) + n_of(a_m, a_p)) : cnt * n_of(a_p, a_p);
            raw += contrib;
            bin_sum[std::min(NB - 1, static_cast<int>(k_hat / binw))] += contrib;
        }
    }
    rep.correction = raw / N;

    // shell-decay tail: density per unit k in the last two nonzero bins
    double rho_hi = bin_sum[NB - 1] / binw / N;
    double rho_lo = bin_sum[NB - 2] / binw / N;
    if (rho_hi > 0.0 && rho_lo > 0.0) {
        const double k_hi = (NB - 0.5) * binw;
        const double k_lo = (NB - 1.5) * binw;
        const double s = std::log(rho_hi / rho_lo) / std::log(k_hi / k_lo);
        rep.tail_estimate =
            s < -1.05 ? rho_hi * k_max / (-1.0 - s) : rho_hi * k_max;
    } else if (rho_hi > 0.0) {
        rep.tail_estimate = rho_hi * k_max;
    }
    return rep;
}

LinFit linear_fit(const std::vector<double>& x, const std::vector<double>& y) {
    require(x.size() == y.size() && x.size() >= 2, Status::invalid_argument,
            "linear_fit: needs matching vectors with >= 2 points");
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    const double n = double(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        require(std::isfinite(x[i]) && std::isfinite(y[i]), Status::invalid_argument,
                "linear_fit: points must be finite");
        sx += x[i];
        sy += y[i];
        sxx += x[i] * x[i];
        sxy += x[i] * y[i];
    }
    const double denom = n * sxx - sx * sx;
    require(denom != 0.0, Status::invalid_argument, "linear_fit: abscissae are degenerate");
    LinFit f;
    f.slope = (n * sxy - sx * sy) / denom;
    f.intercept = (sy - f.slope * sx) / n;
    return f;
}

double loglog_slope(const std::vector<double>& x, const std::vector<double>& y) {
    require(x.size() == y.size() && x.size() >= 2, Status::invalid_argument,
            "loglog_slope: needs matching vectors with >= 2 points");
    std::vector<double> lx(x.size()), ly(y.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        require(x[i] > 0.0 && y[i] > 0.0, Status::invalid_argument,
                "loglog_slope: points must be positive");
        lx[i] = std::log(x[i]);
        ly[i] = std::log(y[i]);
    }
    return linear_fit(lx, ly).slope;
}

void block_max(const std::vector<double>& x, const std::vector<double>& y, int width,
               std::vector<double>& bx, std::vector<double>& by) {
    require(width >= 1, Status::invalid_argument, "block_max: width must be >= 1");
    require(x.size() == y.size(), Status::invalid_argument,
            "block_max: vectors must match in size");
    bx.clear();
    by.clear();
    for (std::size_t start = 0; start + width <= x.size(); start += width) {
        std::size_t best = start;
        for (std::size_t i = start + 1; i < start + width; ++i)
            if (y[i] > y[best]) best = i;
        bx.push_back(x[best]);
        by.push_back(y[best]);
    }
}

}  // namespace becrad
