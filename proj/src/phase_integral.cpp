#include "phase_integral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "quadrature.hpp"
#include "specfun.hpp"

namespace becrad {

namespace {

constexpr double INF = std::numeric_limits<double>::infinity();

void validate_window(const Window& w) {
    if (!w.infinite_i)
        require(std::isfinite(w.t_i), Status::invalid_argument, "window: t_i must be finite");
    if (!w.infinite_f)
        require(std::isfinite(w.t_f), Status::invalid_argument, "window: t_f must be finite");
    if (w.both_finite())
        require(w.t_i < w.t_f, Status::invalid_argument, "window: needs t_i < t_f");
}

double sgn(double v) { return v > 0.0 ? 1.0 : (v < 0.0 ? -1.0 : 0.0); }

// Regulated-coupling truncation time: where the damping factor reaches
// exp(-37) ~ 8e-17 (gaussian) / exp(-40) ~ 4e-18 (exponential).
double regulator_cutoff(RegulatorKind kind, double eps) {
    switch (kind) {
        case RegulatorKind::exponential: return 40.0 / eps;
        case RegulatorKind::gaussian: return std::sqrt(37.0 / eps);
        default: return INF;
    }
}

struct Rung {
    Complex value{0.0, 0.0};
    double error = 0.0;
};

// ---- eta-substitution machinery for zeta(t) = zeta0 e^{-gamma0 t} ----
//
// Past side (t < 0): eta = e^{-gamma0 t} maps (-inf, t_hi] to [eta_lo, inf)
// and turns the violently oscillating e^{-i b e^{-gamma0 t}} phase into the
// tame integrand exp(alpha ln eta + beta ln^2 eta - i b eta) / gamma0 with
// alpha = -1 - i omega/gamma0 (- eps/gamma0 for the exponential regulator)
// and beta = -eps/gamma0^2 for the gaussian one.

struct TailResult {
    Complex value{0.0, 0.0};
    double error = 0.0;
    bool converged = false;
};

// Repeated integration by parts against e^{-i b eta} for the eta-tail
// [H, inf); q tracks the polynomial in ln eta produced by differentiation.
TailResult ibp_tail(Complex alpha, double beta, double b, double H, double tol,
                    int mmax = 10) {
    const double L = std::log(H);
    const Complex A = std::exp(alpha * L + beta * L * L);
    const Complex E = std::exp(Complex(0.0, -b * H));
    const Complex ib(0.0, b);
    std::vector<Complex> q{Complex(1.0, 0.0)};
    Complex val{0.0, 0.0};
    Complex ibpow = ib;  // (i b)^{m+1}
    double Hm = 1.0;     // H^m
    double last = INF;
    for (int m = 0; m < mmax; ++m) {
        Complex qL{0.0, 0.0};
        double Lj = 1.0;
        for (const Complex& c : q) {
            qL += c * Lj;
            Lj *= L;
        }
        Complex term = A * qL / Hm * E / ibpow;
        val += term;
        double mag = std::abs(term);
        if (mag < tol) return {val, mag, true};
        if (mag > last && m >= 2) return {val - term, last, false};
        last = mag;
        std::vector<Complex> nq(q.size() + 1, Complex(0.0, 0.0));
        for (std::size_t j = 0; j < q.size(); ++j) {
            nq[j] += (alpha - static_cast<double>(m)) * q[j];
            nq[j + 1] += 2.0 * beta * q[j];
            if (j >= 1) nq[j - 1] += static_cast<double>(j) * q[j];
        }
        q = std::move(nq);
        ibpow *= ib;
        Hm *= H;
    }
    return {val, last, last < tol};
}

// One regulated evaluation for the exponential-decay trajectory, b != 0.
// Window may have any combination of infinite endpoints except t_f = +inf
// without a regulator (rejected upstream). tol_abs is an absolute budget.
Rung ed_rung_abs(const Mode& mode, const ExponentialDecay& ed, const Window& win,
                 RegulatorKind kind, double eps, double tol_abs) {
    const double w = mode.omega;
    const double kz = mode.kz();
    const double G = ed.gamma0;
    const double b = kz * ed.zeta0;
    const double x = w / G;

    Rung out;

    // past part: t in (t_i, min(0, t_f))
    const double t_past_hi = win.infinite_f ? 0.0 : std::min(0.0, win.t_f);
    const bool has_past = win.infinite_i || win.t_i < t_past_hi;
    if (has_past) {
        Complex alpha(-1.0 - (kind == RegulatorKind::exponential ? eps / G : 0.0), -x);
        double beta = kind == RegulatorKind::gaussian ? -eps / (G * G) : 0.0;
        auto f = [&](double eta) {
            double Lg = std::log(eta);
            return std::exp(alpha * Lg + Complex(beta * Lg * Lg, -b * eta));
        };
        auto rate = [&](double eta) { return x / eta + std::abs(b); };
        const double eta_lo = std::exp(-G * t_past_hi);
        if (win.infinite_i) {
            double H = std::max(2.0 * eta_lo,
                                std::max(2.0, 8.0 * (x + 1.0) / std::max(std::abs(b), 1e-3)));
            TailResult tail;
            for (int att = 0; att < 40; ++att) {
                tail = ibp_tail(alpha, beta, b, H, 0.2 * tol_abs * G);
                if (tail.converged) break;
                H *= 2.0;
            }
            if (!tail.converged)
                fail(Status::numerical_failure,
                     "eta-tail integration by parts did not converge");
            quad::Result main = quad::adaptive(f, eta_lo, H, 0.8 * tol_abs * G, rate);
            out.value += (main.value + tail.value) / G;
            out.error += (main.error + tail.error) / G;
        } else {
            double eta_hi = std::exp(-G * win.t_i);
            quad::Result main = quad::adaptive(f, eta_lo, eta_hi, tol_abs * G, rate);
            out.value += main.value / G;
            out.error += main.error / G;
        }
    }

    // future part: t in (max(t_i, 0), t_f)
    const double t_start = win.infinite_i ? 0.0 : std::max(win.t_i, 0.0);
    const bool has_future = win.infinite_f || win.t_f > t_start;
    if (has_future) {
        auto f = [&](double t) {
            double damp = kind == RegulatorKind::exponential
                              ? -eps * t
                              : (kind == RegulatorKind::gaussian ? -eps * t * t : 0.0);
            return std::exp(Complex(damp, w * t - b * std::exp(-G * t)));
        };
        auto rate = [&](double t) {
            double rr = kind == RegulatorKind::exponential
                            ? eps
                            : (kind == RegulatorKind::gaussian ? 2.0 * eps * std::abs(t) : 0.0);
            return w + std::abs(b) * G * std::exp(-G * t) + rr;
        };
        if (win.infinite_f && kind == RegulatorKind::exponential) {
            // numeric up to T1 where |b e^{-G t}| <= 1/2, then term-by-term
            // analytic tail of e^{-i b e^{-G t}} expanded in powers
            double T1 = std::max(t_start, std::log(std::max(2.0 * std::abs(b), 2.0)) / G);
            if (T1 > t_start) {
                quad::Result main = quad::adaptive(f, t_start, T1, 0.5 * tol_abs, rate);
                out.value += main.value;
                out.error += main.error;
            }
            Complex z = Complex(0.0, -b) * std::exp(-G * T1);
            Complex s{0.0, 0.0}, term{1.0, 0.0};
            for (int m = 0; m < 80; ++m) {
                s += term / (static_cast<double>(m) * G + Complex(eps, -w));
                term *= z / static_cast<double>(m + 1);
                if (std::abs(term) < 1e-18) break;
            }
            out.value += std::exp(Complex(-eps, w) * T1) * s;
            out.error += 1e-16 * std::abs(s);
        } else {
            double t_end = win.infinite_f ? regulator_cutoff(kind, eps) : win.t_f;
            if (kind != RegulatorKind::none)
                t_end = std::min(t_end, std::max(t_start, regulator_cutoff(kind, eps)));
            if (t_end > t_start) {
                quad::Result main = quad::adaptive(f, t_start, t_end, 0.5 * tol_abs, rate);
                out.value += main.value;
                out.error += main.error;
            }
        }
    }
    return out;
}

// Direct truncated evaluation for trajectories whose phase rate stays
// bounded into the past (constant velocity, uniform acceleration, sampled,
// and the k_z = 0 exponential case).
Rung generic_rung_abs(const Mode& mode, const Trajectory& traj, const Window& win,
                      RegulatorKind kind, double eps, double tol_abs) {
    const double w = mode.omega;
    const double kz = mode.kz();
    const double t_cut = regulator_cutoff(kind, eps);
    double a = win.infinite_i ? -t_cut : std::max(win.t_i, -t_cut);
    double b = win.infinite_f ? t_cut : std::min(win.t_f, t_cut);
    if (kind == RegulatorKind::none) {
        a = win.t_i;
        b = win.t_f;
    }
    if (!(b > a)) return {};  // regulator annihilates the window
    auto f = [&](double t) {
        double damp = kind == RegulatorKind::exponential
                          ? -eps * std::abs(t)
                          : (kind == RegulatorKind::gaussian ? -eps * t * t : 0.0);
        return std::exp(Complex(damp, w * t - kz * traj.position(t)));
    };
    auto rate = [&](double t) {
        double rr = kind == RegulatorKind::exponential
                        ? eps
                        : (kind == RegulatorKind::gaussian ? 2.0 * eps * std::abs(t) : 0.0);
        return std::abs(w - kz * traj.speed(t)) + rr;
    };
    quad::Result r = quad::adaptive(f, a, b, tol_abs, rate);
    return {r.value, r.error};
}

// two-pass driver: coarse absolute pass pins the magnitude, then the rung is
// refined to tol_rel * |value| (floored at 1e-13)
Rung two_pass(const std::function<Rung(double)>& eval, double tol_rel) {
    const double coarse = 1e-6;
    Rung first = eval(coarse);
    double target = std::max(1e-13, tol_rel * std::abs(first.value));
    if (target >= coarse || std::abs(first.value) == 0.0) return first;
    return eval(target);
}

}  // namespace

Window Window::finite(double a, double b) {
    Window w{a, b, false, false};
    validate_window(w);
    return w;
}
Window Window::full_line() { return {0.0, 0.0, true, true}; }
Window Window::past_line(double t_f) {
    Window w{0.0, t_f, true, false};
    validate_window(w);
    return w;
}
Window Window::future_line(double t_i) {
    Window w{t_i, 0.0, false, true};
    validate_window(w);
    return w;
}

RegulatorSpec resolve_regulator(const Mode& mode, const Trajectory& traj,
                                const RegulatorSpec& reg) {
    if (reg.kind == RegulatorKind::none) {
        require(reg.ladder.empty(), Status::invalid_argument,
                "regulator: ladder given with kind none");
        return reg;
    }
    RegulatorSpec out;
    out.kind = reg.kind;
    if (!reg.ladder.empty()) {
        for (std::size_t i = 0; i < reg.ladder.size(); ++i) {
            require(std::isfinite(reg.ladder[i]) && reg.ladder[i] > 0.0,
                    Status::invalid_argument, "regulator: ladder entries must be > 0");
            if (i > 0)
                require(reg.ladder[i] < reg.ladder[i - 1], Status::invalid_argument,
                        "regulator: ladder must be strictly decreasing");
        }
        out.ladder = reg.ladder;
        int max_order = static_cast<int>(out.ladder.size()) - 1;
        out.order = reg.order >= 1 ? std::min(reg.order, std::max(max_order, 1)) : 2;
        if (out.ladder.size() >= 2) out.order = std::min(out.order, max_order);
        return out;
    }

    // trajectory-aware defaults
    const bool gauss = reg.kind == RegulatorKind::gaussian;
    const double w = mode.omega;
    const double lam = w - std::abs(mode.kz());  // slowest asymptotic phase rate
    double scale = w;
    int order = 2;
    std::vector<double> rungs{0.2, 0.1, 0.05};
    if (const auto* ed = std::get_if<ExponentialDecay>(&traj.variant())) {
        scale = std::min(w, ed->gamma0);
    } else if (const auto* ua = std::get_if<UniformAccelerationRel>(&traj.variant())) {
        double gchar = ua->a / ua->c;
        if (gauss) {
            // the delta(mu) remnant decays like exp(-lam^2/4 eps); the ladder
            // must start well below lam^2 or the extrapolation sees it
            double eb = std::min(lam * lam, gchar * gchar) / 600.0;
            out.ladder = {8.0 * eb, 4.0 * eb, 2.0 * eb, eb};
            out.order = reg.order >= 1 ? std::min(reg.order, 3) : 3;
            return out;
        }
        scale = std::min(lam, gchar);
    } else if (const auto* cv = std::get_if<ConstantVelocity>(&traj.variant())) {
        double detune = std::abs(w - mode.kz() * cv->v);
        scale = detune > 1e-12 * w ? std::min(detune, w) : w;
    }
    for (double r : rungs) out.ladder.push_back(gauss ? r * scale * scale : r * scale);
    out.order = reg.order >= 1 ? std::min(reg.order, 2) : order;
    return out;
}

PhaseIntegral integrate_numeric(const Mode& mode, const Trajectory& traj,
                                const Window& window, const RegulatorSpec& reg,
                                double tol) {
    validate_window(window);
    require(std::isfinite(tol) && tol > 0.0, Status::invalid_argument,
            "integrate_numeric: tol must be > 0");
    if (window.any_infinite()) {
        require(reg.kind != RegulatorKind::none, Status::invalid_argument,
                "integrate_numeric: an infinite window requires a regulator");
        require(!std::holds_alternative<Sampled>(traj.variant()), Status::domain_error,
                "integrate_numeric: a sampled trajectory cannot cover an infinite window");
    }
    RegulatorSpec rs = resolve_regulator(mode, traj, reg);

    const auto* ed = std::get_if<ExponentialDecay>(&traj.variant());
    const double kz = mode.kz();
    const bool eta_route = ed != nullptr && kz * ed->zeta0 != 0.0;
    // constant trajectory offset contributes only the unit-modulus phase
    // factor e^{-i kz zeta_c}, applied after the eta-route integration
    const Complex offset_phase =
        eta_route ? std::exp(Complex(0.0, -kz * traj.offset())) : Complex(1.0, 0.0);

    auto rung = [&](RegulatorKind kind, double eps) -> Rung {
        Rung r = two_pass(
            [&](double abs_tol) {
                return eta_route ? ed_rung_abs(mode, *ed, window, kind, eps, abs_tol)
                                 : generic_rung_abs(mode, traj, window, kind, eps, abs_tol);
            },
            tol);
        r.value *= offset_phase;
        return r;
    };

    if (rs.kind == RegulatorKind::none) {
        Rung r = rung(RegulatorKind::none, 0.0);
        return {r.value, r.error, Provenance::numeric, DistributionFlag::none, 0.0, rs};
    }

    std::vector<std::pair<double, PhaseIntegral>> pairs;
    pairs.reserve(rs.ladder.size());
    for (double eps : rs.ladder) {
        Rung r = rung(rs.kind, eps);
        RegulatorSpec echo{rs.kind, {eps}, 1};
        pairs.emplace_back(
            eps, PhaseIntegral{r.value, r.error, Provenance::numeric, DistributionFlag::none,
                               0.0, echo});
    }
    if (pairs.size() == 1) return pairs.front().second;
    PhaseIntegral out = extrapolate_regulator(pairs, rs.order);
    out.regulator = rs;
    return out;
}

PhaseIntegral integrate_closed_exponential(const Mode& mode, double zeta0, double gamma0,
                                           const Window& window) {
    validate_window(window);
    require(std::isfinite(gamma0) && gamma0 > 0.0, Status::invalid_argument,
            "integrate_closed_exponential: gamma0 must be > 0");
    require(std::isfinite(zeta0) && zeta0 != 0.0, Status::invalid_argument,
            "integrate_closed_exponential: zeta0 must be finite and nonzero");
    if (window.infinite_f && !window.infinite_i)
        fail(Status::domain_error,
             "integrate_closed_exponential: windows ending at +infinity have no "
             "closed-form limit (the incomplete gamma oscillates); use a regulated "
             "numeric evaluation");

    const double w = mode.omega;
    const double G = gamma0;
    const double x = w / G;
    const double b = mode.kz() * zeta0;
    const bool full_line = window.infinite_i && window.infinite_f;

    if (b == 0.0) {
        if (full_line) {
            // I = 2 pi delta(omega); never fires for omega > 0 modes
            PhaseIntegral out;
            out.provenance = Provenance::regulator_extrapolated;
            out.flag = DistributionFlag::delta_omega;
            out.flag_coefficient = 2.0 * M_PI;
            return out;
        }
        const Complex iw(0.0, w);
        Complex hi = std::exp(iw * window.t_f);
        Complex lo = window.infinite_i ? Complex(0.0, 0.0) : std::exp(iw * window.t_i);
        PhaseIntegral out;
        out.value = (hi - lo) / iw;
        out.error = 1e-15 * std::abs(out.value);
        out.provenance =
            window.infinite_i ? Provenance::regulator_extrapolated : Provenance::closed_form;
        return out;
    }

    // regulated full-line value: (1/G) |b|^{i x} Gamma(-i x) e^{-sgn(b) pi x / 2}
    auto gamma_term = [&]() -> Complex {
        Complex expo = Complex(0.0, x * std::log(std::abs(b))) +
                       specfun::log_gamma(Complex(0.0, -x));
        expo += Complex(-sgn(b) * M_PI_2 * x, 0.0);
        return std::exp(expo);
    };

    if (full_line) {
        PhaseIntegral out;
        out.value = gamma_term() / G;
        out.error = 1e-12 * std::abs(out.value);
        out.provenance = Provenance::regulator_extrapolated;
        return out;
    }

    // windowed difference I = (1/G) [ Gend(t_i) - Gend(t_f) ] with
    // Gend(t) = (i b)^{i x} gamma(-i x, i b e^{-G t}); the (i b)^{i x} z^s
    // prefactors cancel analytically against the series/continued-fraction
    // pieces, so no overflowing magnitude e^{pi x / 2} is ever formed.
    const Complex s(0.0, -x);
    struct End {
        Complex val;
        double err;
    };
    auto endpoint = [&](double t) -> End {
        const double zmag = std::abs(b) * std::exp(-G * t);
        const Complex phase = std::exp(Complex(0.0, x * G * t));
        if (zmag <= 40.0) {
            // Gend = sum_m phase * (-z_t)^m / (m! (s+m)), z_t = i b e^{-G t}
            Complex u(0.0, -b * std::exp(-G * t));  // -z_t
            Complex wterm = phase;
            Complex sum{0.0, 0.0};
            double peak = 0.0;
            double lastmag = 0.0;
            for (int m = 0; m < 400; ++m) {
                Complex term = wterm / (s + static_cast<double>(m));
                sum += term;
                lastmag = std::abs(term);
                peak = std::max(peak, lastmag);
                if (lastmag < 1e-19 * (std::abs(sum) + 1e-300) && m > 3) break;
                wterm *= u / static_cast<double>(m + 1);
            }
            return {sum, peak * 2.3e-16 + lastmag};
        }
        if (zmag >= x + 8.0) {
            // Gend = F - e^{i x G t - z} CF(s, z); |e^{i x G t - z}| = 1 (z imaginary)
            Complex z(0.0, b * std::exp(-G * t));
            Complex cf = specfun::detail::upper_gamma_cf(s, z);
            Complex val = gamma_term() - std::exp(Complex(0.0, x * G * t) - z) * cf;
            return {val, 1e-13 * (std::abs(val) + std::abs(cf))};
        }
        std::ostringstream os;
        os << "integrate_closed_exponential: endpoint |k_z zeta0| e^{-gamma0 t} = " << zmag
           << " falls between the series bound 40 and the continued-fraction bound "
           << x + 8.0 << "; evaluate this window numerically";
        fail(Status::numerical_failure, os.str());
    };

    End e_f = endpoint(window.t_f);
    End e_i = window.infinite_i ? End{gamma_term(), 1e-13 * std::abs(gamma_term())}
                                : endpoint(window.t_i);
    PhaseIntegral out;
    out.value = (e_i.val - e_f.val) / G;
    out.error = (e_i.err + e_f.err) / G;
    out.provenance = Provenance::closed_form;
    return out;
}

PhaseIntegral integrate_closed_uniform_acceleration(const Mode& mode, double a) {
    require(std::isfinite(a) && a > 0.0, Status::invalid_argument,
            "integrate_closed_uniform_acceleration: a must be > 0");
    const double k = mode.k;
    const double st = std::sin(mode.theta);
    const double mu = (k / a) * std::sqrt(st * st + 0.25 * k * k);
    const double sh = k * mode.cos_theta / (a * mu);   // sinh sigma
    const double ch = mode.omega / (a * mu);           // cosh sigma
    PhaseIntegral out;
    out.value = Complex(0.0, (2.0 / a) * specfun::bessel_k1(mu) * sh);
    out.error = 1e-12 * std::abs(out.value);
    out.provenance = Provenance::closed_form;
    out.flag = DistributionFlag::delta_mu;
    out.flag_coefficient = (2.0 / a) * M_PI * ch;
    return out;
}

PhaseIntegral extrapolate_regulator(const std::vector<std::pair<double, PhaseIntegral>>& values,
                                    int order) {
    require(values.size() >= 2, Status::invalid_argument,
            "extrapolate_regulator: need at least 2 ladder points");
    require(order >= 1, Status::invalid_argument,
            "extrapolate_regulator: order must be >= 1");
    std::vector<double> eps;
    std::vector<Complex> vals;
    double scale = 0.0;
    double rung_err = 0.0;
    for (std::size_t i = 0; i < values.size(); ++i) {
        const auto& [e, pi] = values[i];
        require(std::isfinite(e) && e > 0.0, Status::invalid_argument,
                "extrapolate_regulator: eps must be > 0");
        if (i > 0)
            require(e < eps.back(), Status::invalid_argument,
                    "extrapolate_regulator: eps ladder must be strictly decreasing");
        require(pi.provenance == values.front().second.provenance, Status::invalid_argument,
                "extrapolate_regulator: mixed provenance in the ladder");
        require(pi.flag == DistributionFlag::none, Status::invalid_argument,
                "extrapolate_regulator: cannot extrapolate distributional flags");
        eps.push_back(e);
        vals.push_back(pi.value);
        scale = std::max(scale, std::abs(pi.value));
        rung_err = std::max(rung_err, pi.error);
    }

    const double noise_floor = 1e-13 * std::max(scale, 1e-300);
    std::vector<double> diffs;
    for (std::size_t j = 1; j < vals.size(); ++j) diffs.push_back(std::abs(vals[j] - vals[j - 1]));
    bool all_noise = true;
    for (double d : diffs) all_noise = all_noise && d <= noise_floor;
    RegulatorSpec echo = values.front().second.regulator;
    echo.ladder = eps;
    echo.order = order;
    if (all_noise) {
        return {vals.back(), 0.0, Provenance::regulator_extrapolated, DistributionFlag::none,
                0.0, echo};
    }
    for (std::size_t j = 1; j < diffs.size(); ++j) {
        if (diffs[j] > noise_floor && diffs[j] > diffs[j - 1] * (1.0 + 1e-9)) {
            std::ostringstream os;
            os << "extrapolate_regulator: ladder is not converging (|dv| sequence";
            for (double d : diffs) os << " " << d;
            os << "); the regulated limit depends on the regulator here";
            fail(Status::numerical_failure, os.str());
        }
    }
    int eff_order = std::min<int>(order, static_cast<int>(vals.size()) - 1);
    quad::Extrapolated ex = quad::neville_at_zero(eps, vals, eff_order);
    echo.order = eff_order;
    return {ex.value, ex.error + rung_err, Provenance::regulator_extrapolated,
            DistributionFlag::none, 0.0, echo};
}

}  // namespace becrad
