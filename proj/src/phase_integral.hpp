#pragma once

#include <utility>
#include <vector>

#include "common.hpp"
#include "condensate.hpp"
#include "trajectory.hpp"

namespace becrad {

// Integration window; either endpoint may be infinite.
struct Window {
    double t_i = 0.0;
    double t_f = 0.0;
    bool infinite_i = false;
    bool infinite_f = false;

    static Window finite(double a, double b);
    static Window full_line();
    static Window past_line(double t_f);    // (-inf, t_f]
    static Window future_line(double t_i);  // [t_i, +inf)
    bool both_finite() const { return !infinite_i && !infinite_f; }
    bool any_infinite() const { return infinite_i || infinite_f; }
};

enum class RegulatorKind { none = 0, exponential = 1, gaussian = 2 };

// Adiabatic damping of the coupling: exponential e^{-eps|t|} (units 1/t) or
// gaussian e^{-eps t^2} (units 1/t^2), evaluated on a decreasing eps ladder
// and extrapolated to eps -> 0. An empty ladder asks for the built-in
// trajectory-aware default.
struct RegulatorSpec {
    RegulatorKind kind = RegulatorKind::none;
    std::vector<double> ladder;  // strictly decreasing, all > 0
    int order = 2;               // polynomial extrapolation order

    static RegulatorSpec none_spec() { return {}; }
    static RegulatorSpec auto_spec(RegulatorKind k) { return {k, {}, 0}; }
};

// Distributional parts are never folded into `value`; they are reported as a
// named flag plus coefficient and resolved downstream via x delta(x) = 0.
enum class DistributionFlag { none = 0, delta_omega = 1, delta_mu = 2 };

struct PhaseIntegral {
    Complex value{0.0, 0.0};  // units of time
    double error = 0.0;
    Provenance provenance = Provenance::numeric;
    DistributionFlag flag = DistributionFlag::none;
    double flag_coefficient = 0.0;
    RegulatorSpec regulator;  // resolved spec actually used (kind none if unused)
};

// All operations below work in condensate natural units (hbar = M = c = 1):
// mode from Condensate::make_mode*, trajectory through Trajectory::rescaled.

// Oscillation-aware adaptive evaluation of I = ∫ e^{i(omega t - k_z zeta(t))} dt.
// tol is the relative accuracy target; a coarse absolute pass bootstraps the
// magnitude. Infinite windows require a regulator; a multi-point ladder is
// extrapolated to eps -> 0, a single point is returned as-is.
PhaseIntegral integrate_numeric(const Mode& mode, const Trajectory& traj,
                                const Window& window, const RegulatorSpec& reg,
                                double tol = 1e-9);

// Incomplete-gamma closed form for zeta(t) = zeta0 e^{-gamma0 t}. Finite and
// past-infinite windows are exact; the doubly infinite window returns the
// regulated idealization (provenance regulator_extrapolated). Windows ending
// at +infinity have no limit and are rejected. k_z = 0 on the full line
// returns the delta(omega) flag.
PhaseIntegral integrate_closed_exponential(const Mode& mode, double zeta0, double gamma0,
                                           const Window& window);

// Bessel closed form for the hyperbolic trajectory, full line, natural units:
// value = i (2/a) K1(mu) sinh(sigma), mu = (k/a) sqrt(sin^2 theta + k^2/4),
// sigma = atanh(k_z/omega); the delta(mu) part is reported via the flag.
PhaseIntegral integrate_closed_uniform_acceleration(const Mode& mode, double a);

// Richardson-style extrapolation of regulated values to eps = 0. Values must
// converge monotonically; an increasing difference sequence is rejected (a
// physics signal: the regulated limit depends on the regulator).
PhaseIntegral extrapolate_regulator(const std::vector<std::pair<double, PhaseIntegral>>& values,
                                    int order);

// Resolved default ladder for a trajectory/mode/regulator combination; used
// when RegulatorSpec.ladder is empty. Exposed for tests and the CLI echo.
RegulatorSpec resolve_regulator(const Mode& mode, const Trajectory& traj,
                                const RegulatorSpec& reg);

}  // namespace becrad
