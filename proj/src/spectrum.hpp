#pragma once

#include <vector>

#include "common.hpp"
#include "condensate.hpp"
#include "phase_integral.hpp"
#include "trajectory.hpp"

namespace becrad {

// Everything here is in condensate natural units (hbar = M = c = 1);
// conversion to input units happens at the C boundary.

// Geometric z-hemispheres; for the exponential trajectory with zeta0 > 0 the
// upper one carries the Planck-suppressed branch.
enum class Hemisphere { upper = +1, lower = -1 };

struct SpectrumPoint {
    double k = 0.0;
    double theta = 0.0;
    double omega = 0.0;
    double dn_dk_domega = 0.0;  // bogolons per wavenumber per steradian
    double dE_dk_domega = 0.0;  // = omega * dn (hbar = 1)
    Provenance provenance = Provenance::numeric;
};

struct EnergyReport {
    double total = 0.0;
    double upper = 0.0;  // z > 0 hemisphere
    double lower = 0.0;  // z < 0 hemisphere
    double k_max = 0.0;
    double truncation_error = 0.0;
    bool divergent = false;
    double tail_exponent = 0.0;  // fitted d ln(dE/dk) / d ln k near the cutoff
};

struct DepletionReport {
    double leading = 0.0;     // (8/3) sqrt(n a_s^3 / pi)
    double correction = 0.0;  // impurity-induced, O(1/N)
    std::size_t modes_used = 0;
    double box_length = 0.0;      // input units, echoed
    double particle_number = 0.0;
    double k_max = 0.0;           // natural cutoff
    double tail_estimate = 0.0;   // contribution beyond k_max, from the shell decay law
};

// dn/dk dOmega = sigma0 (eps/omega) |I|^2 k^2 / (2 pi)^3; distributional
// flags are resolved here via x delta(x) = 0 (omega > 0, mu > 0 for k > 0).
SpectrumPoint occupation_density(const Condensate& cond, const Mode& mode,
                                 const PhaseIntegral& I);

// Full-line exponential-decay spectrum via the Planck factors
// [e^{2 pi omega/gamma0} - 1]^{-1} (suppressed) / [1 - e^{-2 pi omega/gamma0}]^{-1}
// (enhanced); `hemisphere` selects the sign of k_z zeta0 directly.
SpectrumPoint exponential_spectrum(const Condensate& cond, double gamma0, double k,
                                   double theta, Hemisphere hemisphere);

// Windowed exponential-decay spectrum through the incomplete-gamma closed form.
SpectrumPoint exponential_spectrum_windowed(const Condensate& cond, double gamma0,
                                            double zeta0, const Window& window, double k,
                                            double theta);

// Hyperbolic-trajectory spectrum through the K1 closed form.
SpectrumPoint uniform_acceleration_spectrum(const Condensate& cond, double a, double k,
                                            double theta);

// Asymptotic-law evaluators (provenance asymptotic), normalized consistently
// with occupation_density.
SpectrumPoint asymptotic_ir_exponential(const Condensate& cond, double k, double theta);
SpectrumPoint asymptotic_uv_exponential_lower(const Condensate& cond, double gamma0, double k,
                                              double theta);
SpectrumPoint asymptotic_ir_windowed(const Condensate& cond, double duration, double k,
                                     double theta);
SpectrumPoint asymptotic_ir_uniform(const Condensate& cond, double a, double k, double theta);
SpectrumPoint asymptotic_uv_uniform(const Condensate& cond, double a, double k, double theta);

struct EnergyGrid {
    int n_theta = 32;     // Gauss-Legendre nodes in cos(theta) per hemisphere
    double k_min = 0.0;   // 0 = automatic infrared handling
    double tol = 1e-7;    // relative target for the k quadrature
};

// E = \int dE/dk dOmega dk dOmega with the 2 pi azimuthal factor analytic.
// Routes per trajectory: closed forms wherever they exist, regulated numerics
// otherwise. A non-decaying integrand tail at k_max sets the divergence flag.
EnergyReport total_energy(const Condensate& cond, const Trajectory& traj,
                          const Window& window, const RegulatorSpec& reg, double k_max,
                          const EnergyGrid& grid);

// Landau-criterion radiation rate of a uniformly moving impurity (natural
// units): 0 for v <= 1, else sigma0 k_c^4 / (16 pi v) with
// k_c = min(2 sqrt(v^2 - 1), k_max).
double cherenkov_rate(const Condensate& cond, double v, double k_max);

// Condensate depletion at time t: closed leading term plus the impurity
// correction summed over box modes k = 2 pi n / L up to k_max, each mode's
// phase integral taken over (window.t_i, t).
DepletionReport depletion(const Condensate& cond, const Trajectory& traj,
                          const Window& window, const RegulatorSpec& reg, double k_max,
                          double t);

// least-squares helpers for the asymptotic-fit checks
struct LinFit {
    double slope = 0.0;
    double intercept = 0.0;
};
LinFit linear_fit(const std::vector<double>& x, const std::vector<double>& y);
double loglog_slope(const std::vector<double>& x, const std::vector<double>& y);
// block maxima of consecutive `width`-sized chunks; envelope for oscillating decays
void block_max(const std::vector<double>& x, const std::vector<double>& y, int width,
               std::vector<double>& bx, std::vector<double>& by);

}  // namespace becrad
