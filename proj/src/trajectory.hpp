#pragma once

#include <string>
#include <variant>
#include <vector>

#include "common.hpp"

namespace becrad {

// All built-in trajectories move along z; x = y = 0 throughout.
struct ConstantVelocity {
    double v = 0.0;  // speed along z, sign allowed
};

// zeta(t) = zeta0 * exp(-gamma0 t)
struct ExponentialDecay {
    double zeta0 = 0.0;   // != 0, either sign
    double gamma0 = 0.0;  // > 0
};

// zeta(t) = (c^2/a) * sqrt(1 + (a t / c)^2); |speed| < c for all finite t
struct UniformAccelerationRel {
    double a = 0.0;  // > 0
    double c = 0.0;  // > 0 (sound speed of the medium the units live in)
};

// Tabulated (t, z), interpolated; order 1 = piecewise linear, 3 = natural
// cubic spline. Evaluation outside the sampled span is an error.
struct Sampled {
    std::vector<double> t;
    std::vector<double> z;
    int order = 3;
};

class Trajectory {
  public:
    using Variant =
        std::variant<ConstantVelocity, ExponentialDecay, UniformAccelerationRel, Sampled>;

    explicit Trajectory(Variant var);

    double position(double t) const;  // z-component
    double speed(double t) const;     // dz/dt

    // Potential that generates the motion for a classical impurity of mass
    // m_imp. Defined for ExponentialDecay (inverted harmonic) and
    // UniformAccelerationRel (repulsive 1/zeta^2); other variants reject.
    double classical_potential(double zeta, double m_imp) const;

    // Rigid translation by zeta_c; |I_k| downstream must be unchanged.
    Trajectory translated(double zeta_c) const;

    // Same path expressed in condensate natural units: lengths / L0,
    // times / T0. Identity when L0 = T0 = 1.
    Trajectory rescaled(double length_scale, double time_scale) const;

    const Variant& variant() const { return var_; }
    double offset() const { return offset_; }

    struct Diagnostics {
        double max_speed = 0.0;
        bool has_gamma_char = false;
        double gamma_char = 0.0;  // gamma0, or a/c
        bool has_l_a = false;
        double l_a = 0.0;  // c^2/a
        double t_unruh = 0.0;  // hbar * gamma_char / (2 pi), energy units
        double t_accel = 0.0;  // hbar * a / (2 c), energy units
    };
    Diagnostics diagnostics(double t_lo, double t_hi, int samples = 513,
                            double hbar = 1.0) const;

  private:
    Variant var_;
    double offset_ = 0.0;

    // natural cubic spline second derivatives (Sampled, order 3)
    std::vector<double> spline_m_;
    void prepare_spline();
};

// Two-column CSV (t, z), header row optional, times strictly increasing.
Trajectory load_sampled_csv(const std::string& path, int order = 3);

}  // namespace becrad
