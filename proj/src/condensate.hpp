#pragma once

#include <cmath>
#include <optional>

#include "common.hpp"

namespace becrad {

// Microscopic inputs, in any consistent unit system ("input units").
struct CondensateParams {
    double mass = 0.0;               // boson mass M
    double coupling = 0.0;           // boson-boson coupling g (energy*volume)
    double density = 0.0;            // condensate density n (1/volume)
    double impurity_coupling = 0.0;  // impurity coupling lambda (energy*volume)
    double hbar = 1.0;
    std::optional<double> particle_number;  // N
    std::optional<double> box_length;       // L
    double diluteness_threshold = 1e-2;     // warn when n*a_s^3 exceeds this
};

// Conversion factors between input units and the internal hbar = M = c = 1 system.
// natural length = length/L0, natural time = time/T0, natural energy = energy/E0.
struct UnitScales {
    double L0 = 1.0;  // hbar/(M c)
    double T0 = 1.0;  // hbar/(M c^2)
    double E0 = 1.0;  // M c^2
};

struct DerivedScales {
    double c = 0.0;    // sound speed sqrt(g n / M)
    double xi = 0.0;   // coherence length hbar/(2 M c)
    double a_s = 0.0;  // scattering length M g/(4 pi hbar^2)
    UnitScales units;
};

// A radiated mode, stored in natural units. theta is the polar angle from the
// trajectory axis; the azimuthal angle never matters (axial symmetry).
struct Mode {
    double k = 0.0;      // |k| xi-units: k_natural = k_input * L0
    double theta = 0.0;  // [0, pi]
    // cos(theta), snapped to exact 0 within 1e-15 of transverse so that the
    // k_z = 0 special cases (delta flags, zero emission) fire exactly
    double cos_theta = 1.0;
    double eps = 0.0;    // free energy k^2/2
    double omega = 0.0;  // Bogoliubov energy k sqrt(1 + k^2/4)
    double theta_k = 0.0;  // Bogoliubov angle atanh(1/(omega + eps + 1))
    double kz() const { return k * cos_theta; }
};

DerivedScales derive_scales(const CondensateParams& p);

class Condensate {
public:
    explicit Condensate(const CondensateParams& p);

    const CondensateParams& params() const { return params_; }
    const DerivedScales& scales() const { return scales_; }

    bool diluteness_warning() const { return diluteness_warning_; }
    double diluteness() const { return diluteness_; }  // n * a_s^3

    // k in input units (1/length).
    Mode make_mode(double k, double theta) const;
    // k already in natural units.
    Mode make_mode_natural(double k, double theta) const;

    // Dimensionless density and impurity coupling in natural units.
    double density_natural() const { return n_hat_; }
    double impurity_coupling_natural() const { return lambda_hat_; }
    // Spectrum prefactor n_hat * lambda_hat^2; every emission density carries it.
    double sigma0() const { return n_hat_ * lambda_hat_ * lambda_hat_; }

private:
    CondensateParams params_;
    DerivedScales scales_;
    double n_hat_ = 0.0;
    double lambda_hat_ = 0.0;
    double diluteness_ = 0.0;
    bool diluteness_warning_ = false;
};

}  // namespace becrad
