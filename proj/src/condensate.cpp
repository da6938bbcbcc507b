#include "condensate.hpp"

#include <cmath>
#include <sstream>

namespace becrad {

namespace {

void check_positive(double v, const char* name) {
    if (!(v > 0.0) || !std::isfinite(v)) {
        std::ostringstream os;
        os << "condensate parameter '" << name << "' must be positive and finite, got " << v;
        fail(Status::invalid_argument, os.str());
    }
}

}  // namespace

DerivedScales derive_scales(const CondensateParams& p) {
    check_positive(p.mass, "mass");
    check_positive(p.coupling, "coupling");
    check_positive(p.density, "density");
    check_positive(p.hbar, "hbar");
    if (!std::isfinite(p.impurity_coupling))
        fail(Status::invalid_argument, "condensate parameter 'impurity_coupling' must be finite");

    DerivedScales s;
    s.c = std::sqrt(p.coupling * p.density / p.mass);
    s.xi = p.hbar / (2.0 * p.mass * s.c);
    s.a_s = p.mass * p.coupling / (4.0 * M_PI * p.hbar * p.hbar);
    s.units.L0 = p.hbar / (p.mass * s.c);
    s.units.T0 = p.hbar / (p.mass * s.c * s.c);
    s.units.E0 = p.mass * s.c * s.c;
    return s;
}

Condensate::Condensate(const CondensateParams& p) : params_(p), scales_(derive_scales(p)) {
    if (p.particle_number) {
        if (!(*p.particle_number > 0.0))
            fail(Status::invalid_argument, "condensate parameter 'particle_number' must be positive");
    }
    if (p.box_length) {
        if (!(*p.box_length > 0.0))
            fail(Status::invalid_argument, "condensate parameter 'box_length' must be positive");
    }
    if (p.particle_number && p.box_length) {
        double v = *p.box_length * *p.box_length * *p.box_length;
        double n_box = *p.particle_number / v;
        if (std::abs(n_box - p.density) > 1e-12 * p.density) {
            std::ostringstream os;
            os << "inconsistent density: N/L^3 = " << n_box << " but density = " << p.density;
            fail(Status::invalid_argument, os.str());
        }
    }

    const UnitScales& u = scales_.units;
    double cell = scales_.units.E0 * u.L0 * u.L0 * u.L0;  // energy*volume unit
    n_hat_ = p.density * u.L0 * u.L0 * u.L0;
    lambda_hat_ = p.impurity_coupling / cell;

    diluteness_ = p.density * scales_.a_s * scales_.a_s * scales_.a_s;
    diluteness_warning_ = !(diluteness_ < p.diluteness_threshold);
}

Mode Condensate::make_mode(double k, double theta) const {
    return make_mode_natural(k * scales_.units.L0, theta);
}

Mode Condensate::make_mode_natural(double k, double theta) const {
    if (!(k > 0.0) || !std::isfinite(k))
        fail(Status::invalid_argument, "mode wavenumber k must be positive (the zero mode is excluded)");
    if (!(theta >= 0.0 && theta <= M_PI))
        fail(Status::invalid_argument, "mode angle theta must lie in [0, pi]");
    Mode m;
    m.k = k;
    m.theta = theta;
    m.cos_theta = std::cos(theta);
    if (std::abs(m.cos_theta) < 1e-15) m.cos_theta = 0.0;
    m.eps = 0.5 * k * k;
    m.omega = k * std::sqrt(1.0 + 0.25 * k * k);
    m.theta_k = std::atanh(1.0 / (m.omega + m.eps + 1.0));
    return m;
}

}  // namespace becrad
