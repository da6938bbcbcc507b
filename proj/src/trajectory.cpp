#include "trajectory.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

namespace becrad {

namespace {

void validate_variant(const Trajectory::Variant& var) {
    if (const auto* cv = std::get_if<ConstantVelocity>(&var)) {
        require(std::isfinite(cv->v), Status::invalid_argument,
                "ConstantVelocity: v must be finite");
    } else if (const auto* ed = std::get_if<ExponentialDecay>(&var)) {
        require(std::isfinite(ed->zeta0) && ed->zeta0 != 0.0, Status::invalid_argument,
                "ExponentialDecay: zeta0 must be finite and nonzero");
        require(std::isfinite(ed->gamma0) && ed->gamma0 > 0.0, Status::invalid_argument,
                "ExponentialDecay: gamma0 must be > 0");
    } else if (const auto* ua = std::get_if<UniformAccelerationRel>(&var)) {
        require(std::isfinite(ua->a) && ua->a > 0.0, Status::invalid_argument,
                "UniformAccelerationRel: a must be > 0");
        require(std::isfinite(ua->c) && ua->c > 0.0, Status::invalid_argument,
                "UniformAccelerationRel: c must be > 0");
    } else if (const auto* sp = std::get_if<Sampled>(&var)) {
        require(sp->order == 1 || sp->order == 3, Status::invalid_argument,
                "Sampled: interpolation order must be 1 or 3");
        std::size_t need = sp->order == 3 ? 3 : 2;
        require(sp->t.size() == sp->z.size(), Status::invalid_argument,
                "Sampled: t and z lengths differ");
        require(sp->t.size() >= need, Status::invalid_argument,
                "Sampled: too few points for the interpolation order");
        for (std::size_t i = 0; i < sp->t.size(); ++i) {
            require(std::isfinite(sp->t[i]) && std::isfinite(sp->z[i]),
                    Status::invalid_argument, "Sampled: non-finite entry");
            if (i > 0)
                require(sp->t[i] > sp->t[i - 1], Status::invalid_argument,
                        "Sampled: times must be strictly increasing");
        }
    }
}

}  // namespace

Trajectory::Trajectory(Variant var) : var_(std::move(var)) {
    validate_variant(var_);
    prepare_spline();
}

void Trajectory::prepare_spline() {
    const auto* sp = std::get_if<Sampled>(&var_);
    if (!sp || sp->order != 3) return;
    // natural cubic spline: tridiagonal solve for second derivatives
    const std::size_t n = sp->t.size();
    spline_m_.assign(n, 0.0);
    std::vector<double> c(n, 0.0), d(n, 0.0);
    for (std::size_t i = 1; i + 1 < n; ++i) {
        double h0 = sp->t[i] - sp->t[i - 1];
        double h1 = sp->t[i + 1] - sp->t[i];
        double s0 = (sp->z[i] - sp->z[i - 1]) / h0;
        double s1 = (sp->z[i + 1] - sp->z[i]) / h1;
        double diag = 2.0 * (h0 + h1) - h0 * c[i - 1];
        c[i] = h1 / diag;
        d[i] = (6.0 * (s1 - s0) - h0 * d[i - 1]) / diag;
    }
    for (std::size_t i = n - 1; i-- > 1;) spline_m_[i] = d[i] - c[i] * spline_m_[i + 1];
}

double Trajectory::position(double t) const {
    require(std::isfinite(t), Status::invalid_argument, "position: t must be finite");
    if (const auto* cv = std::get_if<ConstantVelocity>(&var_)) return cv->v * t + offset_;
    if (const auto* ed = std::get_if<ExponentialDecay>(&var_))
        return ed->zeta0 * std::exp(-ed->gamma0 * t) + offset_;
    if (const auto* ua = std::get_if<UniformAccelerationRel>(&var_)) {
        double l = ua->c * ua->c / ua->a;
        return std::hypot(l, ua->c * t) + offset_;
    }
    const auto& sp = std::get<Sampled>(var_);
    require(t >= sp.t.front() && t <= sp.t.back(), Status::domain_error,
            "Sampled trajectory evaluated outside its time span");
    auto it = std::upper_bound(sp.t.begin(), sp.t.end(), t);
    std::size_t i = it == sp.t.begin() ? 0 : static_cast<std::size_t>(it - sp.t.begin()) - 1;
    if (i + 1 >= sp.t.size()) i = sp.t.size() - 2;
    double h = sp.t[i + 1] - sp.t[i];
    double u = (t - sp.t[i]) / h;
    if (sp.order == 1) return sp.z[i] * (1.0 - u) + sp.z[i + 1] * u + offset_;
    double a = 1.0 - u;
    double cubic = a * sp.z[i] + u * sp.z[i + 1] +
                   h * h / 6.0 *
                       ((a * a * a - a) * spline_m_[i] + (u * u * u - u) * spline_m_[i + 1]);
    return cubic + offset_;
}

double Trajectory::speed(double t) const {
    require(std::isfinite(t), Status::invalid_argument, "speed: t must be finite");
    if (const auto* cv = std::get_if<ConstantVelocity>(&var_)) return cv->v;
    if (const auto* ed = std::get_if<ExponentialDecay>(&var_))
        return -ed->gamma0 * ed->zeta0 * std::exp(-ed->gamma0 * t);
    if (const auto* ua = std::get_if<UniformAccelerationRel>(&var_)) {
        double l = ua->c * ua->c / ua->a;
        return ua->c * ua->c * t / std::hypot(l, ua->c * t);
    }
    const auto& sp = std::get<Sampled>(var_);
    require(t >= sp.t.front() && t <= sp.t.back(), Status::domain_error,
            "Sampled trajectory evaluated outside its time span");
    auto it = std::upper_bound(sp.t.begin(), sp.t.end(), t);
    std::size_t i = it == sp.t.begin() ? 0 : static_cast<std::size_t>(it - sp.t.begin()) - 1;
    if (i + 1 >= sp.t.size()) i = sp.t.size() - 2;
    double h = sp.t[i + 1] - sp.t[i];
    double u = (t - sp.t[i]) / h;
    double slope = (sp.z[i + 1] - sp.z[i]) / h;
    if (sp.order == 1) return slope;
    double a = 1.0 - u;
    return slope + h / 6.0 *
                       ((3.0 * u * u - 1.0) * spline_m_[i + 1] -
                        (3.0 * a * a - 1.0) * spline_m_[i]);
}

double Trajectory::classical_potential(double zeta, double m_imp) const {
    require(std::isfinite(zeta) && std::isfinite(m_imp), Status::invalid_argument,
            "classical_potential: arguments must be finite");
    if (const auto* ed = std::get_if<ExponentialDecay>(&var_))
        return -0.5 * m_imp * ed->gamma0 * ed->gamma0 * zeta * zeta;
    if (const auto* ua = std::get_if<UniformAccelerationRel>(&var_)) {
        require(zeta != 0.0, Status::domain_error,
                "classical_potential: singular at zeta = 0 for uniform acceleration");
        double q = ua->c * ua->c * ua->c / (ua->a * zeta);
        return 0.5 * m_imp * q * q;
    }
    fail(Status::unsupported,
         "classical_potential defined only for exponential-decay and "
         "uniform-acceleration trajectories");
}

Trajectory Trajectory::translated(double zeta_c) const {
    require(std::isfinite(zeta_c), Status::invalid_argument,
            "translated: offset must be finite");
    Trajectory out = *this;
    out.offset_ += zeta_c;
    return out;
}

Trajectory Trajectory::rescaled(double length_scale, double time_scale) const {
    require(length_scale > 0.0 && time_scale > 0.0, Status::invalid_argument,
            "rescaled: scales must be > 0");
    const double L = length_scale, T = time_scale;
    Variant var = var_;
    if (auto* cv = std::get_if<ConstantVelocity>(&var)) {
        cv->v *= T / L;
    } else if (auto* ed = std::get_if<ExponentialDecay>(&var)) {
        ed->zeta0 /= L;
        ed->gamma0 *= T;
    } else if (auto* ua = std::get_if<UniformAccelerationRel>(&var)) {
        ua->a *= T * T / L;
        ua->c *= T / L;
    } else {
        auto& sp = std::get<Sampled>(var);
        for (double& ti : sp.t) ti /= T;
        for (double& zi : sp.z) zi /= L;
    }
    Trajectory out{std::move(var)};
    out.offset_ = offset_ / L;
    return out;
}

Trajectory::Diagnostics Trajectory::diagnostics(double t_lo, double t_hi, int samples,
                                                double hbar) const {
    require(t_hi > t_lo, Status::invalid_argument, "diagnostics: window must have t_hi > t_lo");
    require(samples >= 2, Status::invalid_argument, "diagnostics: need >= 2 samples");
    Diagnostics d;
    for (int i = 0; i < samples; ++i) {
        double t = t_lo + (t_hi - t_lo) * i / (samples - 1);
        d.max_speed = std::max(d.max_speed, std::abs(speed(t)));
    }
    if (const auto* ed = std::get_if<ExponentialDecay>(&var_)) {
        d.has_gamma_char = true;
        d.gamma_char = ed->gamma0;
        d.t_unruh = hbar * d.gamma_char / (2.0 * M_PI);
    } else if (const auto* ua = std::get_if<UniformAccelerationRel>(&var_)) {
        d.has_gamma_char = true;
        d.gamma_char = ua->a / ua->c;
        d.has_l_a = true;
        d.l_a = ua->c * ua->c / ua->a;
        d.t_unruh = hbar * d.gamma_char / (2.0 * M_PI);
        d.t_accel = hbar * ua->a / (2.0 * ua->c);
    }
    return d;
}

Trajectory load_sampled_csv(const std::string& path, int order) {
    std::ifstream in(path);
    require(in.good(), Status::invalid_argument,
            "cannot open sampled-trajectory CSV: " + path);
    Sampled sp;
    sp.order = order;
    std::string line;
    bool first = true;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::string row = line;
        std::replace(row.begin(), row.end(), ',', ' ');
        std::istringstream ss(row);
        double t, z;
        if (!(ss >> t >> z)) {
            require(first, Status::invalid_argument,
                    "sampled-trajectory CSV: unparseable row: " + line);
            first = false;  // tolerated header row
            continue;
        }
        first = false;
        sp.t.push_back(t);
        sp.z.push_back(z);
    }
    return Trajectory{std::move(sp)};
}

}  // namespace becrad
