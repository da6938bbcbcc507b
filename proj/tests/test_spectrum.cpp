#include <cmath>
#include <complex>
#include <vector>

#include "condensate.hpp"
#include "doctest.h"
#include "oracles.hpp"
#include "phase_integral.hpp"
#include "specfun.hpp"
#include "spectrum.hpp"
#include "trajectory.hpp"

using namespace becrad;

namespace {

constexpr double TWO_PI_CUBED = 248.05021344239853;  // (2 pi)^3

Condensate natural_cond(double lambda = 0.3) {
    CondensateParams p;
    p.mass = 1.0;
    p.coupling = 1.0;
    p.density = 1.0;
    p.impurity_coupling = lambda;
    return Condensate(p);
}

Condensate boxed_cond(double N, double L, double lambda = 0.3) {
    CondensateParams p;
    p.mass = 1.0;
    p.coupling = 1.0;
    p.density = 1.0;
    p.impurity_coupling = lambda;
    p.particle_number = N;
    p.box_length = L;
    return Condensate(p);
}

}  // namespace

TEST_CASE("occupation density implements the boson counting formula") {
    const Condensate cond = natural_cond();
    const Mode m = cond.make_mode_natural(1.7, 0.9);
    PhaseIntegral I;
    I.value = Complex(2.0, -1.0);
    I.provenance = Provenance::numeric;
    const SpectrumPoint p = occupation_density(cond, m, I);
    const double expect =
        cond.sigma0() * (m.eps / m.omega) * 5.0 * m.k * m.k / TWO_PI_CUBED;
    CHECK(p.dn_dk_domega == doctest::Approx(expect).epsilon(1e-15));
    CHECK(p.dE_dk_domega == doctest::Approx(m.omega * p.dn_dk_domega).epsilon(1e-15));
    CHECK(p.provenance == Provenance::numeric);
    CHECK(p.omega == m.omega);
    CHECK(p.dn_dk_domega >= 0.0);
}

TEST_CASE("delta(omega) remnants are consistent: impossible off-axis, harmless at k_z = 0") {
    const Condensate cond = natural_cond();
    PhaseIntegral I;
    I.value = Complex(0.0, 0.0);
    I.flag = DistributionFlag::delta_omega;
    I.flag_coefficient = 1e12;  // must not leak into the density
    const Mode off = cond.make_mode_natural(1.0, 0.3);
    CHECK_THROWS_AS(occupation_density(cond, off, I), Error);
    const Mode tr = cond.make_mode_natural(1.0, M_PI / 2.0);
    CHECK(occupation_density(cond, tr, I).dn_dk_domega == 0.0);
}

TEST_CASE("full-line decay spectrum equals the Planck-factor formula") {
    const Condensate cond = natural_cond();
    const double g0 = 0.9, k = 1.3, th = 0.8;
    const Mode m = cond.make_mode_natural(k, th);
    const double y = 2.0 * M_PI * m.omega / g0;
    const double pref =
        cond.sigma0() * (m.eps / m.omega) * k * k / TWO_PI_CUBED * 2.0 * M_PI / (m.omega * g0);
    const SpectrumPoint sup = exponential_spectrum(cond, g0, k, th, Hemisphere::upper);
    const SpectrumPoint enh = exponential_spectrum(cond, g0, k, th, Hemisphere::lower);
    CHECK(sup.dn_dk_domega == doctest::Approx(pref / std::expm1(y)).epsilon(1e-12));
    CHECK(enh.dn_dk_domega == doctest::Approx(pref / -std::expm1(-y)).epsilon(1e-12));
    // occupation identity: enhanced = suppressed + spontaneous
    CHECK(enh.dn_dk_domega - sup.dn_dk_domega ==
          doctest::Approx(pref).epsilon(1e-12));
    // transverse modes are silent
    CHECK(exponential_spectrum(cond, g0, k, M_PI / 2.0, Hemisphere::upper).dn_dk_domega == 0.0);
    CHECK(exponential_spectrum(cond, g0, k, M_PI / 2.0, Hemisphere::lower).dn_dk_domega == 0.0);
}

TEST_CASE("windowed decay spectrum agrees with direct quadrature") {
    const Condensate cond = natural_cond();
    const Trajectory traj(ExponentialDecay{1.0, 1.0});
    const Window w = Window::finite(0.0, 2.0);
    const double k = 1.0, th = M_PI / 3.0;
    const SpectrumPoint closed = exponential_spectrum_windowed(cond, 1.0, 1.0, w, k, th);
    const Mode m = cond.make_mode_natural(k, th);
    const PhaseIntegral num = integrate_numeric(m, traj, w, RegulatorSpec::none_spec(), 1e-11);
    const SpectrumPoint viaq = occupation_density(cond, m, num);
    CHECK(closed.dn_dk_domega ==
          doctest::Approx(viaq.dn_dk_domega).epsilon(1e-8));
    CHECK(closed.provenance == Provenance::closed_form);
}

TEST_CASE("hyperbolic spectrum matches the Bessel closed form and reflects") {
    const Condensate cond = natural_cond();
    const double a = 1.0, k = 2.0, th = M_PI / 3.0;
    const Mode m = cond.make_mode_natural(k, th);
    const double mu = (k / a) * std::sqrt(std::sin(th) * std::sin(th) + 0.25 * k * k);
    const double sh = std::sinh(std::atanh(m.kz() / m.omega));
    const double amp2 = (4.0 / (a * a)) * std::pow(specfun::bessel_k1(mu) * sh, 2);
    const double expect = cond.sigma0() * (m.eps / m.omega) * amp2 * k * k / TWO_PI_CUBED;
    const SpectrumPoint p = uniform_acceleration_spectrum(cond, a, k, th);
    CHECK(p.dn_dk_domega == doctest::Approx(expect).epsilon(1e-13));
    const SpectrumPoint q = uniform_acceleration_spectrum(cond, a, k, M_PI - th);
    CHECK(q.dn_dk_domega == doctest::Approx(p.dn_dk_domega).epsilon(1e-14));
}

TEST_CASE("infrared decay law: dn/dk dOmega -> sigma0 k / (2 (2 pi)^3)") {
    const Condensate cond = natural_cond();
    const double k = 1e-6, th = 1.0;
    const SpectrumPoint law = asymptotic_ir_exponential(cond, k, th);
    CHECK(law.dn_dk_domega ==
          doctest::Approx(cond.sigma0() * k / (2.0 * TWO_PI_CUBED)).epsilon(1e-15));
    for (Hemisphere h : {Hemisphere::upper, Hemisphere::lower}) {
        const SpectrumPoint exact = exponential_spectrum(cond, 1.0, k, th, h);
        CHECK(exact.dn_dk_domega == doctest::Approx(law.dn_dk_domega).epsilon(1e-4));
    }
}

TEST_CASE("ultraviolet decay law on the enhanced hemisphere") {
    const Condensate cond = natural_cond();
    const double g0 = 1.0, k = 40.0, th = 2.0 * M_PI / 3.0;
    const SpectrumPoint law = asymptotic_uv_exponential_lower(cond, g0, k, th);
    CHECK(law.dn_dk_domega ==
          doctest::Approx(cond.sigma0() / (2.0 * M_PI * M_PI * g0)).epsilon(1e-10));
    const SpectrumPoint exact = exponential_spectrum(cond, g0, k, th, Hemisphere::lower);
    CHECK(exact.dn_dk_domega == doctest::Approx(law.dn_dk_domega).epsilon(1e-2));
}

TEST_CASE("infrared windowed law: quadratic in duration, cubic in k") {
    const Condensate cond = natural_cond();
    const double T = 2.0, k = 1e-4, th = 0.7;
    const SpectrumPoint law = asymptotic_ir_windowed(cond, T, k, th);
    CHECK(law.dn_dk_domega ==
          doctest::Approx(cond.sigma0() * T * T * k * k * k / (2.0 * TWO_PI_CUBED))
              .epsilon(1e-15));
    const SpectrumPoint exact =
        exponential_spectrum_windowed(cond, 1.0, 1.0, Window::finite(0.0, T), k, th);
    CHECK(exact.dn_dk_domega == doctest::Approx(law.dn_dk_domega).epsilon(1e-3));
}

TEST_CASE("infrared hyperbolic law reproduces the closed form at small k") {
    const Condensate cond = natural_cond();
    const double a = 0.7, k = 1e-5, th = 1.1;
    const SpectrumPoint law = asymptotic_ir_uniform(cond, a, k, th);
    const SpectrumPoint exact = uniform_acceleration_spectrum(cond, a, k, th);
    CHECK(exact.dn_dk_domega == doctest::Approx(law.dn_dk_domega).epsilon(1e-6));
    // the infrared limit is acceleration independent
    const SpectrumPoint law2 = asymptotic_ir_uniform(cond, 2.9, k, th);
    CHECK(law2.dn_dk_domega == doctest::Approx(law.dn_dk_domega).epsilon(1e-15));
}

TEST_CASE("ultraviolet hyperbolic law tracks the Bessel decay") {
    const Condensate cond = natural_cond();
    const double a = 2.0, k = 8.0, th = M_PI / 4.0;
    const SpectrumPoint law = asymptotic_uv_uniform(cond, a, k, th);
    const SpectrumPoint exact = uniform_acceleration_spectrum(cond, a, k, th);
    CHECK(exact.dn_dk_domega == doctest::Approx(law.dn_dk_domega).epsilon(0.05));
}

TEST_CASE("steady motion below the sound speed radiates nothing") {
    const Condensate cond = natural_cond();
    const Trajectory traj(ConstantVelocity{0.5});
    EnergyGrid g;
    const EnergyReport rep = total_energy(cond, traj, Window::full_line(),
                                          RegulatorSpec::none_spec(), 10.0, g);
    CHECK(rep.total == 0.0);
    CHECK(rep.upper == 0.0);
    CHECK(rep.lower == 0.0);
    CHECK_FALSE(rep.divergent);
}

TEST_CASE("steady supersonic motion is routed to the rate, not an energy") {
    const Condensate cond = natural_cond();
    const Trajectory traj(ConstantVelocity{2.0});
    EnergyGrid g;
    try {
        total_energy(cond, traj, Window::full_line(), RegulatorSpec::none_spec(), 10.0, g);
        FAIL("expected a throw");
    } catch (const Error& e) {
        CHECK(e.status() == Status::unsupported);
        CHECK(std::string(e.what()).find("cherenkov_rate") != std::string::npos);
    }
}

TEST_CASE("full-line decay energy: converged hemisphere, divergent hemisphere") {
    const Condensate cond = natural_cond();
    const Trajectory traj(ExponentialDecay{1.0, 1.0});
    EnergyGrid g;
    g.tol = 1e-8;
    const EnergyReport r20 = total_energy(cond, traj, Window::full_line(),
                                          RegulatorSpec::none_spec(), 20.0, g);
    CHECK(r20.total == r20.upper + r20.lower);
    CHECK(r20.divergent);
    CHECK(r20.tail_exponent == doctest::Approx(2.0).epsilon(0.1));
    CHECK(r20.lower > 100.0 * r20.upper);  // Planck suppression above

    const EnergyReport r40 = total_energy(cond, traj, Window::full_line(),
                                          RegulatorSpec::none_spec(), 40.0, g);
    // cubic cutoff growth of the divergent hemisphere
    CHECK(r40.lower / r20.lower == doctest::Approx(8.0).epsilon(0.15));
    // the suppressed hemisphere has long converged
    CHECK(r40.upper == doctest::Approx(r20.upper).epsilon(1e-6));
    // and matches the quadratic ultraviolet law's integral scale
    const double uv_coeff = cond.sigma0() / (2.0 * M_PI);
    CHECK(r20.lower == doctest::Approx(uv_coeff * std::pow(20.0, 3) / 3.0).epsilon(0.1));
}

TEST_CASE("windowed decay energy dwarfs a near-instant window") {
    // E(T) is not monotone in T: the sharp window edges radiate an O(1)
    // oscillating contribution. But a window much shorter than both 1/gamma0
    // and 1/omega(k_max) emits ~ T^2 and must sit far below a settled one.
    const Condensate cond = natural_cond();
    const Trajectory traj(ExponentialDecay{1.0, 1.0});
    EnergyGrid g;
    g.n_theta = 12;
    g.tol = 1e-4;
    const EnergyReport tiny = total_energy(cond, traj, Window::finite(0.0, 0.1),
                                           RegulatorSpec::none_spec(), 3.0, g);
    const EnergyReport settled = total_energy(cond, traj, Window::finite(0.0, 2.0),
                                              RegulatorSpec::none_spec(), 3.0, g);
    CHECK(tiny.total > 0.0);
    CHECK(settled.total > 10.0 * tiny.total);
    CHECK(settled.total == settled.upper + settled.lower);
    CHECK(settled.upper >= 0.0);
    CHECK(settled.lower >= 0.0);
}

TEST_CASE("hyperbolic energy scales as sqrt(a) in the weak-acceleration regime") {
    const Condensate cond = natural_cond();
    EnergyGrid g;
    g.tol = 1e-6;
    const Trajectory t1(UniformAccelerationRel{0.02, 1.0});
    const Trajectory t2(UniformAccelerationRel{0.08, 1.0});
    const EnergyReport e1 = total_energy(cond, t1, Window::full_line(),
                                         RegulatorSpec::none_spec(), 5.0, g);
    const EnergyReport e2 = total_energy(cond, t2, Window::full_line(),
                                         RegulatorSpec::none_spec(), 5.0, g);
    CHECK(e1.total > 0.0);
    CHECK_FALSE(e1.divergent);
    CHECK(e2.total / e1.total == doctest::Approx(2.0).epsilon(0.02));
    // absolute weak-acceleration constant
    CHECK(e1.total / (cond.sigma0() * std::sqrt(0.02)) ==
          doctest::Approx(0.2058).epsilon(0.03));
    // hemispheres are mirror images for this trajectory
    CHECK(e1.upper == doctest::Approx(e1.lower).epsilon(1e-12));
}

TEST_CASE("hyperbolic energy route requires natural-unit trajectories") {
    const Condensate cond = natural_cond();
    const Trajectory traj(UniformAccelerationRel{1.0, 2.0});
    EnergyGrid g;
    try {
        total_energy(cond, traj, Window::full_line(), RegulatorSpec::none_spec(), 5.0, g);
        FAIL("expected a throw");
    } catch (const Error& e) {
        CHECK(e.status() == Status::unsupported);
    }
}

TEST_CASE("Landau-criterion radiation rate") {
    const Condensate cond = natural_cond();
    CHECK(cherenkov_rate(cond, 0.8, 10.0) == 0.0);
    CHECK(cherenkov_rate(cond, 1.0, 10.0) == 0.0);
    const double v = 1.5;
    const double kc = 2.0 * std::sqrt(v * v - 1.0);
    CHECK(cherenkov_rate(cond, v, 10.0) ==
          doctest::Approx(cond.sigma0() * std::pow(kc, 4) / (16.0 * M_PI * v))
              .epsilon(1e-15));
    // the cutoff caps the emission cone
    CHECK(cherenkov_rate(cond, v, 1.5) ==
          doctest::Approx(cond.sigma0() * std::pow(1.5, 4) / (16.0 * M_PI * v))
              .epsilon(1e-15));
    CHECK_THROWS_AS(cherenkov_rate(cond, -1.0, 10.0), Error);
}

TEST_CASE("depletion leading term is the uniform-gas formula") {
    const Condensate cond = boxed_cond(512.0, 8.0);
    const Trajectory traj(ExponentialDecay{1.0, 1.0});
    const DepletionReport rep = depletion(cond, traj, Window::finite(0.0, 2.0),
                                          RegulatorSpec::none_spec(), 2.0, 2.0);
    CHECK(rep.leading ==
          doctest::Approx((8.0 / 3.0) * std::sqrt(cond.diluteness() / M_PI))
              .epsilon(1e-15));
    CHECK(rep.modes_used == 80);  // lattice vectors with |n|^2 <= 6 at L = 8, k_max = 2
    CHECK(rep.correction > 0.0);
    CHECK(rep.box_length == 8.0);
    CHECK(rep.particle_number == 512.0);

    // frozen value of the gas formula at diluteness 1e-4
    CondensateParams p;
    p.mass = 1.0;
    p.density = 1.0;
    p.coupling = 4.0 * M_PI * std::cbrt(1e-4);
    p.impurity_coupling = 0.0;
    const Condensate dilute(p);
    CHECK((8.0 / 3.0) * std::sqrt(dilute.diluteness() / M_PI) ==
          doctest::Approx(oracle::depletion_leading_1em4).epsilon(1e-12));
}

TEST_CASE("impurity depletion correction scales as the squared coupling and as 1/N") {
    const Trajectory traj(ExponentialDecay{1.0, 1.0});
    const Window w = Window::finite(0.0, 2.0);
    const DepletionReport a = depletion(boxed_cond(512.0, 8.0, 0.3), traj, w,
                                        RegulatorSpec::none_spec(), 2.0, 2.0);
    const DepletionReport b = depletion(boxed_cond(512.0, 8.0, 0.6), traj, w,
                                        RegulatorSpec::none_spec(), 2.0, 2.0);
    CHECK(b.correction / a.correction == doctest::Approx(4.0).epsilon(1e-10));
    // lambda = 0 turns the impurity off entirely
    const DepletionReport off = depletion(boxed_cond(512.0, 8.0, 0.0), traj, w,
                                          RegulatorSpec::none_spec(), 2.0, 2.0);
    CHECK(off.correction == 0.0);
    CHECK(off.modes_used == a.modes_used);
    // doubling N at fixed density roughly halves the relative correction
    const double L2 = 8.0 * std::cbrt(2.0);
    const DepletionReport big = depletion(boxed_cond(1024.0, L2, 0.3), traj, w,
                                          RegulatorSpec::none_spec(), 2.0, 2.0);
    const double ratio = big.correction / a.correction;
    CHECK(ratio > 0.45);
    CHECK(ratio < 0.55);
}

TEST_CASE("least-squares helpers") {
    std::vector<double> x = {1.0, 2.0, 3.0, 4.0};
    std::vector<double> y;
    for (double v : x) y.push_back(3.0 * v - 2.0);
    const LinFit f = linear_fit(x, y);
    CHECK(f.slope == doctest::Approx(3.0).epsilon(1e-14));
    CHECK(f.intercept == doctest::Approx(-2.0).epsilon(1e-12));

    std::vector<double> yk;
    for (double v : x) yk.push_back(5.0 * v * v * v);
    CHECK(loglog_slope(x, yk) == doctest::Approx(3.0).epsilon(1e-12));

    std::vector<double> bx, by;
    std::vector<double> xs = {0, 1, 2, 3, 4, 5};
    std::vector<double> ys = {1, 7, 3, 9, 2, 4};
    block_max(xs, ys, 2, bx, by);
    REQUIRE(by.size() == 3);
    CHECK(by[0] == 7);
    CHECK(by[1] == 9);
    CHECK(by[2] == 4);
}
