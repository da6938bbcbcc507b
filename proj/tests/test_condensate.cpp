#include <cmath>

#include "condensate.hpp"
#include "doctest.h"

using namespace becrad;

namespace {

CondensateParams natural_params() {
    CondensateParams p;
    p.mass = 1.0;
    p.coupling = 1.0;
    p.density = 1.0;
    p.impurity_coupling = 0.3;
    return p;
}

CondensateParams physical_params() {
    CondensateParams p;
    p.mass = 2.0;
    p.coupling = 0.5;
    p.density = 4.0;
    p.impurity_coupling = 0.3;
    return p;
}

}  // namespace

TEST_CASE("natural parameters give unit scales of one") {
    const Condensate cond(natural_params());
    const DerivedScales& s = cond.scales();
    CHECK(s.c == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(s.xi == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(s.units.L0 == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(s.units.T0 == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(s.units.E0 == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(cond.density_natural() == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(cond.impurity_coupling_natural() == doctest::Approx(0.3).epsilon(1e-15));
    CHECK(cond.sigma0() == doctest::Approx(0.09).epsilon(1e-14));
}

TEST_CASE("physical parameters derive the documented scales") {
    const Condensate cond(physical_params());
    const DerivedScales& s = cond.scales();
    // c = sqrt(g n / M) = 1, xi = hbar/(2 M c), L0 = hbar/(M c), T0 = hbar/(M c^2)
    CHECK(s.c == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(s.xi == doctest::Approx(0.25).epsilon(1e-15));
    CHECK(s.units.L0 == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(s.units.T0 == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(s.units.E0 == doctest::Approx(2.0).epsilon(1e-15));
    CHECK(s.a_s == doctest::Approx(1.0 / (4.0 * M_PI)).epsilon(1e-15));
    CHECK(cond.diluteness() == doctest::Approx(4.0 * std::pow(1.0 / (4.0 * M_PI), 3)).epsilon(1e-14));
    CHECK_FALSE(cond.diluteness_warning());
    // n_hat = n L0^3, lambda_hat = lambda / (E0 L0^3)
    CHECK(cond.density_natural() == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(cond.impurity_coupling_natural() == doctest::Approx(1.2).epsilon(1e-15));
    // sigma0 is dimensionless
    CHECK(cond.sigma0() == doctest::Approx(0.5 * 1.44).epsilon(1e-14));
}

TEST_CASE("diluteness warning trips outside the dilute regime") {
    CondensateParams p = natural_params();
    p.coupling = 10.0;
    p.density = 10.0;
    const Condensate cond(p);
    CHECK(cond.diluteness() > 1e-2);
    CHECK(cond.diluteness_warning());
}

TEST_CASE("mode construction: dispersion and angle bookkeeping") {
    const Condensate cond(physical_params());
    // input k = 2 is natural k = 1
    const Mode m = cond.make_mode(2.0, 0.3);
    CHECK(m.k == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(m.eps == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(m.omega == doctest::Approx(std::sqrt(1.25)).epsilon(1e-15));
    CHECK(m.cos_theta == doctest::Approx(std::cos(0.3)).epsilon(1e-15));
    CHECK(m.kz() == doctest::Approx(std::cos(0.3)).epsilon(1e-15));

    const Condensate nat(natural_params());
    for (double k : {0.01, 0.3, 1.0, 3.0, 20.0}) {
        const Mode mn = nat.make_mode_natural(k, 1.0);
        // omega^2 = eps (eps + 2) in natural units
        CHECK(mn.omega * mn.omega ==
              doctest::Approx(mn.eps * (mn.eps + 2.0)).epsilon(1e-14));
        // Bogoliubov angle identity: tanh(2 theta_k) (eps + 1) = 1
        CHECK(std::tanh(2.0 * mn.theta_k) * (mn.eps + 1.0) ==
              doctest::Approx(1.0).epsilon(1e-12));
    }
}

TEST_CASE("transverse modes snap to exactly zero k_z") {
    const Condensate cond(natural_params());
    const Mode m = cond.make_mode_natural(1.0, M_PI / 2.0);
    CHECK(m.cos_theta == 0.0);
    CHECK(m.kz() == 0.0);
}

TEST_CASE("invalid condensate parameters are rejected") {
    CondensateParams p = natural_params();
    p.mass = 0.0;
    CHECK_THROWS_AS(Condensate{p}, Error);
    p = natural_params();
    p.coupling = -1.0;
    CHECK_THROWS_AS(Condensate{p}, Error);
    p = natural_params();
    p.density = 0.0;
    CHECK_THROWS_AS(Condensate{p}, Error);
    try {
        CondensateParams bad = natural_params();
        bad.mass = -2.0;
        Condensate c(bad);
        FAIL("expected a throw");
    } catch (const Error& e) {
        CHECK(e.status() == Status::invalid_argument);
    }
}

TEST_CASE("mode construction rejects non-positive k") {
    const Condensate cond(natural_params());
    CHECK_THROWS_AS(cond.make_mode_natural(0.0, 1.0), Error);
    CHECK_THROWS_AS(cond.make_mode(-1.0, 1.0), Error);
}
