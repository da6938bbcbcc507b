#include <cmath>
#include <cstring>
#include <string>

#include "becrad.h"
#include "condensate.hpp"
#include "doctest.h"
#include "json.hpp"
#include "oracles.hpp"
#include "phase_integral.hpp"
#include "spectrum.hpp"

// Covariance tests: every C-boundary result in input units must equal the
// core natural-unit result scaled by the appropriate power of L0/T0/E0.

namespace {

br_condensate_params physical_params() {
    br_condensate_params p{};
    p.mass = 2.0;
    p.coupling = 0.5;
    p.density = 4.0;
    p.impurity_coupling = 0.3;
    p.hbar = 1.0;
    return p;
}

struct CondGuard {
    br_condensate* c = nullptr;
    ~CondGuard() { br_condensate_destroy(c); }
};
struct TrajGuard {
    br_trajectory* t = nullptr;
    ~TrajGuard() { br_trajectory_destroy(t); }
};

becrad::Condensate core_physical() {
    becrad::CondensateParams p;
    p.mass = 2.0;
    p.coupling = 0.5;
    p.density = 4.0;
    p.impurity_coupling = 0.3;
    return becrad::Condensate(p);
}

}  // namespace

TEST_CASE("version string and error-state lifecycle") {
    CHECK(std::string(br_version()) == "1.0.0");
    CHECK(br_condensate_create(nullptr, nullptr) == BR_INVALID_ARGUMENT);
    CHECK(std::string(br_last_error()).find("null") != std::string::npos);
    CondGuard g;
    const br_condensate_params p = physical_params();
    REQUIRE(br_condensate_create(&p, &g.c) == BR_OK);
    CHECK(std::string(br_last_error()).empty());  // success clears the slot
}

TEST_CASE("parameter validation surfaces the offending field") {
    br_condensate_params p = physical_params();
    p.mass = -1.0;
    br_condensate* c = nullptr;
    CHECK(br_condensate_create(&p, &c) == BR_INVALID_ARGUMENT);
    CHECK(std::string(br_last_error()).find("mass") != std::string::npos);
    CHECK(c == nullptr);
}

TEST_CASE("unit and derived scales of a physical condensate") {
    CondGuard g;
    const br_condensate_params p = physical_params();
    REQUIRE(br_condensate_create(&p, &g.c) == BR_OK);
    br_unit_scales u{};
    REQUIRE(br_condensate_unit_scales(g.c, &u) == BR_OK);
    // c = sqrt(g n / M) = 1, L0 = hbar/(M c), T0 = hbar/(M c^2), E0 = M c^2
    CHECK(u.L0 == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(u.T0 == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(u.E0 == doctest::Approx(2.0).epsilon(1e-15));
    br_derived_scales d{};
    REQUIRE(br_condensate_derived(g.c, &d) == BR_OK);
    CHECK(d.sound_speed == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(d.coherence_length == doctest::Approx(0.25).epsilon(1e-15));
    CHECK(d.scattering_length == doctest::Approx(1.0 / (4.0 * M_PI)).epsilon(1e-15));
    CHECK(d.diluteness == doctest::Approx(4.0 * std::pow(d.scattering_length, 3)).epsilon(1e-15));
    CHECK(d.diluteness_warning == 0);
}

TEST_CASE("mode quantities come back in input units") {
    CondGuard g;
    const br_condensate_params p = physical_params();
    REQUIRE(br_condensate_create(&p, &g.c) == BR_OK);
    br_mode m{};
    REQUIRE(br_condensate_mode(g.c, 2.0, M_PI / 3.0, &m) == BR_OK);  // k_hat = 1
    const becrad::Mode ref = core_physical().make_mode_natural(1.0, M_PI / 3.0);
    CHECK(m.k == doctest::Approx(2.0).epsilon(1e-15));
    CHECK(m.omega == doctest::Approx(ref.omega / 0.5).epsilon(1e-15));
    CHECK(m.epsilon == doctest::Approx(ref.eps * 2.0).epsilon(1e-15));
    CHECK(m.kz == doctest::Approx(2.0 * 0.5).epsilon(1e-14));
    CHECK(br_condensate_mode(g.c, -1.0, 0.5, &m) == BR_INVALID_ARGUMENT);
}

TEST_CASE("closed decay integral is unit covariant") {
    CondGuard g;
    const br_condensate_params p = physical_params();
    REQUIRE(br_condensate_create(&p, &g.c) == BR_OK);
    br_window w{};
    w.t_i = 0.0;
    w.t_f = 1.0;  // natural (0, 2)
    br_phase_integral out{};
    // zeta0 = 2 -> zeta_hat = 4, gamma0 = 2 -> gamma_hat = 1, k = 2 -> k_hat = 1
    REQUIRE(br_phase_integral_closed_exponential(g.c, 2.0, 2.0, 2.0, M_PI / 3.0, &w, &out) ==
            BR_OK);
    const becrad::Condensate core = core_physical();
    const becrad::PhaseIntegral ref = becrad::integrate_closed_exponential(
        core.make_mode_natural(1.0, M_PI / 3.0), 4.0, 1.0, becrad::Window::finite(0.0, 2.0));
    CHECK(out.value_re == doctest::Approx(ref.value.real() * 0.5).epsilon(1e-14));
    CHECK(out.value_im == doctest::Approx(ref.value.imag() * 0.5).epsilon(1e-14));
    CHECK(out.provenance == BR_PROV_CLOSED_FORM);
}

TEST_CASE("numeric phase integral matches the closed route through the C boundary") {
    CondGuard g;
    const br_condensate_params p = physical_params();
    REQUIRE(br_condensate_create(&p, &g.c) == BR_OK);
    TrajGuard t;
    REQUIRE(br_trajectory_exponential_decay(2.0, 4.0, &t.t) == BR_OK);
    br_window w{};
    w.t_i = 0.0;
    w.t_f = 0.5;
    br_phase_integral num{}, closed{};
    REQUIRE(br_phase_integral_numeric(g.c, t.t, 2.0, M_PI / 3.0, &w, nullptr, 1e-10, &num) ==
            BR_OK);
    REQUIRE(br_phase_integral_closed_exponential(g.c, 2.0, 4.0, 2.0, M_PI / 3.0, &w, &closed) ==
            BR_OK);
    CHECK(num.value_re == doctest::Approx(closed.value_re).epsilon(1e-8));
    CHECK(num.value_im == doctest::Approx(closed.value_im).epsilon(1e-8));
}

TEST_CASE("hyperbolic closed integral is unit covariant") {
    CondGuard g;
    const br_condensate_params p = physical_params();
    REQUIRE(br_condensate_create(&p, &g.c) == BR_OK);
    br_phase_integral out{};
    // a = 2 -> a_hat = a T0^2 / L0 = 1; k = 4 -> k_hat = 2
    REQUIRE(br_phase_integral_closed_uniform_acceleration(g.c, 2.0, 4.0, M_PI / 3.0, &out) ==
            BR_OK);
    CHECK(out.value_re == doctest::Approx(0.0).epsilon(1e-15));
    CHECK(out.value_im == doctest::Approx(oracle::ua_closed_im * 0.5).epsilon(1e-13));
    CHECK(out.flag == BR_FLAG_DELTA_MU);
}

TEST_CASE("spectrum points scale with L0 and E0") {
    CondGuard g;
    const br_condensate_params p = physical_params();
    REQUIRE(br_condensate_create(&p, &g.c) == BR_OK);
    br_spectrum_point sp{};
    REQUIRE(br_spectrum_exponential(g.c, 2.0, 2.0, 0.8, BR_HEMI_UPPER, &sp) == BR_OK);
    const becrad::Condensate core = core_physical();
    const becrad::SpectrumPoint ref =
        becrad::exponential_spectrum(core, 1.0, 1.0, 0.8, becrad::Hemisphere::upper);
    CHECK(sp.k == doctest::Approx(2.0).epsilon(1e-15));
    CHECK(sp.omega == doctest::Approx(ref.omega / 0.5).epsilon(1e-14));
    CHECK(sp.dn_dk_domega == doctest::Approx(ref.dn_dk_domega * 0.5).epsilon(1e-14));
    CHECK(sp.dE_dk_domega == doctest::Approx(ref.dE_dk_domega * 0.5 * 2.0).epsilon(1e-14));

    br_window w{};
    w.t_i = 0.0;
    w.t_f = 1.0;
    br_spectrum_point wp{};
    REQUIRE(br_spectrum_exponential_windowed(g.c, 2.0, 2.0, &w, 2.0, 0.8, &wp) == BR_OK);
    const becrad::SpectrumPoint wref = becrad::exponential_spectrum_windowed(
        core, 1.0, 4.0, becrad::Window::finite(0.0, 2.0), 1.0, 0.8);
    CHECK(wp.dn_dk_domega == doctest::Approx(wref.dn_dk_domega * 0.5).epsilon(1e-14));

    br_spectrum_point up{};
    REQUIRE(br_spectrum_uniform_acceleration(g.c, 2.0, 4.0, M_PI / 3.0, &up) == BR_OK);
    const becrad::SpectrumPoint uref =
        becrad::uniform_acceleration_spectrum(core, 1.0, 2.0, M_PI / 3.0);
    CHECK(up.dn_dk_domega == doctest::Approx(uref.dn_dk_domega * 0.5).epsilon(1e-14));

    br_spectrum_point ap{};
    REQUIRE(br_spectrum_asymptotic(g.c, BR_ASY_IR_EXPONENTIAL, 0.0, 2.0, 0.8, &ap) == BR_OK);
    const becrad::SpectrumPoint aref = becrad::asymptotic_ir_exponential(core, 1.0, 0.8);
    CHECK(ap.dn_dk_domega == doctest::Approx(aref.dn_dk_domega * 0.5).epsilon(1e-14));
    CHECK(ap.provenance == BR_PROV_ASYMPTOTIC);
}

TEST_CASE("energy density respects dE = hbar omega dn at hbar != 1") {
    br_condensate_params p{};
    p.mass = 1.0;
    p.coupling = 1.0;
    p.density = 1.0;
    p.impurity_coupling = 0.3;
    p.hbar = 2.0;
    CondGuard g;
    REQUIRE(br_condensate_create(&p, &g.c) == BR_OK);
    br_unit_scales u{};
    REQUIRE(br_condensate_unit_scales(g.c, &u) == BR_OK);
    CHECK(u.T0 * u.E0 == doctest::Approx(2.0).epsilon(1e-15));  // T0 E0 = hbar
    br_spectrum_point sp{};
    REQUIRE(br_spectrum_exponential(g.c, 1.0, 0.7, 1.1, BR_HEMI_LOWER, &sp) == BR_OK);
    CHECK(sp.dE_dk_domega ==
          doctest::Approx(2.0 * sp.omega * sp.dn_dk_domega).epsilon(1e-14));
}

TEST_CASE("hemisphere selector is validated") {
    CondGuard g;
    const br_condensate_params p = physical_params();
    REQUIRE(br_condensate_create(&p, &g.c) == BR_OK);
    br_spectrum_point sp{};
    CHECK(br_spectrum_exponential(g.c, 4.0, 2.0, 0.8, 0, &sp) == BR_INVALID_ARGUMENT);
    CHECK(std::string(br_last_error()).find("hemisphere") != std::string::npos);
}

TEST_CASE("occupation round-trips a phase integral through input units") {
    CondGuard g;
    const br_condensate_params p = physical_params();
    REQUIRE(br_condensate_create(&p, &g.c) == BR_OK);
    br_window w{};
    w.t_i = 0.0;
    w.t_f = 0.5;
    br_phase_integral I{};
    REQUIRE(br_phase_integral_closed_exponential(g.c, 2.0, 4.0, 2.0, 0.9, &w, &I) == BR_OK);
    br_spectrum_point via{}, direct{};
    REQUIRE(br_spectrum_occupation(g.c, 2.0, 0.9, &I, &via) == BR_OK);
    REQUIRE(br_spectrum_exponential_windowed(g.c, 4.0, 2.0, &w, 2.0, 0.9, &direct) == BR_OK);
    CHECK(via.dn_dk_domega == doctest::Approx(direct.dn_dk_domega).epsilon(1e-14));
    CHECK(via.dE_dk_domega == doctest::Approx(direct.dE_dk_domega).epsilon(1e-14));
}

TEST_CASE("total energy and radiation rate scale with E0 and E0/T0") {
    CondGuard g;
    const br_condensate_params p = physical_params();
    REQUIRE(br_condensate_create(&p, &g.c) == BR_OK);
    TrajGuard t;
    REQUIRE(br_trajectory_exponential_decay(2.0, 2.0, &t.t) == BR_OK);
    br_window w{};
    w.infinite_i = 1;
    w.infinite_f = 1;
    br_energy_grid grid{};
    grid.tol = 1e-8;
    br_energy_report rep{};
    // k_max = 40 input -> 20 natural
    REQUIRE(br_total_energy(g.c, t.t, &w, nullptr, 40.0, &grid, &rep) == BR_OK);
    const becrad::Condensate core = core_physical();
    becrad::EnergyGrid cg;
    cg.tol = 1e-8;
    const becrad::EnergyReport cref =
        becrad::total_energy(core, becrad::Trajectory(becrad::ExponentialDecay{4.0, 1.0}),
                             becrad::Window::full_line(), becrad::RegulatorSpec::none_spec(),
                             20.0, cg);
    CHECK(rep.total == doctest::Approx(cref.total * 2.0).epsilon(1e-12));
    CHECK(rep.upper == doctest::Approx(cref.upper * 2.0).epsilon(1e-12));
    CHECK(rep.divergent == 1);
    CHECK(rep.k_max == doctest::Approx(40.0).epsilon(1e-15));

    double rate = 0.0;
    // v = 1.5 input -> v_hat = v T0 / L0 = 1.5; k_max = 20 input -> 10 natural
    REQUIRE(br_cherenkov_rate(g.c, 1.5, 20.0, &rate) == BR_OK);
    const double rate_nat = becrad::cherenkov_rate(core, 1.5, 10.0);
    CHECK(rate == doctest::Approx(rate_nat * 2.0 / 0.5).epsilon(1e-14));
    REQUIRE(br_cherenkov_rate(g.c, 1.0, 20.0, &rate) == BR_OK);
    CHECK(rate == 0.0);
}

TEST_CASE("depletion through the C boundary") {
    br_condensate_params p = physical_params();
    p.particle_number = 256.0;  // density 4 = N / L^3 with L = 4
    p.box_length = 4.0;
    CondGuard g;
    REQUIRE(br_condensate_create(&p, &g.c) == BR_OK);
    TrajGuard t;
    REQUIRE(br_trajectory_exponential_decay(2.0, 4.0, &t.t) == BR_OK);
    br_window w{};
    w.t_i = 0.0;
    w.t_f = 0.5;
    br_depletion_report rep{};
    // k_max = 4 input -> 2 natural, t = 0.5 input -> 1 natural
    REQUIRE(br_depletion(g.c, t.t, &w, nullptr, 4.0, 0.5, &rep) == BR_OK);
    CHECK(rep.modes_used == 80);
    br_derived_scales d{};
    REQUIRE(br_condensate_derived(g.c, &d) == BR_OK);
    CHECK(rep.leading ==
          doctest::Approx((8.0 / 3.0) * std::sqrt(d.diluteness / M_PI)).epsilon(1e-14));
    CHECK(rep.correction > 0.0);
    CHECK(rep.box_length == 4.0);
    CHECK(rep.particle_number == 256.0);
    CHECK(rep.k_max == doctest::Approx(4.0).epsilon(1e-15));
}

TEST_CASE("regulator ladder extrapolation through the C boundary") {
    const double eps[3] = {0.2, 0.1, 0.05};
    br_phase_integral vals[3];
    for (int i = 0; i < 3; ++i) {
        vals[i] = br_phase_integral{};
        vals[i].value_re = 2.0 - 3.0 * eps[i];
        vals[i].value_im = 0.5 * eps[i];
        vals[i].error = 1e-14;
        vals[i].provenance = BR_PROV_NUMERIC;
    }
    br_phase_integral out{};
    REQUIRE(br_phase_integral_extrapolate(eps, vals, 3, 2, &out) == BR_OK);
    CHECK(out.value_re == doctest::Approx(2.0).epsilon(1e-10));
    CHECK(std::abs(out.value_im) < 1e-10);
    CHECK(out.provenance == BR_PROV_REGULATOR_EXTRAPOLATED);

    const double inc[2] = {0.1, 0.2};  // not strictly decreasing
    CHECK(br_phase_integral_extrapolate(inc, vals, 2, 1, &out) == BR_INVALID_ARGUMENT);
}

TEST_CASE("trajectory helpers and failure modes") {
    TrajGuard t;
    REQUIRE(br_trajectory_exponential_decay(1.0, 2.0, &t.t) == BR_OK);
    double z = 0.0, v = 0.0;
    REQUIRE(br_trajectory_position(t.t, 0.0, &z) == BR_OK);
    CHECK(z == doctest::Approx(1.0).epsilon(1e-15));
    REQUIRE(br_trajectory_speed(t.t, 0.0, &v) == BR_OK);
    CHECK(v == doctest::Approx(-2.0).epsilon(1e-15));
    TrajGuard moved;
    REQUIRE(br_trajectory_translated(t.t, 3.0, &moved.t) == BR_OK);
    REQUIRE(br_trajectory_position(moved.t, 0.0, &z) == BR_OK);
    CHECK(z == doctest::Approx(4.0).epsilon(1e-15));
    br_trajectory_diagnostics d{};
    REQUIRE(br_trajectory_diagnostics_get(t.t, 0.0, 3.0, 0.0, &d) == BR_OK);
    CHECK(d.has_gamma_char == 1);
    CHECK(d.gamma_char == doctest::Approx(2.0).epsilon(1e-15));

    br_trajectory* bad = nullptr;
    CHECK(br_trajectory_sampled_csv("/nonexistent/path.csv", 3, &bad) != BR_OK);
    CHECK(bad == nullptr);
    CHECK(!std::string(br_last_error()).empty());

    CHECK(br_trajectory_exponential_decay(1.0, -2.0, &bad) == BR_INVALID_ARGUMENT);
}

TEST_CASE("validation canary: a seeded Bessel perturbation must be caught") {
    char* json = nullptr;
    int all_pass = -1;
    REQUIRE(br_validate_run(1e-6, 0, &json, &all_pass) == BR_OK);
    REQUIRE(json != nullptr);
    CHECK(all_pass == 0);
    const auto doc = nlohmann::json::parse(json);
    CHECK(doc.at("all_pass").get<bool>() == false);
    bool k1_failed = false;
    for (const auto& c : doc.at("checks")) {
        const std::string name = c.at("name").get<std::string>();
        if (name.find("k1") != std::string::npos && !c.at("pass").get<bool>())
            k1_failed = true;
    }
    CHECK(k1_failed);
    br_string_free(json);
}
