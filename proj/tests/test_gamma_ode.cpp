#include <cmath>
#include <stdexcept>
#include <random>

#include <doctest.h>

#include "backlund/gamma_ode.hpp"

using namespace backlund;

namespace {
const double kPi = std::acos(-1.0);
}

TEST_CASE("backlund constant") {
    CHECK(backlund_constant(SpaceCase::G3, 1.0, kPi / 2) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(backlund_constant(SpaceCase::PG3TimelikeBinormal, 1.0, 2 * std::atanh(0.5)) ==
          doctest::Approx(0.5).epsilon(1e-15));
    CHECK_THROWS_WITH_AS(backlund_constant(SpaceCase::G3, 2.0, 0.0),
                         doctest::Contains("phi out of domain"), std::domain_error);
}

TEST_CASE("separation") {
    CHECK(radius(SpaceCase::G3, 1.0, kPi / 2).value == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(radius(SpaceCase::G3, 2.0, kPi / 6).value == doctest::Approx(0.25).epsilon(1e-14));
    CHECK(radius(SpaceCase::PG3TimelikeBinormal, -1.0, std::asinh(1.0)).value ==
          doctest::Approx(1.0).epsilon(1e-14));
    // the half-angle expression equals the signed separation
    const auto r = radius(SpaceCase::G3, 2.0, kPi / 6);
    CHECK(std::fabs(std::fabs(r.half_angle_form) - r.value) <= 1e-15);
    CHECK_THROWS(radius(SpaceCase::G3, 0.0, 1.0));
}

TEST_CASE("angle ODE right-hand sides") {
    CHECK(gamma_rhs(SpaceCase::G3, kPi / 2, 1.0, kPi / 2) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(gamma_rhs(SpaceCase::PG3TimelikeNormal, 0.0, 1.3, 0.7) == 0.0);
    CHECK(gamma_rhs(SpaceCase::G4, kPi / 2, 1.0, kPi / 2, 0.25) ==
          doctest::Approx(0.75).epsilon(1e-14));
}

TEST_CASE("fixed points are preserved") {
    const Grid grid{0.0, 2.0, 2001};
    for (SpaceCase space : {SpaceCase::G3, SpaceCase::PG3TimelikeBinormal,
                            SpaceCase::PG3TimelikeNormal}) {
        const auto p = make_backlund_params(space, 1.0, 0.9, 0.0, grid);
        for (double g : solve_gamma(p)) CHECK(g == 0.0);
    }
    // the upper fixed point of the circular cases sits at pi; in floating
    // point sin(pi) is ~1e-16, so the solution holds it to round-off only
    const auto p = make_backlund_params(SpaceCase::G3, 1.0, 0.9, kPi, grid);
    for (double g : solve_gamma(p)) CHECK(std::fabs(g - kPi) <= 1e-13);
}

TEST_CASE("closed forms") {
    const Grid grid{0.0, 2.0, 101};
    SUBCASE("identity at s = 0") {
        const auto p = make_backlund_params(SpaceCase::G3, 1.3, 0.8, 0.9, grid);
        CHECK(gamma_closed_form(p, 0.0) == doctest::Approx(0.9).epsilon(1e-15));
    }
    SUBCASE("circular value frozen from the symbolic oracle") {
        // C = 1, gamma0 = pi/2, s = ln 3  =>  2 atan(3)
        const auto p = make_backlund_params(SpaceCase::G3, 1.0, kPi / 2, kPi / 2, grid);
        CHECK(gamma_closed_form(p, std::log(3.0)) ==
              doctest::Approx(2.4980915447965089).epsilon(1e-12));
    }
    SUBCASE("timelike-normal value frozen from the symbolic oracle") {
        // C = 1 via tau = 2, tanh(phi/2) = 1/2; tanh(gamma0/2) = 1/2, s = ln 2
        const double phi = 2 * std::atanh(0.5);
        const double gamma0 = 2 * std::atanh(0.5);
        const auto p = make_backlund_params(SpaceCase::PG3TimelikeNormal, 2.0, phi, gamma0, grid);
        CHECK(p.C == doctest::Approx(1.0).epsilon(1e-15));
        CHECK(gamma_closed_form(p, std::log(2.0)) ==
              doctest::Approx(0.51082562376599072).epsilon(1e-12));
    }
    SUBCASE("monotone approach to pi") {
        const auto p = make_backlund_params(SpaceCase::G3, 1.0, kPi / 2, kPi / 2, grid);
        double prev = gamma_closed_form(p, 0.0);
        for (double s : {0.5, 1.0, 2.0, 5.0, 10.0}) {
            const double g = gamma_closed_form(p, s);
            CHECK(g > prev);
            CHECK(g < kPi);
            prev = g;
        }
    }
    SUBCASE("G4 has no closed form") {
        const auto p = make_backlund_params(SpaceCase::G4, 1.0, 0.9, 0.5, grid);
        CHECK_THROWS_WITH_AS(gamma_closed_form(p, 1.0), doctest::Contains("no closed form"),
                             std::domain_error);
    }
    SUBCASE("atanh domain violation") {
        // C < 0 makes the timelike-normal solution escape in finite s
        const auto p = make_backlund_params(SpaceCase::PG3TimelikeNormal, -1.5, 1.0, 1.3, grid);
        CHECK_THROWS_WITH_AS(gamma_closed_form(p, 2.0), doctest::Contains("out of domain"),
                             std::domain_error);
    }
}

TEST_CASE("RK4 agrees with the closed forms") {
    const Grid grid{0.0, 2.0, 10001};
    const struct {
        SpaceCase space;
        double tau, phi, gamma0;
    } cases[] = {
        {SpaceCase::G3, 1.0, kPi / 2, kPi / 2},
        {SpaceCase::G3, 2.0, 0.7, 0.3},
        {SpaceCase::PG3TimelikeBinormal, -1.0, 0.8, 1.1},
        {SpaceCase::PG3TimelikeNormal, 1.5, 0.9, 0.8},
    };
    for (const auto& c : cases) {
        const auto p = make_backlund_params(c.space, c.tau, c.phi, c.gamma0, grid);
        const auto sol = solve_gamma(p);
        const auto s = grid.points();
        double worst = 0.0;
        for (std::size_t i = 0; i < s.size(); ++i)
            worst = std::max(worst, std::fabs(sol[i] - gamma_closed_form(p, s[i])));
        CHECK(worst <= 1e-8);
    }
}

TEST_CASE("closed form satisfies the ODE under finite differencing") {
    const Grid grid{0.0, 2.0, 101};
    const auto p = make_backlund_params(SpaceCase::G3, 1.2, 0.8, 0.7, grid);
    const double h = 1e-5;
    for (double s : {0.1, 0.5, 1.0, 1.7}) {
        const double lhs =
            (gamma_closed_form(p, s + h) - gamma_closed_form(p, s - h)) / (2 * h);
        const double rhs = gamma_rhs(p.space, gamma_closed_form(p, s), p.tau0, p.phi);
        CHECK(std::fabs(lhs - rhs) <= 1e-6);
    }
}

TEST_CASE("monotone and bounded for C > 0 and gamma0 in (0, pi)") {
    std::mt19937_64 rng(99);
    std::uniform_real_distribution<double> utau(0.3, 2.0), uphi(0.2, 1.4), ug0(0.1, 3.0);
    const Grid grid{0.0, 2.0, 2001};
    for (int iter = 0; iter < 25; ++iter) {
        const auto p = make_backlund_params(SpaceCase::G3, utau(rng), uphi(rng), ug0(rng), grid);
        REQUIRE(p.C > 0.0);
        const auto sol = solve_gamma(p);
        for (std::size_t i = 1; i < sol.size(); ++i) {
            CHECK(sol[i] > sol[i - 1]);
            CHECK(sol[i] < kPi + 1e-12);
        }
    }
}

TEST_CASE("half-angle identities over a parameter grid") {
    for (int it = 0; it < 10; ++it) {
        for (int jp = 0; jp < 10; ++jp) {
            const double tau = 0.25 + 0.4 * it;
            const double phi = 0.1 + 0.145 * jp;
            const double cc = backlund_constant(SpaceCase::G3, tau, phi);
            CHECK(std::fabs(2 * cc / (tau * tau + cc * cc) - std::sin(phi) / tau) <= 1e-12);
            const double ch = backlund_constant(SpaceCase::PG3TimelikeBinormal, tau, phi);
            CHECK(std::fabs(2 * ch / (ch * ch - tau * tau) + std::sinh(phi) / tau) <= 1e-12);
        }
    }
}
