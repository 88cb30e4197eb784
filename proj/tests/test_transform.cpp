#include <cmath>
#include <stdexcept>
#include <random>

#include <doctest.h>

#include "backlund/transform.hpp"

using namespace backlund;

namespace {
const double kPi = std::acos(-1.0);

std::vector<GVec> random_frame(std::mt19937_64& rng, std::size_t d) {
    std::uniform_real_distribution<double> uni(-1.0, 1.0);
    std::vector<GVec> f(d, GVec::zero(d));
    for (auto& v : f)
        for (std::size_t j = 0; j < d; ++j) v[j] = uni(rng);
    return f;
}

const SpaceCase kAllCases[] = {SpaceCase::G3, SpaceCase::PG3TimelikeBinormal,
                               SpaceCase::PG3TimelikeNormal, SpaceCase::G4};
}  // namespace

TEST_CASE("rotation factors") {
    SUBCASE("gamma map at zero angle is the identity") {
        for (SpaceCase space : kAllCases) {
            const auto rf = rotation_factors(space, 0.0, 0.7);
            for (std::size_t i = 0; i < dim(space); ++i)
                for (std::size_t j = 0; j < dim(space); ++j)
                    CHECK(rf.gamma_map.at(i, j) == (i == j ? 1.0 : 0.0));
        }
    }
    SUBCASE("phi map mixes the second and third adapted vectors") {
        const auto rf = rotation_factors(SpaceCase::G3, 0.3, kPi / 2);
        CHECK(rf.phi_map.at(1, 1) == doctest::Approx(0.0).epsilon(1e-15));
        CHECK(rf.phi_map.at(1, 2) == doctest::Approx(-1.0).epsilon(1e-15));
        CHECK(rf.phi_map.at(2, 1) == doctest::Approx(1.0).epsilon(1e-15));
    }
    SUBCASE("hyperbolic maps carry both +sinh off-diagonals") {
        const auto rf = rotation_factors(SpaceCase::PG3TimelikeNormal, 0.4, 0.6);
        CHECK(rf.gamma_map.at(0, 1) == std::sinh(0.4));
        CHECK(rf.gamma_map.at(1, 0) == std::sinh(0.4));
        CHECK(rf.phi_map.at(2, 1) == -std::sinh(0.6));
    }
}

TEST_CASE("transformed frame closed forms") {
    std::mt19937_64 rng(31337);
    SUBCASE("gamma = 0 reduces to the phi rotation") {
        const auto frame = random_frame(rng, 3);
        const double phi = 0.8;
        const auto tf = transformed_frame(SpaceCase::G3, frame, 0.0, phi);
        for (std::size_t j = 0; j < 3; ++j) {
            CHECK(tf[0][j] == doctest::Approx(frame[0][j]).epsilon(1e-15));
            CHECK(tf[1][j] == doctest::Approx(std::cos(phi) * frame[1][j] -
                                              std::sin(phi) * frame[2][j]).epsilon(1e-14));
            CHECK(tf[2][j] == doctest::Approx(std::sin(phi) * frame[1][j] +
                                              std::cos(phi) * frame[2][j]).epsilon(1e-14));
        }
    }
    SUBCASE("continuity at the excluded angle") {
        const auto frame = random_frame(rng, 3);
        const auto tf = transformed_frame(SpaceCase::G3, frame, 1.1, 1e-12);
        for (std::size_t i = 0; i < 3; ++i)
            CHECK(euclid_norm(tf[i] - frame[i]) <= 1e-7);
    }
    SUBCASE("binormal coefficient equals cos phi for any gamma") {
        const std::vector<GVec> basis{GVec(1, 0, 0), GVec(0, 1, 0), GVec(0, 0, 1)};
        for (double g : {0.0, 0.3, 1.2, 2.9}) {
            const auto tf = transformed_frame(SpaceCase::G3, basis, g, 0.7);
            CHECK(tf[2][2] == std::cos(0.7));
        }
    }
    SUBCASE("temporal vector is copied for G4") {
        auto frame = random_frame(rng, 4);
        const auto tf = transformed_frame(SpaceCase::G4, frame, 0.9, 0.7);
        for (std::size_t j = 0; j < 4; ++j) CHECK(tf[3][j] == frame[3][j]);
    }
}

TEST_CASE("closed forms equal the rotation composition") {
    std::mt19937_64 rng(4242);
    std::uniform_real_distribution<double> angle(-2.0, 2.0);
    for (SpaceCase space : kAllCases) {
        double worst = 0.0;
        for (int iter = 0; iter < 1000; ++iter) {
            const double g = angle(rng);
            double phi = angle(rng);
            if (std::fabs(phi) < 1e-3) phi = 0.5;
            const auto frame = random_frame(rng, dim(space));
            const auto direct = transformed_frame(space, frame, g, phi);
            const auto composed = apply_map(rotation_factors(space, g, phi).composed(), frame);
            for (std::size_t i = 0; i < frame.size(); ++i)
                for (std::size_t j = 0; j < frame[0].n; ++j)
                    worst = std::max(worst, std::fabs(direct[i][j] - composed[i][j]));
        }
        CHECK(worst <= 1e-12);
    }
}

namespace {

// straight seed with spinning frames: kappa = 0, constant tau
TransformedPair line_pair(SpaceCase space, double tau0, double phi, double gamma0,
                          const Grid& grid) {
    auto synth = synthesize_curve(
        space, [](double) { return 0.0; }, [tau0](double) { return tau0; }, {},
        FrameInit::standard(space), grid);
    auto params = make_backlund_params(space, tau0, phi, gamma0, grid);
    const auto gamma = solve_gamma(params);
    return transform_curve(synth.curve, synth.frames, gamma, params);
}

}  // namespace

TEST_CASE("transform of a straight seed with gamma = 0") {
    const Grid grid{0.0, 2.0, 256};
    const auto pair = line_pair(SpaceCase::G3, 1.0, kPi / 2, 0.0, grid);
    // displacement coefficient 2C/(tau^2 + C^2) = 1 shifts along E1
    for (std::size_t i = 0; i < grid.samples; ++i) {
        const double s = pair.seed_curve.s[i];
        CHECK(std::fabs(pair.image_curve.positions[i][0] - (s + 1.0)) <= 1e-12);
        CHECK(std::fabs(pair.image_curve.positions[i][1]) <= 1e-12);
        CHECK(std::fabs(pair.image_curve.positions[i][2]) <= 1e-12);
    }
}

TEST_CASE("displacement coefficient identities") {
    SUBCASE("circular") {
        const double C = backlund_constant(SpaceCase::G3, 2.0, kPi / 6);
        const double rho = displacement_coefficient(SpaceCase::G3, 2.0, C);
        CHECK(rho == doctest::Approx(0.25).epsilon(1e-14));
        CHECK(rho == doctest::Approx(radius(SpaceCase::G3, 2.0, kPi / 6).value).epsilon(1e-14));
    }
    SUBCASE("timelike normal: coefficient equals -sinh(phi)/tau") {
        const double tau = 1.3, phi = 0.9;
        const double C = backlund_constant(SpaceCase::PG3TimelikeNormal, tau, phi);
        const double rho = displacement_coefficient(SpaceCase::PG3TimelikeNormal, tau, C);
        CHECK(rho == doctest::Approx(-std::sinh(phi) / tau).epsilon(1e-13));
    }
}

TEST_CASE("transform preconditions") {
    const Grid grid{0.0, 1.0, 128};
    auto synth = synthesize_curve(
        SpaceCase::G3, [](double) { return 1.0; }, [](double s) { return 1.0 + s; }, {},
        FrameInit::standard(SpaceCase::G3), grid);
    auto params = make_backlund_params(SpaceCase::G3, 1.0, 0.8, 0.5, grid);
    const std::vector<double> gamma(grid.samples, 0.5);
    SUBCASE("non-constant torsion") {
        CHECK_THROWS_WITH_AS(transform_curve(synth.curve, synth.frames, gamma, params),
                             doctest::Contains("non-constant torsion"), std::invalid_argument);
    }
    SUBCASE("grid mismatch") {
        auto ok = synthesize_curve(
            SpaceCase::G3, [](double) { return 1.0; }, [](double) { return 1.0; }, {},
            FrameInit::standard(SpaceCase::G3), grid);
        std::vector<double> short_gamma(grid.samples - 1, 0.5);
        CHECK_THROWS_WITH_AS(transform_curve(ok.curve, ok.frames, short_gamma, params),
                             doctest::Contains("grid mismatch"), std::invalid_argument);
    }
}

TEST_CASE("predicted invariants") {
    SUBCASE("curvature") {
        const auto g3 = predicted_curvature(SpaceCase::G3, -1.0, 0.5);
        REQUIRE(g3.value.has_value());
        CHECK(*g3.value == -1.0);
        CHECK(g3.kappa_consistent);

        const auto g3_off = predicted_curvature(SpaceCase::G3, 0.7, 0.5);
        CHECK_FALSE(g3_off.kappa_consistent);

        const auto g4 = predicted_curvature(SpaceCase::G4, 1.0, 0.0);
        CHECK(*g4.value == -1.0);

        CHECK_FALSE(predicted_curvature(SpaceCase::PG3TimelikeBinormal, 1.0, 0.5).value);
    }
    SUBCASE("torsion") {
        CHECK(predicted_torsion(SpaceCase::G3, 1.0) == 1.0);
        CHECK(predicted_torsion(SpaceCase::PG3TimelikeNormal, 1.0) == -1.0);
        CHECK(predicted_torsion(SpaceCase::PG3TimelikeBinormal, -2.0) == -2.0);
        CHECK(predicted_torsion(SpaceCase::G4, 0.7) == 0.7);
    }
}

TEST_CASE("image frames of a G4 pair copy the temporal vector") {
    const Grid grid{0.0, 1.0, 128};
    const auto pair = line_pair(SpaceCase::G4, 1.0, 0.8, 0.4, grid);
    for (std::size_t i = 0; i < grid.samples; ++i)
        for (std::size_t j = 0; j < 4; ++j)
            CHECK(pair.image_frames.e4[i][j] == pair.seed_frames.frames.e4[i][j]);
}
