#include <cmath>
#include <random>

#include <doctest.h>

#include "backlund/spaces.hpp"

using namespace backlund;

TEST_CASE("degenerate scalar product branches") {
    CHECK(g_dot(SpaceCase::G3, GVec(1, 2, 3), GVec(2, 5, 7)) == 2.0);
    CHECK(g_dot(SpaceCase::G3, GVec(0, 3, 4), GVec(0, 1, 2)) == 11.0);
    CHECK(g_dot(SpaceCase::PG3TimelikeBinormal, GVec(0, 3, 4), GVec(0, 3, 4)) == -7.0);
    CHECK(g_dot(SpaceCase::PG3TimelikeNormal, GVec(0, 3, 4), GVec(0, 3, 4)) == -7.0);
    CHECK(g_dot(SpaceCase::G4, GVec(1, 1, 1, 0), GVec(2, 0, 1, 0)) == 3.0);
    // distinguished branch wins as soon as one side is nonzero
    CHECK(g_dot(SpaceCase::G3, GVec(1, 2, 3), GVec(0, 5, 7)) == 0.0);
    CHECK_THROWS(g_dot(SpaceCase::G3, GVec(1, 2, 3), GVec(1, 1, 1, 1)));
    CHECK_THROWS(g_dot(SpaceCase::G4, GVec(1, 2, 3), GVec(1, 1, 1)));
}

TEST_CASE("norms") {
    CHECK(g_norm(SpaceCase::G3, GVec(2, 9, 9)) == 2.0);
    CHECK(g_norm(SpaceCase::PG3TimelikeBinormal, GVec(0, 3, 4)) ==
          doctest::Approx(std::sqrt(7.0)).epsilon(1e-15));
    CHECK(g_norm(SpaceCase::G4, GVec(0, 0, 0, 0)) == 0.0);
}

TEST_CASE("classification") {
    const auto tl = classify(SpaceCase::PG3TimelikeNormal, GVec(0, 1, 2));
    CHECK(tl.isotropic);
    CHECK(tl.causal == CausalClass::Timelike);
    CHECK(to_string(tl) == "isotropic, timelike");

    const auto sl = classify(SpaceCase::PG3TimelikeBinormal, GVec(0, 2, 1));
    CHECK(sl.causal == CausalClass::Spacelike);

    const auto ni = classify(SpaceCase::G3, GVec(1, 0, 0));
    CHECK_FALSE(ni.isotropic);
    CHECK(to_string(ni) == "non-isotropic");

    CHECK(classify(SpaceCase::PG3TimelikeBinormal, GVec(0, 1, 1)).causal == CausalClass::Null);
    CHECK(classify(SpaceCase::G4, GVec(0, 1, 2, 0)).isotropic);
}

TEST_CASE("euclidean helper product") {
    CHECK(euclid_dot(GVec(1, 2, 3), GVec(1, 0, 1)) == 4.0);
    CHECK(euclid_dot(GVec(0, 0, 0), GVec(5, 5, 5)) == 0.0);
    CHECK(euclid_dot(GVec(1, 1, 1, 1), GVec(1, 1, 1, 1)) == 4.0);
    CHECK_THROWS(euclid_dot(GVec(1, 1, 1), GVec(1, 1, 1, 1)));
}

TEST_CASE("product symmetry and isotropic bilinearity") {
    std::mt19937_64 rng(20240811);
    std::uniform_real_distribution<double> uni(-1.0, 1.0);
    const SpaceCase cases[] = {SpaceCase::G3, SpaceCase::PG3TimelikeBinormal, SpaceCase::G4};
    for (SpaceCase space : cases) {
        const std::size_t d = dim(space);
        const std::size_t k = distinguished_index(space);
        for (int iter = 0; iter < 1000; ++iter) {
            GVec u = GVec::zero(d), v = GVec::zero(d), w = GVec::zero(d);
            for (std::size_t j = 0; j < d; ++j) {
                u[j] = uni(rng);
                v[j] = uni(rng);
                w[j] = uni(rng);
            }
            CHECK(g_dot(space, u, v) == g_dot(space, v, u));

            // bilinearity holds on the isotropic subspace
            u[k] = v[k] = w[k] = 0.0;
            const double a = uni(rng), b = uni(rng);
            const GVec lin = a * u + b * w;
            const double lhs = g_dot(space, lin, v);
            const double rhs = a * g_dot(space, u, v) + b * g_dot(space, w, v);
            CHECK(std::fabs(lhs - rhs) <= 1e-15);
        }
    }
}

TEST_CASE("classification is scale invariant") {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> uni(-1.0, 1.0);
    std::uniform_real_distribution<double> scale(0.1, 100.0);
    for (int iter = 0; iter < 200; ++iter) {
        GVec u(uni(rng), uni(rng), uni(rng));
        if (iter % 3 == 0) u[0] = 0.0;
        const auto c0 = classify(SpaceCase::PG3TimelikeNormal, u);
        const auto c1 = classify(SpaceCase::PG3TimelikeNormal, scale(rng) * u);
        CHECK(c0.isotropic == c1.isotropic);
        CHECK(c0.causal == c1.causal);
    }
}
