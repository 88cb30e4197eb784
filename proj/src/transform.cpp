#include "backlund/transform.hpp"

#include <cmath>
#include <stdexcept>

namespace backlund {

FrameMap FrameMap::identity(std::size_t n) {
    FrameMap m;
    m.n = n;
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1.0;
    return m;
}

FrameMap operator*(const FrameMap& lhs, const FrameMap& rhs) {
    if (lhs.n != rhs.n) throw std::invalid_argument("frame map dimension mismatch");
    FrameMap out;
    out.n = lhs.n;
    for (std::size_t i = 0; i < lhs.n; ++i)
        for (std::size_t j = 0; j < lhs.n; ++j) {
            double acc = 0.0;
            for (std::size_t k = 0; k < lhs.n; ++k) acc += lhs.at(i, k) * rhs.at(k, j);
            out.at(i, j) = acc;
        }
    return out;
}

std::vector<GVec> apply_map(const FrameMap& m, const std::vector<GVec>& frame) {
    if (frame.size() != m.n) throw std::invalid_argument("frame size does not match map");
    std::vector<GVec> out(m.n, GVec::zero(frame[0].n));
    for (std::size_t i = 0; i < m.n; ++i)
        for (std::size_t k = 0; k < m.n; ++k)
            out[i] = out[i] + m.at(i, k) * frame[k];
    return out;
}

namespace {

FrameMap plane_rotation(std::size_t n, std::size_t p, std::size_t q, double c01, double c10,
                        double diag) {
    // identity except for the 2x2 block [[diag, c01], [c10, diag]] in rows/cols p,q
    FrameMap m = FrameMap::identity(n);
    m.at(p, p) = diag;
    m.at(q, q) = diag;
    m.at(p, q) = c01;
    m.at(q, p) = c10;
    return m;
}

}  // namespace

RotationFactors rotation_factors(SpaceCase space, double gamma, double phi) {
    const std::size_t n = dim(space);
    RotationFactors out;
    if (space == SpaceCase::PG3TimelikeNormal) {
        // hyperbolic rotation, both off-diagonal entries +sinh
        out.gamma_map = plane_rotation(n, 0, 1, std::sinh(gamma), std::sinh(gamma),
                                       std::cosh(gamma));
        out.gamma_map_inverse = plane_rotation(n, 0, 1, -std::sinh(gamma), -std::sinh(gamma),
                                               std::cosh(gamma));
        out.phi_map = plane_rotation(n, 1, 2, std::sinh(phi), -std::sinh(phi), std::cosh(phi));
        return out;
    }
    out.gamma_map = plane_rotation(n, 0, 1, std::sin(gamma), -std::sin(gamma), std::cos(gamma));
    out.gamma_map_inverse =
        plane_rotation(n, 0, 1, -std::sin(gamma), std::sin(gamma), std::cos(gamma));
    if (space == SpaceCase::PG3TimelikeBinormal)
        out.phi_map = plane_rotation(n, 1, 2, std::sinh(phi), std::sinh(phi), std::cosh(phi));
    else
        out.phi_map = plane_rotation(n, 1, 2, -std::sin(phi), std::sin(phi), std::cos(phi));
    return out;
}

std::vector<GVec> transformed_frame(SpaceCase space, const std::vector<GVec>& frame, double gamma,
                                    double phi) {
    if (frame.size() != dim(space))
        throw std::invalid_argument("frame size does not match space");
    const GVec& E1 = frame[0];
    const GVec& E2 = frame[1];
    const GVec& E3 = frame[2];
    std::vector<GVec> out;
    out.reserve(frame.size());

    if (space == SpaceCase::PG3TimelikeNormal) {
        const double chg = std::cosh(gamma), shg = std::sinh(gamma);
        const double chp = std::cosh(phi), shp = std::sinh(phi);
        out.push_back((chg * chg - shg * shg * chp) * E1 + chg * shg * (1 - chp) * E2 -
                      shg * shp * E3);
        out.push_back(chg * shg * (chp - 1) * E1 + (-shg * shg + chg * chg * chp) * E2 +
                      chg * shp * E3);
        out.push_back(-shg * shp * E1 - shp * chg * E2 + chp * E3);
        return out;
    }

    const double cg = std::cos(gamma), sg = std::sin(gamma);
    if (space == SpaceCase::PG3TimelikeBinormal) {
        const double chp = std::cosh(phi), shp = std::sinh(phi);
        out.push_back((cg * cg + sg * sg * chp) * E1 + cg * sg * (1 - chp) * E2 - sg * shp * E3);
        out.push_back(cg * sg * (1 - chp) * E1 + (sg * sg + cg * cg * chp) * E2 + cg * shp * E3);
        out.push_back(-sg * shp * E1 + shp * cg * E2 + chp * E3);
        return out;
    }

    const double cp = std::cos(phi), sp = std::sin(phi);
    out.push_back((cg * cg + sg * sg * cp) * E1 + cg * sg * (1 - cp) * E2 + sg * sp * E3);
    out.push_back(cg * sg * (1 - cp) * E1 + (sg * sg + cg * cg * cp) * E2 - cg * sp * E3);
    out.push_back(-sg * sp * E1 + sp * cg * E2 + cp * E3);
    if (space == SpaceCase::G4) out.push_back(frame[3]);  // the temporal vector is copied
    return out;
}

double displacement_coefficient(SpaceCase space, double tau, double C) {
    if (is_circular(space)) return 2 * C / (tau * tau + C * C);
    return 2 * C / (C * C - tau * tau);
}

TransformedPair transform_curve(const CurveData& seed, const FrenetData& seed_frames,
                                const std::vector<double>& gamma, const BacklundParams& params) {
    const std::size_t n = seed.s.size();
    if (seed.space != params.space)
        throw std::invalid_argument("seed space does not match parameters");
    if (gamma.size() != n || seed_frames.frames.size() != n)
        throw std::invalid_argument("grid mismatch between seed, frames and gamma");
    const auto grid_pts = params.grid.points();
    if (grid_pts.size() != n)
        throw std::invalid_argument("grid mismatch between seed and parameters");
    for (std::size_t i = 0; i < n; ++i)
        if (std::fabs(grid_pts[i] - seed.s[i]) > 1e-9)
            throw std::invalid_argument("grid mismatch between seed and parameters");
    for (std::size_t i = 0; i < n; ++i)
        if (std::fabs(seed_frames.tau[i] - params.tau0) > 1e-6)
            throw std::invalid_argument("non-constant torsion seed: |tau(s) - tau0| > 1e-6 at "
                                        "sample " + std::to_string(i));

    const double rho = displacement_coefficient(params.space, params.tau0, params.C);
    const bool hyperbolic_angle = params.space == SpaceCase::PG3TimelikeNormal;
    const std::size_t d = dim(params.space);

    TransformedPair pair;
    pair.seed_curve = seed;
    pair.seed_frames = seed_frames;
    pair.gamma = gamma;
    pair.params = params;
    pair.image_curve.space = params.space;
    pair.image_curve.s = seed.s;
    pair.image_curve.positions.resize(n, GVec::zero(d));
    pair.image_frames.e1.resize(n);
    pair.image_frames.e2.resize(n);
    pair.image_frames.e3.resize(n);
    if (params.space == SpaceCase::G4) pair.image_frames.e4.resize(n);

    for (std::size_t i = 0; i < n; ++i) {
        const double g = gamma[i];
        const double c1 = hyperbolic_angle ? std::cosh(g) : std::cos(g);
        const double c2 = hyperbolic_angle ? std::sinh(g) : std::sin(g);
        pair.image_curve.positions[i] =
            seed.positions[i] + rho * (c1 * seed_frames.frames.e1[i] + c2 * seed_frames.frames.e2[i]);

        std::vector<GVec> frame{seed_frames.frames.e1[i], seed_frames.frames.e2[i],
                                seed_frames.frames.e3[i]};
        if (params.space == SpaceCase::G4) frame.push_back(seed_frames.frames.e4[i]);
        auto mapped = transformed_frame(params.space, frame, g, params.phi);
        pair.image_frames.e1[i] = mapped[0];
        pair.image_frames.e2[i] = mapped[1];
        pair.image_frames.e3[i] = mapped[2];
        if (params.space == SpaceCase::G4) pair.image_frames.e4[i] = mapped[3];
    }
    return pair;
}

CurvaturePrediction predicted_curvature(SpaceCase space, double kappa, double dgamma_ds,
                                        double tol) {
    CurvaturePrediction out;
    switch (space) {
        case SpaceCase::G3:
            out.value = -2.0 * dgamma_ds;
            out.kappa_consistent = std::fabs(kappa - *out.value) <= tol;
            break;
        case SpaceCase::G4:
            out.value = -kappa - 2.0 * dgamma_ds;
            break;
        case SpaceCase::PG3TimelikeBinormal:
        case SpaceCase::PG3TimelikeNormal:
            break;  // unspecified
    }
    return out;
}

double predicted_torsion(SpaceCase space, double tau) {
    return space == SpaceCase::PG3TimelikeNormal ? -tau : tau;
}

}  // namespace backlund
