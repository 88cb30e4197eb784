#pragma once

#include <array>
#include <optional>
#include <vector>

#include "backlund/curves.hpp"
#include "backlund/gamma_ode.hpp"
#include "backlund/spaces.hpp"

namespace backlund {

/// Dense 3x3 / 4x4 matrix acting on ordered frame vectors:
/// (M * frame)_i = sum_j M_ij frame_j.
struct FrameMap {
    std::array<double, 16> a{};
    std::size_t n = 3;

    double& at(std::size_t i, std::size_t j) { return a[i * n + j]; }
    double at(std::size_t i, std::size_t j) const { return a[i * n + j]; }
    static FrameMap identity(std::size_t n);
};

FrameMap operator*(const FrameMap& lhs, const FrameMap& rhs);
std::vector<GVec> apply_map(const FrameMap& m, const std::vector<GVec>& frame);

/// The rotation factors of the transformation, exactly as printed:
/// the gamma-rotation taking the frame to the distance-adapted frame,
/// its inverse (rotation by -gamma), and the phi-rotation mixing the
/// second and third adapted vectors (hyperbolic for the pseudo cases).
struct RotationFactors {
    FrameMap gamma_map;
    FrameMap gamma_map_inverse;
    FrameMap phi_map;

    FrameMap composed() const { return gamma_map_inverse * (phi_map * gamma_map); }
};

RotationFactors rotation_factors(SpaceCase space, double gamma, double phi);

/// Transformed frame from the closed-form coefficient table (one sample).
/// frame holds E1,E2,E3[,E4]; the result is the same length.
std::vector<GVec> transformed_frame(SpaceCase space, const std::vector<GVec>& frame, double gamma,
                                    double phi);

/// Signed displacement coefficient 2C/(tau^2+C^2) (circular cases) or
/// 2C/(C^2-tau^2) (pseudo cases). Its absolute value equals the
/// separation r; the sign is kept so that the decomposition of the
/// displacement in the seed frame is exact.
double displacement_coefficient(SpaceCase space, double tau, double C);

struct TransformedPair {
    CurveData seed_curve;
    FrenetData seed_frames;
    std::vector<double> gamma;
    BacklundParams params;
    CurveData image_curve;
    Frames image_frames;  // formula-derived, not re-extracted
};

/// Image curve alpha~ = alpha + rho (cos g E1 + sin g E2) (circular and
/// timelike-binormal cases) or alpha + rho (cosh g E1 + sinh g E2)
/// (timelike-normal case), with the frames mapped by transformed_frame.
/// Requires aligned grids and a constant-torsion seed
/// (|tau(s) - tau0| <= 1e-6 at every sample).
TransformedPair transform_curve(const CurveData& seed, const FrenetData& seed_frames,
                                const std::vector<double>& gamma, const BacklundParams& params);

struct CurvaturePrediction {
    std::optional<double> value;   // empty: no relation specified for this case
    bool kappa_consistent = true;  // G3 only: input kappa matches -2 dgamma/ds
};

/// Image curvature the transformation promises: -2 dgamma/ds (G3, which
/// also constrains the seed), -kappa - 2 dgamma/ds (G4), unspecified for
/// the pseudo-Galilean cases.
CurvaturePrediction predicted_curvature(SpaceCase space, double kappa, double dgamma_ds,
                                        double tol = 1e-9);

/// Image torsion: equal to the seed torsion except for the timelike-normal
/// case, where it is negated.
double predicted_torsion(SpaceCase space, double tau);

}  // namespace backlund
