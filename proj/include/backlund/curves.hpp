#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "backlund/spaces.hpp"

namespace backlund {

using ScalarFn = std::function<double(double)>;
using VectorFn = std::function<GVec(double)>;

/// Uniform arc-length grid description.
struct Grid {
    double s_min = 0.0;
    double s_max = 1.0;
    std::size_t samples = 64;  // number of grid points, spacing (s_max-s_min)/(samples-1)

    double spacing() const;
    std::vector<double> points() const;
};

/// Sampled curve. Positions are stored on a uniform grid; analytic
/// derivative callables, when present, take precedence over finite
/// differences wherever derivatives are needed.
struct CurveData {
    SpaceCase space = SpaceCase::G3;
    std::vector<double> s;
    std::vector<GVec> positions;
    VectorFn d1, d2, d3;  // optional analytic derivatives

    bool analytic() const { return static_cast<bool>(d1); }
    double spacing() const;
};

/// Throws unless the grid is uniform and the distinguished position
/// component equals s to 1e-12 (arc-length parametrization).
void check_admissible(const CurveData& curve);

/// Per-sample frame vectors. e4 is used for G4 only.
struct Frames {
    std::vector<GVec> e1, e2, e3, e4;
    std::size_t size() const { return e1.size(); }
};

struct FrenetData {
    Frames frames;
    std::vector<double> kappa;
    std::vector<double> tau;
    double epsilon = 1.0;             // pseudo-Galilean orientation sign
    double mu = 1.0;                  // G4 temporal-vector sign
    std::vector<double> sigma;        // G4 only; zero unless supplied
};

/// Frame apparatus extracted from an admissible curve:
///   3-space: E2, E3 from the normalized second derivative, kappa from the
///   secondary norm of alpha'', tau = det(alpha',alpha'',alpha''')/kappa^2
///   (the 2x2 minor of the isotropic components);
///   G4: kappa = |alpha''|, E2 = E1'/kappa, E3 = E2'/tau with tau from the
///   spatial 3x3 determinant, E4 = mu * wedge(E1,E2,E3).
/// Throws on vanishing curvature, a null normal direction (pseudo-Galilean)
/// or vanishing torsion (G4, where E3 divides by tau).
FrenetData frenet_apparatus(const CurveData& curve);

/// Generalized cross product of three 4-vectors by cofactor expansion,
/// with mu in {+1,-1} chosen so det(e1,e2,e3,e4) > 0.
struct TemporalVector {
    GVec e4;
    double mu;
};
TemporalVector temporal_vector(const GVec& e1, const GVec& e2, const GVec& e3);

struct FrameInit {
    GVec e1, e2, e3, e4;  // e4 ignored for 3-space
    GVec position;        // alpha(s_min)
    static FrameInit standard(SpaceCase space);
};

struct SynthesizedCurve {
    CurveData curve;
    FrenetData frames;
    std::vector<std::string> notes;
};

/// Integrates the case's Frenet system together with alpha' = E1 as one
/// joint state vector (classical RK4, fixed step = grid spacing):
///   3-space: E1' = kappa E2, E2' = tau E3, E3' = -tau E2 (G3) / +tau E2 (PG3)
///   G4:      E1' = kappa E2, E2' = -kappa E1 + tau E3, E3' = -tau E2,
///            E4' = -sigma E3.
/// A missing sigma for G4 is replaced by zero with a note.
SynthesizedCurve synthesize_curve(SpaceCase space, ScalarFn kappa, ScalarFn tau,
                                  ScalarFn sigma, const FrameInit& init, const Grid& grid);

struct FamilyParams {
    Grid grid;
    double tau = 1.0;
    double phi = 1.0;
    double gamma0 = 1.0;
    double kappa = 0.0;   // constant curvature, G4 backlund-consistent only
    // line family: (s, a s + b, c s + d)
    double a = 0.0, b = 0.0, c = 0.0, d = 0.0;
};

struct FamilyCurve {
    CurveData curve;
    std::optional<FrenetData> frames;  // absent for the degenerate line family
    std::vector<double> gamma;         // backlund-consistent family only
    std::vector<std::string> notes;
};

/// Named test fixtures:
///   "line"            (s, a s + b, c s + d); no frame apparatus (kappa = 0)
///   "g3-parabola"     (s, s^2/2, 0)
///   "g3-circular"     (s, cos s, sin s)
///   "pg3-hyperbolic"  (s, cosh s, sinh s)
///   "g4-helix"        (cos s, sin s, s, s)
///   "backlund-consistent"  solves the angle ODE for the given
///       (case, tau, phi, gamma0), sets kappa = -2 gamma' (3-space; adopted
///       for the pseudo-Galilean cases by analogy and flagged) or the
///       user-supplied constant kappa (G4), then synthesizes the curve.
FamilyCurve curve_family(SpaceCase space, const std::string& name, const FamilyParams& params);

/// Per-sample derivative of the sampled positions, analytic when available.
std::vector<GVec> curve_derivative(const CurveData& curve, int order);

}  // namespace backlund
