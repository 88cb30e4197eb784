#pragma once

#include <vector>

#include "backlund/curves.hpp"
#include "backlund/spaces.hpp"

namespace backlund {

/// Transformation parameters. C and r are derived on construction:
///   circular cases:  C = tau0 tan(phi/2),  r = |sin(phi)/tau0|
///   pseudo cases:    C = tau0 tanh(phi/2), r = |sinh(phi)/tau0|
struct BacklundParams {
    SpaceCase space = SpaceCase::G3;
    double phi = 0.0;
    double tau0 = 0.0;
    double gamma0 = 0.0;
    double C = 0.0;
    double r = 0.0;
    Grid grid;
};

/// Validates the parameter domain (phi != 0, tau0 != 0, tan pole for the
/// circular cases) and fills in the derived constants.
BacklundParams make_backlund_params(SpaceCase space, double tau0, double phi, double gamma0,
                                    const Grid& grid);

/// C = tau tan(phi/2) (circular) or tau tanh(phi/2) (pseudo).
/// Throws "phi out of domain" for phi = 0 and for the circular tan pole.
double backlund_constant(SpaceCase space, double tau, double phi);

struct Radius {
    double value;            // sign-normalized positive separation
    double half_angle_form;  // signed 2 tau t/(tau^2 (1 +/- t^2)), t = tan/tanh(phi/2)
};

/// Separation between corresponding points: |sin(phi)/tau| (circular),
/// |sinh(phi)/tau| (pseudo). The equivalent half-angle expression is
/// returned alongside for cross-checking.
Radius radius(SpaceCase space, double tau, double phi);

/// Right-hand side of the angle ODE:
///   g3, pg3-tb:  tau sin(gamma) tan/tanh(phi/2)
///   pg3-tn:     -tau sinh(gamma) tanh(phi/2)
///   g4:          tau sin(gamma) tan(phi/2) - kappa
double gamma_rhs(SpaceCase space, double gamma, double tau, double phi, double kappa = 0.0);

/// RK4 with fixed step = grid spacing; gamma at every grid point, stored as
/// a continuous branch (not wrapped mod 2 pi). kappa is consulted for G4
/// only and defaults to zero.
std::vector<double> solve_gamma(const BacklundParams& params, const ScalarFn& kappa = {});

/// Separable closed form:
///   g3, pg3-tb:  2 atan(tan(gamma0/2) e^{C s})
///   pg3-tn:      2 atanh(tanh(gamma0/2) e^{-C s})
/// Throws for G4 (no closed form with the kappa term) and on atanh domain
/// violations.
double gamma_closed_form(const BacklundParams& params, double s);

}  // namespace backlund
