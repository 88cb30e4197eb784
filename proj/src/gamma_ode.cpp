#include "backlund/gamma_ode.hpp"

#include <cmath>
#include <stdexcept>

#include "backlund/detail/runge_kutta.hpp"

namespace backlund {

double backlund_constant(SpaceCase space, double tau, double phi) {
    if (phi == 0.0)
        throw std::domain_error("phi out of domain: constant angle phi != 0 is required");
    if (is_circular(space)) {
        const double t = std::tan(phi / 2);
        if (!std::isfinite(t))
            throw std::domain_error("phi out of domain: tan(phi/2) pole at phi = pi");
        return tau * t;
    }
    return tau * std::tanh(phi / 2);
}

Radius radius(SpaceCase space, double tau, double phi) {
    if (tau == 0.0)
        throw std::domain_error("tau out of domain: the torsion satisfies tau = sin(phi)/r != 0");
    const double c = backlund_constant(space, tau, phi);
    Radius out;
    if (is_circular(space)) {
        if (std::sin(phi) == 0.0)
            throw std::domain_error("phi out of domain: sin(phi) != 0 is required");
        out.value = std::fabs(std::sin(phi) / tau);
        out.half_angle_form = 2 * c / (tau * tau * (1 + std::pow(c / tau, 2)));
    } else {
        if (std::sinh(phi) == 0.0)
            throw std::domain_error("phi out of domain: sinh(phi) != 0 is required");
        out.value = std::fabs(std::sinh(phi) / tau);
        out.half_angle_form = 2 * c / (tau * tau * (std::pow(c / tau, 2) - 1));
    }
    return out;
}

BacklundParams make_backlund_params(SpaceCase space, double tau0, double phi, double gamma0,
                                    const Grid& grid) {
    if (tau0 == 0.0)
        throw std::domain_error("tau out of domain: the torsion satisfies tau = sin(phi)/r != 0");
    BacklundParams p;
    p.space = space;
    p.phi = phi;
    p.tau0 = tau0;
    p.gamma0 = gamma0;
    p.C = backlund_constant(space, tau0, phi);
    p.r = radius(space, tau0, phi).value;
    p.grid = grid;
    return p;
}

double gamma_rhs(SpaceCase space, double gamma, double tau, double phi, double kappa) {
    switch (space) {
        case SpaceCase::G3:
            return tau * std::sin(gamma) * std::tan(phi / 2);
        case SpaceCase::PG3TimelikeBinormal:
            return tau * std::sin(gamma) * std::tanh(phi / 2);
        case SpaceCase::PG3TimelikeNormal:
            return -tau * std::sinh(gamma) * std::tanh(phi / 2);
        case SpaceCase::G4:
            return tau * std::sin(gamma) * std::tan(phi / 2) - kappa;
    }
    return 0.0;
}

std::vector<double> solve_gamma(const BacklundParams& params, const ScalarFn& kappa) {
    const auto s = params.grid.points();
    const double h = params.grid.spacing();
    const bool g4 = params.space == SpaceCase::G4;

    std::vector<double> out(s.size());
    std::vector<double> state{params.gamma0};
    out[0] = params.gamma0;

    detail::RungeKutta4 rk(1);
    auto system = [&](const std::vector<double>& x, std::vector<double>& dx, double t) {
        const double k = (g4 && kappa) ? kappa(t) : 0.0;
        dx[0] = gamma_rhs(params.space, x[0], params.tau0, params.phi, k);
    };
    for (std::size_t i = 1; i < s.size(); ++i) {
        rk.step(system, state, s[i - 1], h);
        out[i] = state[0];
    }
    return out;
}

double gamma_closed_form(const BacklundParams& params, double s) {
    if (params.space == SpaceCase::G4)
        throw std::domain_error("no closed form: the G4 angle ODE carries the kappa term");
    if (params.space == SpaceCase::PG3TimelikeNormal) {
        const double w = std::tanh(params.gamma0 / 2) * std::exp(-params.C * s);
        if (std::fabs(w) >= 1.0)
            throw std::domain_error("closed form out of domain: |tanh(gamma0/2) e^{-Cs}| >= 1");
        return 2 * std::atanh(w);
    }
    // the solution never crosses the fixed points k*pi, so the 2*pi branch
    // offset of the principal value is constant along s
    const double pi = std::acos(-1.0);
    const double principal0 = 2 * std::atan(std::tan(params.gamma0 / 2));
    const double offset = 2 * pi * std::round((params.gamma0 - principal0) / (2 * pi));
    return offset + 2 * std::atan(std::tan(params.gamma0 / 2) * std::exp(params.C * s));
}

}  // namespace backlund
