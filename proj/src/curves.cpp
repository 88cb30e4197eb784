#include "backlund/curves.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "backlund/detail/finite_difference.hpp"
#include "backlund/detail/runge_kutta.hpp"
#include "backlund/gamma_ode.hpp"

namespace backlund {

namespace {

constexpr double kAdmissibleTol = 1e-12;
constexpr double kCurvatureFloor = 1e-9;

double det3(const GVec& a, const GVec& b, const GVec& c) {
    return a[0] * (b[1] * c[2] - b[2] * c[1]) - a[1] * (b[0] * c[2] - b[2] * c[0]) +
           a[2] * (b[0] * c[1] - b[1] * c[0]);
}

}  // namespace

double Grid::spacing() const {
    if (samples < 2) throw std::invalid_argument("grid needs at least 2 samples");
    if (!(s_max > s_min)) throw std::invalid_argument("grid requires s_max > s_min");
    return (s_max - s_min) / static_cast<double>(samples - 1);
}

std::vector<double> Grid::points() const {
    const double h = spacing();
    std::vector<double> s(samples);
    for (std::size_t i = 0; i < samples; ++i) s[i] = s_min + static_cast<double>(i) * h;
    return s;
}

double CurveData::spacing() const {
    if (s.size() < 2) throw std::invalid_argument("curve needs at least 2 samples");
    return (s.back() - s.front()) / static_cast<double>(s.size() - 1);
}

void check_admissible(const CurveData& curve) {
    if (curve.s.size() != curve.positions.size())
        throw std::invalid_argument("curve sample count mismatch");
    const double h = curve.spacing();
    if (!(h > 0.0)) throw std::invalid_argument("grid must be increasing");
    const std::size_t k = distinguished_index(curve.space);
    for (std::size_t i = 0; i < curve.s.size(); ++i) {
        if (i > 0 && std::fabs(curve.s[i] - curve.s[i - 1] - h) > 1e-9 * (1 + std::fabs(h)))
            throw std::invalid_argument("non-uniform grid at sample " + std::to_string(i));
        if (std::fabs(curve.positions[i][k] - curve.s[i]) > kAdmissibleTol)
            throw std::invalid_argument(
                "curve not admissible: distinguished component != s at sample " +
                std::to_string(i));
    }
}

std::vector<GVec> curve_derivative(const CurveData& curve, int order) {
    const std::size_t n = curve.s.size();
    const std::size_t d = dim(curve.space);
    std::vector<GVec> out(n, GVec::zero(d));
    if (curve.analytic()) {
        const VectorFn& fn = order == 1 ? curve.d1 : order == 2 ? curve.d2 : curve.d3;
        if (!fn) throw std::invalid_argument("analytic derivative of requested order missing");
        for (std::size_t i = 0; i < n; ++i) out[i] = fn(curve.s[i]);
        return out;
    }
    const double h = curve.spacing();
    std::vector<double> comp(n);
    for (std::size_t j = 0; j < d; ++j) {
        for (std::size_t i = 0; i < n; ++i) comp[i] = curve.positions[i][j];
        const auto dj = detail::fd_derivative(comp, h, order);
        for (std::size_t i = 0; i < n; ++i) out[i][j] = dj[i];
    }
    return out;
}

TemporalVector temporal_vector(const GVec& e1, const GVec& e2, const GVec& e3) {
    if (e1.n != 4 || e2.n != 4 || e3.n != 4)
        throw std::invalid_argument("temporal_vector requires 4-component vectors");
    // cofactor expansion along a leading basis row, as for the 3d cross product
    GVec w = GVec::zero(4);
    for (std::size_t k = 0; k < 4; ++k) {
        GVec a = GVec::zero(3), b = GVec::zero(3), c = GVec::zero(3);
        std::size_t m = 0;
        for (std::size_t j = 0; j < 4; ++j) {
            if (j == k) continue;
            a[m] = e1[j];
            b[m] = e2[j];
            c[m] = e3[j];
            ++m;
        }
        const double sign = (k % 2 == 0) ? 1.0 : -1.0;
        w[k] = sign * det3(a, b, c);
    }
    const double wsq = euclid_dot(w, w);  // equals |det(e1,e2,e3,mu*w)|
    if (wsq < 1e-12)
        throw std::invalid_argument("temporal_vector: input vectors are linearly dependent");
    // det(e1,e2,e3,w) = -|w|^2 under this expansion, so mu = -1 orients it
    TemporalVector out;
    out.mu = -1.0;
    out.e4 = out.mu * w;
    return out;
}

FrenetData frenet_apparatus(const CurveData& curve) {
    check_admissible(curve);
    const std::size_t n = curve.s.size();
    const auto d1 = curve_derivative(curve, 1);
    const auto d2 = curve_derivative(curve, 2);
    const auto d3 = curve_derivative(curve, 3);

    FrenetData out;
    out.frames.e1.resize(n);
    out.frames.e2.resize(n);
    out.frames.e3.resize(n);
    out.kappa.resize(n);
    out.tau.resize(n);

    switch (curve.space) {
        case SpaceCase::G3: {
            for (std::size_t i = 0; i < n; ++i) {
                const double xpp = d2[i][1], ypp = d2[i][2];
                const double k = std::sqrt(xpp * xpp + ypp * ypp);
                if (k < kCurvatureFloor)
                    throw std::domain_error("vanishing curvature at sample " + std::to_string(i));
                out.kappa[i] = k;
                out.tau[i] = (xpp * d3[i][2] - ypp * d3[i][1]) / (k * k);
                out.frames.e1[i] = GVec(1.0, d1[i][1], d1[i][2]);
                out.frames.e2[i] = GVec(0.0, xpp / k, ypp / k);
                out.frames.e3[i] = GVec(0.0, -ypp / k, xpp / k);
            }
            break;
        }
        case SpaceCase::PG3TimelikeBinormal:
        case SpaceCase::PG3TimelikeNormal: {
            double eps = 0.0;
            for (std::size_t i = 0; i < n; ++i) {
                const double xpp = d2[i][1], ypp = d2[i][2];
                const double q = xpp * xpp - ypp * ypp;
                if (std::fabs(q) < kCurvatureFloor) {
                    if (xpp * xpp + ypp * ypp >= kCurvatureFloor)
                        throw std::domain_error("null normal at sample " + std::to_string(i));
                    throw std::domain_error("vanishing curvature at sample " + std::to_string(i));
                }
                // eps makes det(E1,E2,E3) = +1; a sign change would require
                // passing through a null normal, which is excluded above
                const double eps_i = q > 0 ? 1.0 : -1.0;
                if (i == 0)
                    eps = eps_i;
                else if (eps_i != eps)
                    throw std::domain_error("null normal crossing before sample " +
                                            std::to_string(i));
                const double k = std::sqrt(std::fabs(q));
                out.kappa[i] = k;
                out.tau[i] = (xpp * d3[i][2] - ypp * d3[i][1]) / (k * k);
                out.frames.e1[i] = GVec(1.0, d1[i][1], d1[i][2]);
                out.frames.e2[i] = GVec(0.0, xpp / k, ypp / k);
                out.frames.e3[i] = GVec(0.0, eps * ypp / k, eps * xpp / k);
            }
            out.epsilon = eps;
            break;
        }
        case SpaceCase::G4: {
            out.frames.e4.resize(n);
            out.sigma.assign(n, 0.0);
            for (std::size_t i = 0; i < n; ++i) {
                const GVec sp1(d1[i][0], d1[i][1], d1[i][2]);
                const GVec sp2(d2[i][0], d2[i][1], d2[i][2]);
                const GVec sp3(d3[i][0], d3[i][1], d3[i][2]);
                const double k = euclid_norm(sp2);
                if (k < kCurvatureFloor)
                    throw std::domain_error("vanishing curvature at sample " + std::to_string(i));
                const double t = det3(sp1, sp2, sp3) / (k * k);
                if (std::fabs(t) < kCurvatureFloor)
                    throw std::domain_error(
                        "vanishing torsion at sample " + std::to_string(i) +
                        " (normal derivative direction undefined)");
                out.kappa[i] = k;
                out.tau[i] = t;
                out.frames.e1[i] = d1[i];
                out.frames.e2[i] = (1.0 / k) * d2[i];
                const double kprime = euclid_dot(sp2, sp3) / k;
                out.frames.e3[i] = (1.0 / (k * k * t)) * (k * d3[i] - kprime * d2[i]);
                const auto tv =
                    temporal_vector(out.frames.e1[i], out.frames.e2[i], out.frames.e3[i]);
                out.frames.e4[i] = tv.e4;
                if (i == 0) out.mu = tv.mu;
            }
            break;
        }
    }
    return out;
}

FrameInit FrameInit::standard(SpaceCase space) {
    FrameInit init;
    switch (space) {
        case SpaceCase::G3:
        case SpaceCase::PG3TimelikeBinormal:
            init.e1 = GVec(1, 0, 0);
            init.e2 = GVec(0, 1, 0);
            init.e3 = GVec(0, 0, 1);
            init.position = GVec(0, 0, 0);
            break;
        case SpaceCase::PG3TimelikeNormal:
            // timelike normal: <E2,E2> = -1 under the pseudo-Galilean product
            init.e1 = GVec(1, 0, 0);
            init.e2 = GVec(0, 0, 1);
            init.e3 = GVec(0, 1, 0);
            init.position = GVec(0, 0, 0);
            break;
        case SpaceCase::G4:
            init.e1 = GVec(0, 0, 0, 1);
            init.e2 = GVec(1, 0, 0, 0);
            init.e3 = GVec(0, 1, 0, 0);
            init.e4 = GVec(0, 0, 1, 0);
            init.position = GVec(0, 0, 0, 0);
            break;
    }
    return init;
}

SynthesizedCurve synthesize_curve(SpaceCase space, ScalarFn kappa, ScalarFn tau, ScalarFn sigma,
                                  const FrameInit& init, const Grid& grid) {
    if (!kappa || !tau) throw std::invalid_argument("synthesize_curve requires kappa and tau");
    SynthesizedCurve out;
    const std::size_t d = dim(space);
    const bool g4 = space == SpaceCase::G4;
    if (g4 && !sigma) {
        out.notes.push_back("sigma not supplied; integrating with sigma = 0");
        sigma = [](double) { return 0.0; };
    }

    const auto s = grid.points();
    const double h = grid.spacing();
    const std::size_t nblocks = g4 ? 5 : 4;  // E1..E3[,E4], position
    std::vector<double> state(nblocks * d, 0.0);
    for (std::size_t j = 0; j < d; ++j) {
        state[0 * d + j] = init.e1[j];
        state[1 * d + j] = init.e2[j];
        state[2 * d + j] = init.e3[j];
        if (g4) state[3 * d + j] = init.e4[j];
        state[(nblocks - 1) * d + j] = init.position[j];
    }

    auto system = [&](const std::vector<double>& x, std::vector<double>& dx, double t) {
        const double k = kappa(t);
        const double tv = tau(t);
        const double* e1 = x.data() + 0 * d;
        const double* e2 = x.data() + 1 * d;
        const double* e3 = x.data() + 2 * d;
        for (std::size_t j = 0; j < d; ++j) {
            dx[0 * d + j] = k * e2[j];
            dx[1 * d + j] = g4 ? (-k * e1[j] + tv * e3[j]) : tv * e3[j];
            dx[2 * d + j] = is_pseudo(space) ? tv * e2[j] : -tv * e2[j];
            dx[(nblocks - 1) * d + j] = e1[j];
        }
        if (g4) {
            const double sg = sigma(t);
            for (std::size_t j = 0; j < d; ++j) dx[3 * d + j] = -sg * e3[j];
        }
    };

    CurveData curve;
    curve.space = space;
    curve.s = s;
    curve.positions.resize(s.size(), GVec::zero(d));

    FrenetData fr;
    fr.frames.e1.resize(s.size(), GVec::zero(d));
    fr.frames.e2.resize(s.size(), GVec::zero(d));
    fr.frames.e3.resize(s.size(), GVec::zero(d));
    if (g4) fr.frames.e4.resize(s.size(), GVec::zero(d));
    fr.kappa.resize(s.size());
    fr.tau.resize(s.size());
    if (g4) fr.sigma.resize(s.size());

    detail::RungeKutta4 rk(state.size());
    auto record = [&](std::size_t i) {
        for (std::size_t j = 0; j < d; ++j) {
            fr.frames.e1[i][j] = state[0 * d + j];
            fr.frames.e2[i][j] = state[1 * d + j];
            fr.frames.e3[i][j] = state[2 * d + j];
            if (g4) fr.frames.e4[i][j] = state[3 * d + j];
            curve.positions[i][j] = state[(nblocks - 1) * d + j];
        }
        fr.kappa[i] = kappa(s[i]);
        fr.tau[i] = tau(s[i]);
        if (g4) fr.sigma[i] = sigma(s[i]);
    };
    record(0);
    for (std::size_t i = 1; i < s.size(); ++i) {
        rk.step(system, state, s[i - 1], h);
        record(i);
    }

    // For 3-space with the canonical frame start the distinguished component
    // of E1 is exactly 1 and those of E2, E3 exactly 0 at every RK4 stage, so
    // the distinguished position component integrates to s exactly; store the
    // closed form instead of the accumulated sum.
    if (!g4 && init.e1[0] == 1.0 && init.e2[0] == 0.0 && init.e3[0] == 0.0) {
        for (std::size_t i = 0; i < s.size(); ++i)
            curve.positions[i][0] = init.position[0] + (s[i] - s.front());
    }

    if (space == SpaceCase::PG3TimelikeBinormal || space == SpaceCase::PG3TimelikeNormal)
        fr.epsilon = det3(init.e1, init.e2, init.e3) >= 0 ? 1.0 : -1.0;

    out.curve = std::move(curve);
    out.frames = std::move(fr);
    return out;
}

namespace {

CurveData explicit_curve(SpaceCase space, const Grid& grid, VectorFn pos, VectorFn d1, VectorFn d2,
                         VectorFn d3) {
    CurveData c;
    c.space = space;
    c.s = grid.points();
    c.positions.reserve(c.s.size());
    for (double sv : c.s) c.positions.push_back(pos(sv));
    c.d1 = std::move(d1);
    c.d2 = std::move(d2);
    c.d3 = std::move(d3);
    return c;
}

}  // namespace

FamilyCurve curve_family(SpaceCase space, const std::string& name, const FamilyParams& params) {
    FamilyCurve out;
    const Grid& grid = params.grid;

    if (name == "line") {
        const double a = params.a, b = params.b, c = params.c, d = params.d;
        out.curve = explicit_curve(
            space, grid, [=](double s) { return GVec(s, a * s + b, c * s + d); },
            [=](double) { return GVec(1, a, c); }, [](double) { return GVec(0, 0, 0); },
            [](double) { return GVec(0, 0, 0); });
        out.notes.push_back("degenerate fixture: kappa vanishes, no frame apparatus");
        return out;
    }
    if (name == "g3-parabola") {
        out.curve = explicit_curve(
            SpaceCase::G3, grid, [](double s) { return GVec(s, s * s / 2, 0); },
            [](double s) { return GVec(1, s, 0); }, [](double) { return GVec(0, 1, 0); },
            [](double) { return GVec(0, 0, 0); });
        out.frames = frenet_apparatus(out.curve);
        return out;
    }
    if (name == "g3-circular") {
        out.curve = explicit_curve(
            SpaceCase::G3, grid, [](double s) { return GVec(s, std::cos(s), std::sin(s)); },
            [](double s) { return GVec(1, -std::sin(s), std::cos(s)); },
            [](double s) { return GVec(0, -std::cos(s), -std::sin(s)); },
            [](double s) { return GVec(0, std::sin(s), -std::cos(s)); });
        out.frames = frenet_apparatus(out.curve);
        return out;
    }
    if (name == "pg3-hyperbolic") {
        const SpaceCase c = is_pseudo(space) ? space : SpaceCase::PG3TimelikeBinormal;
        out.curve = explicit_curve(
            c, grid, [](double s) { return GVec(s, std::cosh(s), std::sinh(s)); },
            [](double s) { return GVec(1, std::sinh(s), std::cosh(s)); },
            [](double s) { return GVec(0, std::cosh(s), std::sinh(s)); },
            [](double s) { return GVec(0, std::sinh(s), std::cosh(s)); });
        out.frames = frenet_apparatus(out.curve);
        return out;
    }
    if (name == "g4-helix") {
        out.curve = explicit_curve(
            SpaceCase::G4, grid,
            [](double s) { return GVec(std::cos(s), std::sin(s), s, s); },
            [](double s) { return GVec(-std::sin(s), std::cos(s), 1, 1); },
            [](double s) { return GVec(-std::cos(s), -std::sin(s), 0, 0); },
            [](double s) { return GVec(std::sin(s), -std::cos(s), 0, 0); });
        out.frames = frenet_apparatus(out.curve);
        return out;
    }
    if (name == "backlund-consistent") {
        const auto bp = make_backlund_params(space, params.tau, params.phi, params.gamma0, grid);
        ScalarFn kappa_fn;
        if (space == SpaceCase::G4) {
            const double k = params.kappa;
            kappa_fn = [k](double) { return k; };
            out.notes.push_back("G4 seed curvature is user-supplied (constant)");
        } else {
            // kappa = -2 dgamma/ds along the closed-form angle solution
            kappa_fn = [bp](double s) {
                const double g = gamma_closed_form(bp, s);
                return -2.0 * gamma_rhs(bp.space, g, bp.tau0, bp.phi);
            };
            if (is_pseudo(space))
                out.notes.push_back(
                    "curvature relation kappa = -2 dgamma/ds adopted for the pseudo-Galilean "
                    "cases by analogy; no such relation is part of their statement");
        }
        const double tau0 = params.tau;
        auto synth = synthesize_curve(
            space, kappa_fn, [tau0](double) { return tau0; }, {}, FrameInit::standard(space),
            grid);
        out.curve = std::move(synth.curve);
        out.frames = std::move(synth.frames);
        out.gamma = solve_gamma(bp, kappa_fn);
        for (auto& n : synth.notes) out.notes.push_back(n);
        double kmax = 0.0;
        for (double k : out.frames->kappa) kmax = std::max(kmax, std::fabs(k));
        if (kmax < 1e-12)
            out.notes.push_back("degenerate seed: gamma0 is a fixed point, kappa vanishes");
        return out;
    }
    throw std::invalid_argument("unknown curve family '" + name + "'");
}

}  // namespace backlund
