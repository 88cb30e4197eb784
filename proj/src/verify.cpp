#include "backlund/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "backlund/detail/finite_difference.hpp"

namespace backlund {

void Tolerances::set(const std::string& name, double value) {
    if (name == "distance_coeff") distance_coeff = value;
    else if (name == "binormal_angle") binormal_angle = value;
    else if (name == "coeff_identity") coeff_identity = value;
    else if (name == "tangent_defect") tangent_defect = value;
    else if (name == "speed_deficit") speed_deficit = value;
    else if (name == "binormal_equation") binormal_equation = value;
    else if (name == "norm_spread") norm_spread = value;
    else if (name == "torsion_constancy") torsion_constancy = value;
    else if (name == "estimate_match") estimate_match = value;
    else if (name == "frenet_defect") frenet_defect = value;
    else if (name == "curvature_floor") curvature_floor = value;
    else throw std::invalid_argument("unknown tolerance '" + name + "'");
}

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::Pass: return "pass";
        case Verdict::Fail: return "fail";
        case Verdict::Info: return "info";
        case Verdict::Indeterminate: return "indeterminate";
    }
    return "?";
}

const ResidualEntry* DiagnosticsReport::find(const std::string& name) const {
    for (const auto& e : checks)
        if (e.name == name) return &e;
    return nullptr;
}

bool DiagnosticsReport::all_pass() const {
    return std::none_of(checks.begin(), checks.end(),
                        [](const ResidualEntry& e) { return e.verdict == Verdict::Fail; });
}

std::vector<double> frame_coefficients(const std::vector<GVec>& frame, const GVec& v) {
    const std::size_t n = frame.size();
    if (n < 3 || n > 4 || v.n != n)
        throw std::invalid_argument("frame_coefficients: dimension mismatch");
    // columns of A are the frame vectors
    double A[4][5];
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) A[i][j] = frame[j][i];
        A[i][n] = v[i];
    }
    double det = 1.0;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        for (std::size_t r = col + 1; r < n; ++r)
            if (std::fabs(A[r][col]) > std::fabs(A[piv][col])) piv = r;
        if (piv != col) {
            for (std::size_t j = 0; j <= n; ++j) std::swap(A[col][j], A[piv][j]);
            det = -det;
        }
        det *= A[col][col];
        if (std::fabs(A[col][col]) < 1e-300)
            throw std::domain_error("degenerate frame: vectors are linearly dependent");
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col) continue;
            const double f = A[r][col] / A[col][col];
            for (std::size_t j = col; j <= n; ++j) A[r][j] -= f * A[col][j];
        }
    }
    if (std::fabs(det) < 1e-9)
        throw std::domain_error("degenerate frame: |det| below 1e-9");
    std::vector<double> c(n);
    for (std::size_t i = 0; i < n; ++i) c[i] = A[i][n] / A[i][i];
    return c;
}

ExpectedDefects expected_defects(SpaceCase space, double kappa, double gamma, double phi,
                                 double tau) {
    ExpectedDefects out;
    const std::size_t d = dim(space);
    out.tangent.assign(d, 0.0);
    out.binormal.assign(d, 0.0);
    switch (space) {
        case SpaceCase::G3: {
            const double rho = std::sin(phi) / tau;
            out.tangent[1] = rho * kappa * std::cos(gamma);
            out.speed_deficit = std::sin(gamma) * std::sin(gamma) * (1 - std::cos(phi));
            out.binormal[1] = -kappa * std::sin(gamma) * std::sin(phi);
            break;
        }
        case SpaceCase::PG3TimelikeBinormal: {
            const double rho = -std::sinh(phi) / tau;
            out.tangent[1] = rho * kappa * std::cos(gamma);
            out.speed_deficit = std::sin(gamma) * std::sin(gamma) * (1 - std::cosh(phi));
            out.binormal[1] = -kappa * std::sin(gamma) * std::sinh(phi);
            break;
        }
        case SpaceCase::PG3TimelikeNormal: {
            const double rho = -std::sinh(phi) / tau;
            const double chg = std::cosh(gamma), shg = std::sinh(gamma);
            const double chp = std::cosh(phi), shp = std::sinh(phi);
            out.tangent[0] = 2 * (chp - 1) * shg * shg;
            out.tangent[1] = rho * kappa * chg + 2 * (chp - 1) * shg * chg;
            out.speed_deficit = shg * shg * (1 - chp);
            out.binormal[0] = 2 * tau * (chp - 1) * chg * shg;
            out.binormal[1] = -kappa * shg * shp + 2 * tau * (chp * chg * chg - shg * shg);
            break;
        }
        case SpaceCase::G4:
            // the kappa term of the angle ODE cancels both defects exactly
            out.speed_deficit = std::sin(gamma) * std::sin(gamma) * (1 - std::cos(phi));
            break;
    }
    return out;
}

namespace {

struct Reparametrized {
    // derivatives with respect to the curve's own distinguished parameter
    std::vector<GVec> d1, d2, d3;
    std::vector<bool> regular;
};

// Finite-difference derivatives of the sampled positions, converted by the
// chain rule from d/ds to d/dt, t = distinguished component. For admissible
// curves t' == 1 and the conversion is the identity.
Reparametrized reparametrized_derivatives(const CurveData& curve) {
    const std::size_t n = curve.s.size();
    const std::size_t d = dim(curve.space);
    const std::size_t k = distinguished_index(curve.space);
    const double h = curve.spacing();

    std::vector<std::vector<double>> p1(d), p2(d), p3(d);
    std::vector<double> comp(n);
    for (std::size_t j = 0; j < d; ++j) {
        for (std::size_t i = 0; i < n; ++i) comp[i] = curve.positions[i][j];
        p1[j] = detail::fd_derivative(comp, h, 1);
        p2[j] = detail::fd_derivative(comp, h, 2);
        p3[j] = detail::fd_derivative(comp, h, 3);
    }

    Reparametrized out;
    out.d1.assign(n, GVec::zero(d));
    out.d2.assign(n, GVec::zero(d));
    out.d3.assign(n, GVec::zero(d));
    out.regular.assign(n, true);
    for (std::size_t i = 0; i < n; ++i) {
        const double tp = p1[k][i], tpp = p2[k][i], tppp = p3[k][i];
        // the third-derivative conversion divides by tp^5; below a quarter of
        // unit speed the stencil error is amplified beyond usefulness
        if (std::fabs(tp) < 0.25) {
            out.regular[i] = false;
            continue;
        }
        const double tp2 = tp * tp;
        for (std::size_t j = 0; j < d; ++j) {
            const double fp = p1[j][i], fpp = p2[j][i], fppp = p3[j][i];
            out.d1[i][j] = fp / tp;
            out.d2[i][j] = (fpp * tp - fp * tpp) / (tp2 * tp);
            out.d3[i][j] =
                (fppp * tp2 - 3 * fpp * tp * tpp + fp * (3 * tpp * tpp - tp * tppp)) /
                (tp2 * tp2 * tp);
        }
    }
    return out;
}

double det3_spatial(const GVec& a, const GVec& b, const GVec& c) {
    return a[0] * (b[1] * c[2] - b[2] * c[1]) - a[1] * (b[0] * c[2] - b[2] * c[0]) +
           a[2] * (b[0] * c[1] - b[1] * c[0]);
}

std::vector<GVec> frame_at(const TransformedPair& pair, std::size_t i) {
    std::vector<GVec> f{pair.seed_frames.frames.e1[i], pair.seed_frames.frames.e2[i],
                        pair.seed_frames.frames.e3[i]};
    if (pair.params.space == SpaceCase::G4) f.push_back(pair.seed_frames.frames.e4[i]);
    return f;
}

std::vector<GVec> fd_vectors(const std::vector<GVec>& samples, double h) {
    const std::size_t n = samples.size();
    const std::size_t d = samples.empty() ? 0 : samples[0].n;
    std::vector<GVec> out(n, GVec::zero(d));
    std::vector<double> comp(n);
    for (std::size_t j = 0; j < d; ++j) {
        for (std::size_t i = 0; i < n; ++i) comp[i] = samples[i][j];
        const auto dj = detail::fd_derivative(comp, h, 1);
        for (std::size_t i = 0; i < n; ++i) out[i][j] = dj[i];
    }
    return out;
}

double coeff_norm(const std::vector<double>& c) {
    double acc = 0.0;
    for (double x : c) acc += x * x;
    return std::sqrt(acc);
}

void require_grid(const TransformedPair& pair) {
    if (pair.seed_curve.s.size() < 64)
        throw std::invalid_argument("grid too coarse: the audit requires N >= 64");
}

}  // namespace

InvariantEstimates estimate_invariants(const CurveData& curve, const Tolerances& tol) {
    const std::size_t n = curve.s.size();
    if (n < 7) throw std::invalid_argument("estimate_invariants requires N >= 7 samples");
    const auto rd = reparametrized_derivatives(curve);
    const std::size_t bw = detail::fd_boundary_width(3);

    InvariantEstimates out;
    out.kappa.assign(n, 0.0);
    out.tau.assign(n, 0.0);
    out.valid.assign(n, false);
    bool flagged_low = false, flagged_irregular = false;

    for (std::size_t i = 0; i < n; ++i) {
        const bool interior = i >= bw && i + bw < n;
        if (!rd.regular[i]) {
            flagged_irregular = true;
            continue;
        }
        double k = 0.0, t = 0.0;
        switch (curve.space) {
            case SpaceCase::G3: {
                const double xpp = rd.d2[i][1], ypp = rd.d2[i][2];
                k = std::sqrt(xpp * xpp + ypp * ypp);
                if (k >= tol.curvature_floor)
                    t = (xpp * rd.d3[i][2] - ypp * rd.d3[i][1]) / (k * k);
                break;
            }
            case SpaceCase::PG3TimelikeBinormal:
            case SpaceCase::PG3TimelikeNormal: {
                const double xpp = rd.d2[i][1], ypp = rd.d2[i][2];
                const double q = xpp * xpp - ypp * ypp;
                k = std::sqrt(std::fabs(q));
                if (k >= tol.curvature_floor)
                    t = (xpp * rd.d3[i][2] - ypp * rd.d3[i][1]) / (k * k);
                break;
            }
            case SpaceCase::G4: {
                const GVec sp2(rd.d2[i][0], rd.d2[i][1], rd.d2[i][2]);
                k = euclid_norm(sp2);
                if (k >= tol.curvature_floor)
                    t = det3_spatial(rd.d1[i], rd.d2[i], rd.d3[i]) / (k * k);
                break;
            }
        }
        out.kappa[i] = k;
        out.tau[i] = t;
        if (k < tol.curvature_floor) {
            flagged_low = true;
            continue;
        }
        out.valid[i] = interior;
    }
    if (flagged_low)
        out.notes.push_back("samples with curvature below the floor excluded from estimates");
    if (flagged_irregular)
        out.notes.push_back("samples with a weak or non-regular distinguished parametrization "
                            "excluded");
    out.indeterminate =
        std::none_of(out.valid.begin(), out.valid.end(), [](bool b) { return b; });
    return out;
}

void check_distance(const TransformedPair& pair, const Tolerances& tol,
                    std::vector<ResidualEntry>& out, std::vector<std::string>& notes) {
    const auto& p = pair.params;
    const double rho = displacement_coefficient(p.space, p.tau0, p.C);
    const bool hyp = p.space == SpaceCase::PG3TimelikeNormal;
    const std::size_t n = pair.seed_curve.s.size();

    double max_dev = 0.0;
    double norm_min = 0.0, norm_max = 0.0, exp_min = 0.0, exp_max = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const GVec diff = pair.image_curve.positions[i] - pair.seed_curve.positions[i];
        auto c = frame_coefficients(frame_at(pair, i), diff);
        const double g = pair.gamma[i];
        c[0] -= rho * (hyp ? std::cosh(g) : std::cos(g));
        c[1] -= rho * (hyp ? std::sinh(g) : std::sin(g));
        max_dev = std::max(max_dev, coeff_norm(c));

        const double gn = g_norm(p.space, diff);
        const double ge = std::fabs(rho * (hyp ? std::cosh(g) : std::cos(g)));
        if (i == 0) {
            norm_min = norm_max = gn;
            exp_min = exp_max = ge;
        } else {
            norm_min = std::min(norm_min, gn);
            norm_max = std::max(norm_max, gn);
            exp_min = std::min(exp_min, ge);
            exp_max = std::max(exp_max, ge);
        }
    }
    out.push_back({"distance_coefficient_deviation", max_dev, 0.0, tol.distance_coeff,
                   max_dev <= tol.distance_coeff ? Verdict::Pass : Verdict::Fail});
    // the degenerate norm reads only the distinguished component, so it is
    // |rho cos(gamma)| rather than the constant separation r; auxiliary reading
    const double spread = norm_max - norm_min;
    const double exp_spread = exp_max - exp_min;
    out.push_back(
        {"distance_norm_spread_auxiliary", spread, exp_spread, tol.norm_spread, Verdict::Info});
    if (std::fabs(spread - exp_spread) > tol.norm_spread)
        notes.push_back("degenerate-norm reading of the separation deviates from |rho cos gamma|");
}

void tangent_mismatch(const TransformedPair& pair, const Tolerances& tol,
                      std::vector<ResidualEntry>& out, std::vector<std::string>& notes) {
    require_grid(pair);
    const auto& p = pair.params;
    const std::size_t n = pair.seed_curve.s.size();
    const std::size_t k = distinguished_index(p.space);
    const double h = pair.seed_curve.spacing();
    const auto dimg = fd_vectors(pair.image_curve.positions, h);

    double max_defect = 0.0, max_defect_expected = 0.0;
    double max_defect_vs_expected = 0.0;
    double max_deficit_vs_expected = 0.0;
    const bool g4 = p.space == SpaceCase::G4;

    for (std::size_t i = 1; i + 1 < n; ++i) {
        const auto frame = frame_at(pair, i);
        const GVec D = dimg[i] - pair.image_frames.e1[i];
        const auto c = frame_coefficients(frame, D);
        const auto exp =
            expected_defects(p.space, pair.seed_frames.kappa[i], pair.gamma[i], p.phi, p.tau0);

        std::vector<double> diff(c.size());
        for (std::size_t j = 0; j < c.size(); ++j) diff[j] = c[j] - exp.tangent[j];
        max_defect = std::max(max_defect, coeff_norm(c));
        max_defect_expected = std::max(max_defect_expected, coeff_norm(exp.tangent));
        max_defect_vs_expected = std::max(max_defect_vs_expected, coeff_norm(diff));

        const double observed_deficit = 1.0 - dimg[i][k];
        double expected_deficit = exp.speed_deficit;
        if (g4) {
            // synthesized G4 frames may drift off (1,0,0) in the distinguished
            // slot; evaluate the expectation from the frame samples instead
            const double cg = std::cos(pair.gamma[i]), sg = std::sin(pair.gamma[i]);
            const double cp = std::cos(p.phi), sp = std::sin(p.phi);
            expected_deficit =
                1.0 - ((cg * cg + sg * sg * cp) * frame[0][k] +
                       cg * sg * (1 - cp) * frame[1][k] + sg * sp * frame[2][k]);
        }
        max_deficit_vs_expected =
            std::max(max_deficit_vs_expected, std::fabs(observed_deficit - expected_deficit));
    }

    out.push_back({"tangent_defect_max_auxiliary", max_defect, max_defect_expected,
                   tol.tangent_defect, Verdict::Info});
    out.push_back({"tangent_defect_vs_expected", max_defect_vs_expected, 0.0, tol.tangent_defect,
                   max_defect_vs_expected <= tol.tangent_defect ? Verdict::Pass : Verdict::Fail});
    out.push_back({"speed_deficit_vs_expected", max_deficit_vs_expected, 0.0, tol.speed_deficit,
                   max_deficit_vs_expected <= tol.speed_deficit ? Verdict::Pass : Verdict::Fail});
    if (g4) {
        double drift = 0.0;
        for (std::size_t i = 0; i < n; ++i)
            drift = std::max({drift, std::fabs(pair.seed_frames.frames.e1[i][k] - 1.0),
                              std::fabs(pair.seed_frames.frames.e2[i][k]),
                              std::fabs(pair.seed_frames.frames.e3[i][k])});
        if (drift > 1e-9)
            notes.push_back("seed frame distinguished components deviate from (1,0,0); "
                            "speed-deficit expectation evaluated from the frame samples");
    }
}

void frame_identity_residuals(const TransformedPair& pair, const Tolerances& tol,
                              std::vector<ResidualEntry>& out, std::vector<std::string>& notes) {
    require_grid(pair);
    const auto& p = pair.params;
    const std::size_t n = pair.seed_curve.s.size();
    const double h = pair.seed_curve.spacing();
    const auto de3 = fd_vectors(pair.image_frames.e3, h);
    const double tau_img = predicted_torsion(p.space, p.tau0);
    const double ode_sign = is_pseudo(p.space) ? 1.0 : -1.0;  // dE3~/ds = sign * tau~ * E2~
    const double angle_coeff = is_circular(p.space) ? std::cos(p.phi) : std::cosh(p.phi);

    double max_r3_vs_expected = 0.0;
    double max_angle_dev = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const auto frame = frame_at(pair, i);
        const auto ce3 = frame_coefficients(frame, pair.image_frames.e3[i]);
        max_angle_dev = std::max(max_angle_dev, std::fabs(ce3[2] - angle_coeff));
        if (i == 0 || i + 1 == n) continue;  // interior samples only for the derivative
        const GVec R = de3[i] - ode_sign * tau_img * pair.image_frames.e2[i];
        const auto c = frame_coefficients(frame, R);
        const auto exp =
            expected_defects(p.space, pair.seed_frames.kappa[i], pair.gamma[i], p.phi, p.tau0);
        std::vector<double> diff(c.size());
        for (std::size_t j = 0; j < c.size(); ++j) diff[j] = c[j] - exp.binormal[j];
        max_r3_vs_expected = std::max(max_r3_vs_expected, coeff_norm(diff));
    }
    out.push_back({"binormal_equation_defect_vs_expected", max_r3_vs_expected, 0.0,
                   tol.binormal_equation,
                   max_r3_vs_expected <= tol.binormal_equation ? Verdict::Pass : Verdict::Fail});
    out.push_back({"binormal_angle_constancy", max_angle_dev, 0.0, tol.binormal_angle,
                   max_angle_dev <= tol.binormal_angle ? Verdict::Pass : Verdict::Fail});
    (void)notes;
}

namespace {

void seed_frenet_defect(const TransformedPair& pair, const Tolerances& tol,
                        std::vector<ResidualEntry>& out, std::vector<std::string>& notes) {
    const auto& p = pair.params;
    const auto& fr = pair.seed_frames;
    const std::size_t n = pair.seed_curve.s.size();
    const double h = pair.seed_curve.spacing();
    const bool g4 = p.space == SpaceCase::G4;
    const auto d1 = fd_vectors(fr.frames.e1, h);
    const auto d2 = fd_vectors(fr.frames.e2, h);
    const auto d3 = fd_vectors(fr.frames.e3, h);
    double worst = 0.0;
    for (std::size_t i = 1; i + 1 < n; ++i) {
        const double kap = fr.kappa[i], tau = fr.tau[i];
        const GVec r1 = d1[i] - kap * fr.frames.e2[i];
        const GVec r2 = g4 ? d2[i] - (-kap * fr.frames.e1[i] + tau * fr.frames.e3[i])
                           : d2[i] - tau * fr.frames.e3[i];
        const double e3sign = is_pseudo(p.space) ? 1.0 : -1.0;
        const GVec r3 = d3[i] - e3sign * tau * fr.frames.e2[i];
        worst = std::max({worst, euclid_norm(r1), euclid_norm(r2), euclid_norm(r3)});
    }
    out.push_back({"seed_frenet_system_defect", worst, 0.0, tol.frenet_defect, Verdict::Info});
    if (worst > tol.frenet_defect)
        notes.push_back("seed frames do not satisfy the Frenet system the expectation tables "
                        "assume; downstream defect checks measure that discrepancy");
}

}  // namespace

DiagnosticsReport full_report(const TransformedPair& pair, const Tolerances& tol) {
    DiagnosticsReport rep;
    rep.params = pair.params;
    const auto& p = pair.params;
    const std::size_t n = pair.seed_curve.s.size();

    // half-angle identities for the displacement coefficient and separation
    const double rho = displacement_coefficient(p.space, p.tau0, p.C);
    const double rho_closed =
        is_circular(p.space) ? std::sin(p.phi) / p.tau0 : -std::sinh(p.phi) / p.tau0;
    const double id_dev = std::fabs(rho - rho_closed);
    rep.checks.push_back({"displacement_coefficient_identity", id_dev, 0.0, tol.coeff_identity,
                          id_dev <= tol.coeff_identity ? Verdict::Pass : Verdict::Fail});
    const auto rad = radius(p.space, p.tau0, p.phi);
    const double rad_dev = std::fabs(std::fabs(rad.half_angle_form) - rad.value);
    rep.checks.push_back({"separation_half_angle_identity", rad_dev, 0.0, tol.coeff_identity,
                          rad_dev <= tol.coeff_identity ? Verdict::Pass : Verdict::Fail});

    double tau_dev = 0.0, kappa_max = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        tau_dev = std::max(tau_dev, std::fabs(pair.seed_frames.tau[i] - p.tau0));
        kappa_max = std::max(kappa_max, std::fabs(pair.seed_frames.kappa[i]));
    }
    rep.checks.push_back({"seed_torsion_constancy", tau_dev, 0.0, tol.torsion_constancy,
                          tau_dev <= tol.torsion_constancy ? Verdict::Pass : Verdict::Fail});

    check_distance(pair, tol, rep.checks, rep.notes);
    tangent_mismatch(pair, tol, rep.checks, rep.notes);
    frame_identity_residuals(pair, tol, rep.checks, rep.notes);
    seed_frenet_defect(pair, tol, rep.checks, rep.notes);

    // invariant estimates: informational comparisons against the predictions
    const auto seed_est = estimate_invariants(pair.seed_curve, tol);
    if (seed_est.indeterminate) {
        rep.checks.push_back({"seed_curvature_estimate", 0.0, 0.0, tol.estimate_match,
                              Verdict::Indeterminate});
        rep.checks.push_back(
            {"seed_torsion_estimate", 0.0, 0.0, tol.estimate_match, Verdict::Indeterminate});
    } else {
        double kdev = 0.0, tdev = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            if (!seed_est.valid[i]) continue;
            kdev = std::max(kdev,
                            std::fabs(seed_est.kappa[i] - std::fabs(pair.seed_frames.kappa[i])));
            tdev = std::max(tdev, std::fabs(seed_est.tau[i] - p.tau0));
        }
        rep.checks.push_back(
            {"seed_curvature_estimate", kdev, 0.0, tol.estimate_match, Verdict::Info});
        rep.checks.push_back(
            {"seed_torsion_estimate", tdev, 0.0, tol.estimate_match, Verdict::Info});
    }
    for (const auto& note : seed_est.notes) rep.notes.push_back("seed estimates: " + note);

    const auto img_est = estimate_invariants(pair.image_curve, tol);
    const double tau_pred = predicted_torsion(p.space, p.tau0);
    if (img_est.indeterminate) {
        rep.checks.push_back({"image_torsion_estimate_vs_predicted", 0.0, tau_pred,
                              tol.estimate_match, Verdict::Indeterminate});
        rep.notes.push_back("image invariants indeterminate: curvature estimate below the floor "
                            "(the torsion formula divides by kappa^2)");
    } else {
        double tdev = 0.0;
        for (std::size_t i = 0; i < n; ++i)
            if (img_est.valid[i]) tdev = std::max(tdev, std::fabs(img_est.tau[i] - tau_pred));
        rep.checks.push_back({"image_torsion_estimate_vs_predicted", tdev, 0.0,
                              tol.estimate_match, Verdict::Info});
    }

    const bool pg = is_pseudo(p.space);
    if (img_est.indeterminate || pg) {
        rep.checks.push_back({"image_curvature_estimate_vs_predicted", 0.0, 0.0,
                              tol.estimate_match, Verdict::Indeterminate});
        if (pg)
            rep.notes.push_back(
                "no curvature relation is specified for the pseudo-Galilean cases");
    } else {
        double kdev = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            if (!img_est.valid[i]) continue;
            const double dg =
                gamma_rhs(p.space, pair.gamma[i], p.tau0, p.phi, pair.seed_frames.kappa[i]);
            const auto pred = predicted_curvature(p.space, pair.seed_frames.kappa[i], dg);
            if (pred.value)
                kdev = std::max(kdev, std::fabs(img_est.kappa[i] - std::fabs(*pred.value)));
        }
        rep.checks.push_back({"image_curvature_estimate_vs_predicted", kdev, 0.0,
                              tol.estimate_match, Verdict::Info});
    }
    for (const auto& note : img_est.notes) rep.notes.push_back("image estimates: " + note);

    // per-case convention notes
    if (is_circular(p.space)) {
        rep.notes.push_back("circular-function convention enforced throughout the "
                            "transformed-frame table for this case");
        rep.notes.push_back(
            "angle ODE coefficient is tan(phi/2); the hyperbolic variant is not used");
    }
    if (p.space == SpaceCase::PG3TimelikeNormal) {
        char buf[64];
        std::snprintf(buf, sizeof(buf), "%.17g", std::sinh(p.phi) / (p.r * p.tau0));
        rep.notes.push_back(std::string("torsion sign convention: predicted image torsion is "
                                        "-tau; signed ratio sinh(phi)/(r tau) = ") +
                            buf);
    }
    if (kappa_max < 1e-9)
        rep.notes.push_back("degenerate seed: kappa vanishes; the audited identities hold "
                            "exactly and the invariant estimates are indeterminate");
    rep.notes.push_back("speed deficit quantifies the image curve's departure from unit-speed "
                        "parametrization in the seed parameter");
    rep.notes.push_back("all residual norms use the auxiliary Euclidean product");
    return rep;
}

}  // namespace backlund
