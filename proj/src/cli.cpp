#include "backlund/cli.hpp"

#include <cmath>
#include <fstream>
#include <iostream>

#include "backlund/gamma_ode.hpp"
#include "backlund/io.hpp"
#include "backlund/transform.hpp"
#include "backlund/verify.hpp"

namespace backlund::cli {

namespace {

Tolerances tolerances_from(const RunConfig& config) {
    Tolerances tol;
    for (const auto& [name, value] : config.tolerance_overrides) tol.set(name, value);
    return tol;
}

ScalarFn kappa_interpolant(const std::vector<double>& s, const std::vector<double>& kappa) {
    return [s, kappa](double t) {
        if (t <= s.front()) return kappa.front();
        if (t >= s.back()) return kappa.back();
        const double h = (s.back() - s.front()) / static_cast<double>(s.size() - 1);
        const auto i = static_cast<std::size_t>((t - s.front()) / h);
        const std::size_t j = std::min(i, s.size() - 2);
        const double w = (t - s[j]) / h;
        return (1 - w) * kappa[j] + w * kappa[j + 1];
    };
}

int do_generate(const RunConfig& config) {
    if (config.output_path.empty()) throw std::invalid_argument("generate requires --out");
    FamilyParams fp;
    fp.grid = config.grid;
    fp.tau = config.tau;
    fp.phi = config.phi;
    fp.gamma0 = config.gamma0;
    fp.kappa = config.kappa;
    const auto fam = curve_family(config.space, config.family, fp);
    if (!fam.frames)
        throw std::invalid_argument("family '" + config.family +
                                    "' has no frame apparatus (vanishing curvature); it cannot "
                                    "be written as a seed file");
    std::map<std::string, std::string> meta;
    meta["family"] = config.family;
    if (config.family == "backlund-consistent") {
        meta["tau0"] = io::format_double(config.tau);
        meta["phi"] = io::format_double(config.phi);
        meta["gamma0"] = io::format_double(config.gamma0);
    }
    io::write_curve_csv(config.output_path, fam.curve, *fam.frames, meta);
    for (const auto& n : fam.notes) std::cerr << "note: " << n << "\n";
    return 0;
}

int do_transform(const RunConfig& config) {
    if (config.input_path.empty() || config.output_path.empty())
        throw std::invalid_argument("transform requires --in and --out");
    const auto file = io::read_curve_csv(config.input_path);
    const SpaceCase space = file.curve.space;
    if (config.space_given && config.space != space)
        throw std::invalid_argument("--case " + to_string(config.space) +
                                    " does not match the seed file (" + to_string(space) + ")");
    const double tau0 = config.tau_given ? config.tau : file.frames.tau.front();

    Grid grid{file.curve.s.front(), file.curve.s.back(), file.curve.s.size()};
    const auto params = make_backlund_params(space, tau0, config.phi, config.gamma0, grid);

    ScalarFn kfn;
    if (space == SpaceCase::G4) kfn = kappa_interpolant(file.curve.s, file.frames.kappa);
    const auto gamma = solve_gamma(params, kfn);
    const auto pair = transform_curve(file.curve, file.frames, gamma, params);
    io::write_pair_csv(config.output_path, pair);
    return 0;
}

int do_verify(const RunConfig& config) {
    if (config.input_path.empty() || config.report_path.empty())
        throw std::invalid_argument("verify requires --in and --report");
    const auto pair = io::read_pair_csv(config.input_path);
    if (pair.seed_curve.s.size() < 64)
        throw std::invalid_argument("verify requires N >= 64 samples");
    const auto report = full_report(pair, tolerances_from(config));
    io::write_report_json(config.report_path, report);
    for (const auto& e : report.checks)
        std::cout << "[" << to_string(e.verdict) << "] " << e.name
                  << " observed=" << io::format_double(e.observed)
                  << " expected=" << io::format_double(e.expected) << "\n";
    return report.all_pass() ? 0 : 2;
}

int do_sweep(const RunConfig& config) {
    if (config.output_path.empty()) throw std::invalid_argument("sweep requires --out");
    if (config.phi_count < 1 || config.gamma0_count < 1)
        throw std::invalid_argument("sweep requires at least one point per axis");
    const auto tol = tolerances_from(config);

    auto axis = [](double lo, double hi, std::size_t count) {
        std::vector<double> v(count);
        for (std::size_t i = 0; i < count; ++i)
            v[i] = count == 1 ? lo : lo + (hi - lo) * static_cast<double>(i) /
                                              static_cast<double>(count - 1);
        return v;
    };
    const auto phis = axis(config.phi_min, config.phi_max, config.phi_count);
    const auto gamma0s = axis(config.gamma0_min, config.gamma0_max, config.gamma0_count);

    std::string json = "{\n  \"case\": \"" + to_string(config.space) + "\",\n";
    json += "  \"tau\": " + io::format_double(config.tau) + ",\n  \"points\": [\n";
    bool all_pass = true;
    bool first = true;
    for (std::size_t i = 0; i < phis.size(); ++i) {
        for (std::size_t j = 0; j < gamma0s.size(); ++j) {
            FamilyParams fp;
            fp.grid = config.grid;
            fp.tau = config.tau;
            fp.phi = phis[i];
            fp.gamma0 = gamma0s[j];
            fp.kappa = config.kappa;
            const auto fam = curve_family(config.space, "backlund-consistent", fp);
            const auto params = make_backlund_params(config.space, config.tau, phis[i],
                                                     gamma0s[j], config.grid);
            const auto pair = transform_curve(fam.curve, *fam.frames, fam.gamma, params);
            const auto report = full_report(pair, tol);
            if (!config.report_dir.empty())
                io::write_report_json(config.report_dir + "/point_" + std::to_string(i) + "_" +
                                          std::to_string(j) + ".json",
                                      report);
            std::size_t fails = 0;
            double worst = 0.0;
            std::string worst_name;
            for (const auto& e : report.checks) {
                if (e.verdict == Verdict::Fail) ++fails;
                if (e.verdict == Verdict::Fail || e.verdict == Verdict::Pass) {
                    const double excess = std::fabs(e.observed - e.expected) /
                                          (e.tolerance > 0 ? e.tolerance : 1.0);
                    if (excess > worst) {
                        worst = excess;
                        worst_name = e.name;
                    }
                }
            }
            all_pass = all_pass && report.all_pass();
            json += first ? "" : ",\n";
            first = false;
            json += "    {\"phi\": " + io::format_double(phis[i]) +
                    ", \"gamma0\": " + io::format_double(gamma0s[j]) +
                    ", \"pass\": " + (report.all_pass() ? "true" : "false") +
                    ", \"fail_count\": " + std::to_string(fails) + ", \"worst_check\": \"" +
                    worst_name + "\", \"worst_ratio\": " + io::format_double(worst) + "}";
        }
    }
    json += "\n  ],\n  \"all_pass\": " + std::string(all_pass ? "true" : "false") + "\n}\n";
    std::ofstream out(config.output_path, std::ios::binary);
    if (!out) throw std::invalid_argument("cannot write '" + config.output_path + "'");
    out << json;
    return all_pass ? 0 : 2;
}

}  // namespace

int run(const RunConfig& config) {
    try {
        if (!(config.grid.s_max > config.grid.s_min))
            throw std::invalid_argument("grid requires s_max > s_min");
        if (config.subcommand == "generate") return do_generate(config);
        if (config.subcommand == "transform") return do_transform(config);
        if (config.subcommand == "verify") return do_verify(config);
        if (config.subcommand == "sweep") return do_sweep(config);
        throw std::invalid_argument("unknown subcommand '" + config.subcommand + "'");
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace backlund::cli
