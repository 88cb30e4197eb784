#include <algorithm>
#include <fstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "backlund/cli.hpp"

namespace {

// Flat key=value config support: "--config FILE" anywhere on the command
// line is replaced by "--key value" tokens for every line of FILE whose key
// is not already given explicitly (explicit flags win). Lines starting with
// '#' and blank lines are skipped.
std::vector<std::string> expand_config(int argc, char** argv) {
    std::vector<std::string> args(argv, argv + argc);
    for (std::size_t i = 1; i + 1 < args.size(); ++i) {
        if (args[i] != "--config") continue;
        const std::string path = args[i + 1];
        args.erase(args.begin() + static_cast<long>(i), args.begin() + static_cast<long>(i) + 2);
        std::ifstream in(path);
        if (!in) throw std::runtime_error("cannot read config file '" + path + "'");
        std::string line;
        while (std::getline(in, line)) {
            if (line.empty() || line[0] == '#') continue;
            const auto eq = line.find('=');
            if (eq == std::string::npos)
                throw std::runtime_error("config line is not key=value: '" + line + "'");
            const std::string flag = "--" + line.substr(0, eq);
            if (std::find(args.begin(), args.end(), flag) != args.end()) continue;
            args.push_back(flag);
            args.push_back(line.substr(eq + 1));
        }
        break;
    }
    return args;
}

void add_config_option(CLI::App* sub, std::string& path) {
    sub->add_option("--config", path,
                    "Read flag values from a flat key=value file (explicit flags win)");
}

void add_grid_options(CLI::App* sub, backlund::cli::RunConfig& cfg) {
    sub->add_option("--s-min", cfg.grid.s_min, "Arc-length start (default 0)");
    sub->add_option("--s-max", cfg.grid.s_max, "Arc-length end (default 2)");
    sub->add_option("--samples", cfg.grid.samples, "Grid points (default 4096)");
}

CLI::Option* add_case_option(CLI::App* sub, std::string& label) {
    return sub->add_option("--case", label, "Geometry: g3, pg3-tb, pg3-tn or g4")
        ->check(CLI::IsMember({"g3", "pg3-tb", "pg3-tn", "g4"}));
}

void add_tol_option(CLI::App* sub, std::vector<std::string>& raw) {
    sub->add_option("--tol", raw,
                    "Tolerance override name=value (repeatable); names match the report checks");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Backlund transformations of constant-torsion curves in Galilean-type "
                 "3- and 4-spaces: seed generation, transformation and residual audit"};
    app.require_subcommand(1);

    backlund::cli::RunConfig cfg;
    std::string case_label = "g3";
    std::string config_path;
    std::vector<std::string> raw_tols;

    auto* gen = app.add_subcommand("generate", "Sample a named curve family to a seed CSV");
    add_case_option(gen, case_label);
    gen->add_option("--family", cfg.family,
                    "line, g3-parabola, g3-circular, pg3-hyperbolic, g4-helix or "
                    "backlund-consistent");
    gen->add_option("--tau", cfg.tau, "Seed torsion (backlund-consistent)");
    gen->add_option("--phi", cfg.phi, "Frame angle phi in radians (backlund-consistent)");
    gen->add_option("--gamma0", cfg.gamma0, "Initial angle gamma(s_min)");
    gen->add_option("--kappa", cfg.kappa, "Constant seed curvature (g4 backlund-consistent)");
    add_grid_options(gen, cfg);
    gen->add_option("--out", cfg.output_path, "Output CSV path")->required();
    add_config_option(gen, config_path);

    auto* tr = app.add_subcommand("transform", "Apply the transformation to a seed CSV");
    auto* tr_case_opt = add_case_option(tr, case_label);
    tr->add_option("--in", cfg.input_path, "Seed CSV path")->required();
    tr->add_option("--out", cfg.output_path, "Pair CSV path")->required();
    auto* tau_opt = tr->add_option("--tau", cfg.tau,
                                   "Seed torsion (default: read from the seed file)");
    tr->add_option("--phi", cfg.phi, "Frame angle phi in radians")->required();
    tr->add_option("--gamma0", cfg.gamma0, "Initial angle gamma(s_min)")->required();
    add_config_option(tr, config_path);

    auto* ver = app.add_subcommand("verify", "Audit a pair CSV and write a JSON report");
    ver->add_option("--in", cfg.input_path, "Pair CSV path")->required();
    ver->add_option("--report", cfg.report_path, "Output JSON report path")->required();
    add_tol_option(ver, raw_tols);
    add_config_option(ver, config_path);

    auto* sw = app.add_subcommand("sweep", "Audit a Cartesian grid of (phi, gamma0) points");
    add_case_option(sw, case_label);
    sw->add_option("--tau", cfg.tau, "Seed torsion")->required();
    sw->add_option("--phi-min", cfg.phi_min, "First phi value")->required();
    sw->add_option("--phi-max", cfg.phi_max, "Last phi value")->required();
    sw->add_option("--phi-count", cfg.phi_count, "Points on the phi axis");
    sw->add_option("--gamma0-min", cfg.gamma0_min, "First gamma0 value")->required();
    sw->add_option("--gamma0-max", cfg.gamma0_max, "Last gamma0 value")->required();
    sw->add_option("--gamma0-count", cfg.gamma0_count, "Points on the gamma0 axis");
    sw->add_option("--kappa", cfg.kappa, "Constant seed curvature (g4)");
    add_grid_options(sw, cfg);
    sw->add_option("--out", cfg.output_path, "Summary JSON path")->required();
    sw->add_option("--report-dir", cfg.report_dir, "Directory for per-point reports");
    add_tol_option(sw, raw_tols);
    add_config_option(sw, config_path);

    try {
        auto args = expand_config(argc, argv);
        args.erase(args.begin());                // program name
        std::reverse(args.begin(), args.end());  // CLI11 consumes from the back
        app.parse(std::move(args));
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;  // invalid input
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }

    try {
        cfg.space = backlund::parse_space_case(case_label);
        cfg.space_given = tr_case_opt->count() > 0;
        cfg.subcommand = app.get_subcommands().front()->get_name();
        cfg.tau_given = tau_opt->count() > 0;
        for (const auto& raw : raw_tols) {
            const auto eq = raw.find('=');
            if (eq == std::string::npos)
                throw std::invalid_argument("--tol expects name=value, got '" + raw + "'");
            cfg.tolerance_overrides.emplace_back(raw.substr(0, eq),
                                                 std::stod(raw.substr(eq + 1)));
        }
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
    return backlund::cli::run(cfg);
}
