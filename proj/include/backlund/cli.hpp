#pragma once

#include <string>
#include <utility>
#include <vector>

#include "backlund/curves.hpp"
#include "backlund/spaces.hpp"

namespace backlund::cli {

/// Parsed invocation. Exit codes of run(): 0 success, 1 invalid input
/// (messages name the violated condition), 2 when any verification verdict
/// fails.
struct RunConfig {
    std::string subcommand;  // generate | transform | verify | sweep
    SpaceCase space = SpaceCase::G3;
    bool space_given = false;  // transform cross-checks --case against the file
    std::string family = "backlund-consistent";

    double tau = 1.0;
    bool tau_given = false;
    double phi = 0.0;
    double gamma0 = 0.0;
    double kappa = 0.0;  // constant seed curvature, G4 families

    Grid grid{0.0, 2.0, 4096};

    std::string input_path;
    std::string output_path;
    std::string report_path;
    std::string report_dir;

    // sweep ranges (inclusive endpoints)
    double phi_min = 0.5, phi_max = 1.5;
    std::size_t phi_count = 3;
    double gamma0_min = 0.5, gamma0_max = 1.5;
    std::size_t gamma0_count = 3;

    std::vector<std::pair<std::string, double>> tolerance_overrides;
};

int run(const RunConfig& config);

}  // namespace backlund::cli
