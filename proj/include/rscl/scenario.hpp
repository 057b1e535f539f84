#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "rscl/flux.hpp"
#include "rscl/grid.hpp"

namespace rscl {

/// One fully deterministic run: flux + initial condition + grid + solver knobs.
/// Parsed from line-oriented `key = value` documents with [section] headers
/// (sections: flux, ic, grid, solver, output).
struct ScenarioConfig {
    std::string flux_name;  // burgers | cosine
    double flux_beta = 0.0;

    std::string ic_name;  // gaussian | sine | riemann_tanh | bump_slope
    std::map<std::string, double> ic_params;

    double x_min = 0.0;
    double x_max = 0.0;
    int n = 0;

    double ell = 0.0;
    double epsilon = 0.0;
    double t_final = 0.0;
    double cfl = 0.4;
    int record_every = 1;

    std::string csv_path;     // empty = do not write
    std::string ndjson_path;  // empty = do not write
    int snapshot_every = 0;   // 0 = first and last state only

    Grid1D make_grid() const { return Grid1D(x_min, x_max, n); }
    FluxModel make_flux() const { return builtin_flux(flux_name, flux_beta); }
};

struct ConfigIssue {
    int line = 0;  // 0 when no single line applies
    std::string message;
};

struct ParseResult {
    std::optional<ScenarioConfig> config;  // engaged iff errors is empty
    std::vector<ConfigIssue> errors;
    std::vector<ConfigIssue> warnings;
};

/// Parses and validates; reports every violation, not just the first.
ParseResult parse_config(const std::string& text);
ParseResult parse_config_file(const std::string& path);

/// Canonical text form; parse_config(render_config(c)) reproduces c exactly.
std::string render_config(const ScenarioConfig& config);

/// Initial-condition library.
///   gaussian:     a * exp(-(x-x0)^2 / sigma^2)
///   sine:         a * sin(k x)
///   riemann_tanh: smoothed jump ul -> ur at x0 plus a gentle return ramp that
///                 periodizes the profile far from the window of interest
///   bump_slope:   compactly supported C^1 bump with max slope exactly m
Field builtin_ic(const std::string& name, const std::map<std::string, double>& params,
                 const Grid1D& grid);

Field build_initial(const ScenarioConfig& config);

}  // namespace rscl
