#include <CLI11.hpp>
#include <cmath>
#include <cstdio>
#include <iostream>
#include <sstream>

#include "rscl/diagnostics.hpp"
#include "rscl/io.hpp"
#include "rscl/reference.hpp"
#include "rscl/solver.hpp"
#include "rscl/sweep.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailure = 1;
constexpr int kExitConfigError = 2;

void print_issues(const rscl::ParseResult& parsed) {
    for (const auto& e : parsed.errors) {
        if (e.line > 0)
            std::cerr << "error (line " << e.line << "): " << e.message << "\n";
        else
            std::cerr << "error: " << e.message << "\n";
    }
    for (const auto& w : parsed.warnings) {
        if (w.line > 0)
            std::cerr << "warning (line " << w.line << "): " << w.message << "\n";
        else
            std::cerr << "warning: " << w.message << "\n";
    }
}

std::optional<rscl::ScenarioConfig> load_config(const std::string& path) {
    rscl::ParseResult parsed = rscl::parse_config_file(path);
    print_issues(parsed);
    return parsed.config;
}

void print_check(const rscl::CheckReport& rep) {
    std::printf("[%s] %-18s value=%.6g threshold=%.6g  %s\n", rep.pass ? "PASS" : "FAIL",
                rep.name.c_str(), rep.value, rep.threshold, rep.detail.c_str());
}

int cmd_run(const std::string& config_path, const std::string& out_dir) {
    auto config = load_config(config_path);
    if (!config) return kExitConfigError;
    rscl::RunResult result = rscl::run(*config);
    rscl::write_outputs(result, *config, out_dir);
    const auto& traj = result.trajectory;
    std::printf("run: %zu recorded states, t in [%.17g, %.17g]\n", traj.states.size(),
                traj.states.front().t, traj.states.back().t);
    if (result.breakdown) {
        std::printf("breakdown at t = %.17g (min slope %.6g): %s\n", result.breakdown->t,
                    result.breakdown->min_slope, result.breakdown->reason.c_str());
    }
    return kExitOk;
}

int cmd_check(const std::string& config_path) {
    auto config = load_config(config_path);
    if (!config) return kExitConfigError;
    const rscl::FluxModel flux = config->make_flux();
    rscl::RunResult result = rscl::run(*config);
    const auto& traj = result.trajectory;
    const double m = traj.m_initial_slope;

    bool ok = true;
    auto take = [&](const rscl::CheckReport& rep) {
        print_check(rep);
        ok = ok && rep.pass;
    };

    take(rscl::check_mean_conservation(traj));
    take(rscl::check_energy_monotone(traj));
    take(rscl::check_oleinik(traj, flux.convexity_lower(), m));
    if (config->epsilon > 0.0) take(rscl::check_energy_balance(traj));
    if (std::isfinite(flux.convexity_upper()) && m > 0.0)
        take(rscl::check_tv_bound(traj, flux.convexity_lower(), flux.convexity_upper(), m));

    // nonnegativity of the pressure along the run
    {
        const rscl::HelmholtzWorkspace ws(config->make_grid(), config->ell);
        double worst = 0.0;
        for (const auto& s : traj.states)
            worst = std::min(worst,
                             rscl::min_value(rscl::compute_p(ws, s.u, flux, config->epsilon)));
        rscl::CheckReport rep;
        rep.name = "pressure_positive";
        rep.value = worst;
        rep.threshold = -1e-12;
        rep.pass = worst >= rep.threshold;
        rep.detail = "min P over all recorded states";
        take(rep);
    }

    if (result.breakdown)
        std::printf("note: run broke down at t = %.17g (%s)\n", result.breakdown->t,
                    result.breakdown->reason.c_str());
    return ok ? kExitOk : kExitCheckFailure;
}

int cmd_sweep(const std::string& config_path, const std::string& axis,
              const std::string& values_csv, const std::string& comparison,
              const std::string& report_path, int reference_n) {
    auto config = load_config(config_path);
    if (!config) return kExitConfigError;

    rscl::SweepSpec spec;
    spec.base = *config;
    if (axis == "ell")
        spec.axis = rscl::SweepAxis::ell;
    else if (axis == "epsilon")
        spec.axis = rscl::SweepAxis::epsilon;
    else if (axis == "n")
        spec.axis = rscl::SweepAxis::n;
    else {
        std::cerr << "error: unknown axis `" << axis << "`\n";
        return kExitConfigError;
    }
    if (comparison == "entropy")
        spec.comparison = rscl::SweepComparison::entropy;
    else if (comparison == "ghs")
        spec.comparison = rscl::SweepComparison::ghs;
    else if (comparison == "self")
        spec.comparison = rscl::SweepComparison::self;
    else {
        std::cerr << "error: unknown comparison `" << comparison << "`\n";
        return kExitConfigError;
    }
    spec.reference_n = reference_n;

    std::stringstream ss(values_csv);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) continue;
        spec.values.push_back(std::strtod(tok.c_str(), nullptr));
    }

    rscl::SweepReport report;
    try {
        report = rscl::run_sweep(spec);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitConfigError;
    }

    for (const auto& p : report.points) {
        std::printf("%s = %-12.6g", axis.c_str(), p.value);
        if (!std::isnan(p.l1)) std::printf("  l1 = %.8g", p.l1);
        if (!std::isnan(p.linf)) std::printf("  linf = %.8g", p.linf);
        if (!std::isnan(p.h1)) std::printf("  h1 = %.8g", p.h1);
        std::printf("\n");
    }
    std::printf("distances %s toward the limit\n",
                report.distances_decreasing ? "decrease" : "DO NOT decrease");
    for (double order : report.observed_orders)
        std::printf("observed order: %.3f\n", order);
    if (!report_path.empty()) rscl::write_sweep_ndjson(report_path, spec, report);
    return kExitOk;
}

int cmd_validate(const std::string& config_path) {
    rscl::ParseResult parsed = rscl::parse_config_file(config_path);
    print_issues(parsed);
    if (!parsed.config) return kExitConfigError;
    std::printf("config ok\n");
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"1-D solver suite for the Hamiltonian regularization of scalar conservation laws"};
    app.require_subcommand(1);

    std::string config_path, out_dir = ".", axis = "ell", values, comparison = "self";
    std::string report_path;
    int reference_n = 0;

    auto* run_cmd = app.add_subcommand("run", "integrate one scenario and write its outputs");
    run_cmd->add_option("--config", config_path, "scenario config file")->required();
    run_cmd->add_option("--out", out_dir, "output directory for relative sink paths");

    auto* sweep_cmd = app.add_subcommand("sweep", "run a ladder of scenarios and compare");
    sweep_cmd->add_option("--config", config_path, "base scenario config file")->required();
    sweep_cmd->add_option("--axis", axis, "ell | epsilon | n")->required();
    sweep_cmd->add_option("--values", values, "comma-separated ladder values")->required();
    sweep_cmd->add_option("--comparison", comparison, "entropy | ghs | self");
    sweep_cmd->add_option("--report", report_path, "NDJSON report path");
    sweep_cmd->add_option("--reference-n", reference_n, "entropy reference resolution");

    auto* check_cmd = app.add_subcommand("check", "run the diagnostics suite on a scenario");
    check_cmd->add_option("--config", config_path, "scenario config file")->required();

    auto* validate_cmd = app.add_subcommand("validate", "parse and validate a config only");
    validate_cmd->add_option("--config", config_path, "scenario config file")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (run_cmd->parsed()) return cmd_run(config_path, out_dir);
        if (sweep_cmd->parsed())
            return cmd_sweep(config_path, axis, values, comparison, report_path, reference_n);
        if (check_cmd->parsed()) return cmd_check(config_path);
        if (validate_cmd->parsed()) return cmd_validate(config_path);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitCheckFailure;
    }
    return kExitOk;
}
