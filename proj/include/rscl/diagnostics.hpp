#pragma once

#include <vector>

#include "rscl/flux.hpp"
#include "rscl/helmholtz.hpp"
#include "rscl/scenario.hpp"
#include "rscl/trajectory.hpp"

namespace rscl {

/// Measures every record field on one state. ws may be null for ell-free
/// reference states (the P and ell^2 terms are then zero).
DiagnosticsRecord record(const State& state, const FluxModel& model,
                         const HelmholtzWorkspace* ws, double m_initial_slope);

struct CheckReport {
    std::string name;
    bool pass = false;
    double value = 0.0;      // measured worst case
    double threshold = 0.0;  // what it was held against
    std::string detail;
};

/// E(t) - E(0) must match the time-integrated cut-off dissipation rate.
/// Requires an eps > 0 run with dense records; relative mismatch vs E(0).
CheckReport check_energy_balance(const Trajectory& traj, double rel_tol = 0.05);

/// E nonincreasing record to record (round-off slack on top of rel_slack).
CheckReport check_energy_monotone(const Trajectory& traj, double rel_slack = 0.0);

/// Worst-case Oleinik margin max_slope * (c t/2 + 1/M) over the trajectory.
CheckReport check_oleinik(const Trajectory& traj, double c, double m, double tol = 0.05);

/// Measured ||u_x||_L1 against ||u_0'||_L1 (c M t/2 + 1)^{2C/c}.
CheckReport check_tv_bound(const Trajectory& traj, double c, double c_upper, double m,
                           double tol = 0.05);

CheckReport check_mean_conservation(const Trajectory& traj, double abs_tol = 1e-9);

struct Window {
    double t_lo = 0.0, t_hi = 0.0;
    double x_lo = 0.0, x_hi = 0.0;
};

struct PMassPoint {
    double ell = 0.0;
    double p_mass = 0.0;  // int over the window of ell^2 P dx dt
};

struct PMassReport {
    std::vector<PMassPoint> points;
    double fitted_slope = 0.0;  // least-squares slope of log p_mass vs log ell
    bool decreasing = false;
    bool pass = false;
};

/// Runs the same scenario across an ell ladder and fits the window mass of
/// ell^2 P against ell. Needs at least 3 ladder points.
PMassReport p_mass_scaling(const std::vector<ScenarioConfig>& configs, const Window& window);

/// Windowed space-time L^p mass of (u_t, u_x), u_t taken from the stored
/// tendency; p in (2,3). Used in refinement studies.
double measure_slope_lp(const Trajectory& traj, const FluxModel& model, double p,
                        const Window& window);

}  // namespace rscl
