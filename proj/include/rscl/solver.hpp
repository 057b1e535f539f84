#pragma once

#include "rscl/flux.hpp"
#include "rscl/helmholtz.hpp"
#include "rscl/scenario.hpp"
#include "rscl/trajectory.hpp"

namespace rscl {

/// Semi-discrete tendency of the regularized law
///   u_t = -d_x f(u) - ell^2 d_x P,  P = compute_p(ws, u, model, eps).
/// Local part: conservative Rusanov (local Lax-Friedrichs) interface fluxes.
/// Nonlocal part: centered derivative of P. Spatial sum is zero to round-off.
Field rhs(const State& state, const FluxModel& model, const HelmholtzWorkspace& ws);

/// dt = cfl * dx / max(max_i |f'(u_i)|, 1); the unit floor caps dt at cfl*dx.
double cfl_dt(const State& state, const FluxModel& model, double cfl);

/// One SSP-RK3 (Shu-Osher) step. Deterministic bit-for-bit.
State step(const State& state, const FluxModel& model, const HelmholtzWorkspace& ws,
           double dt);

/// Slope below which a run without the cut-off is declared broken down:
/// four Riccati doublings past the steepest initial feature.
double breakdown_slope_threshold(const Field& u0);

/// Integrates to t_final, recording diagnostics every record_every steps.
/// eps > 0 runs complete (the cut-off system is globally smooth); eps = 0 runs
/// stop with a Breakdown report once min u_x falls under the threshold above.
RunResult run(const ScenarioConfig& config);

/// Traces X' = u(t, X) through the stored states (record_every = 1 advised),
/// sampling h = u_x along the path; max_margin = max h (c t/2 + 1/M).
CharTrace trace_characteristic(const Trajectory& traj, double x0, const FluxModel& model);

}  // namespace rscl
