#pragma once

#include "rscl/flux.hpp"
#include "rscl/scenario.hpp"
#include "rscl/trajectory.hpp"

namespace rscl {

/// Exact-Riemann Godunov flux for a uniformly convex flux:
/// min of f on [ul, ur] when ul <= ur, else max of f on [ur, ul].
double godunov_flux(const FluxModel& model, double ul, double ur);

/// First-order Godunov / forward Euler entropy solver for u_t + f(u)_x = 0.
/// ell and epsilon in the config are ignored; cfl is clamped to 0.5.
RunResult entropy_solve(const ScenarioConfig& config);

/// Generalized Hunter-Saxton solver:
///   u_t = -d_x f(u) + 2 hs_nonlocal(1/2 f''(u) u_x^2),
/// Rusanov local part, SSP-RK3 in time; differentiating recovers
/// [u_t + f(u)_x]_x = 1/2 u_x^2 f''(u).
RunResult ghs_solve(const ScenarioConfig& config);

}  // namespace rscl
