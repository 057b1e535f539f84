#include "rscl/reference.hpp"

#include <cmath>
#include <stdexcept>

#include "rscl/diagnostics.hpp"
#include "rscl/helmholtz.hpp"
#include "rscl/solver.hpp"

namespace rscl {

namespace {

// unique root of f' (f'' >= c > 0 makes f' strictly increasing)
double sonic_point(const FluxModel& model) {
    double lo = -1.0, hi = 1.0;
    while (model.f1(lo) > 0.0) lo *= 2.0;
    while (model.f1(hi) < 0.0) hi *= 2.0;
    for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (model.f1(mid) < 0.0)
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

Field ghs_rhs(const Field& u, const FluxModel& model) {
    const int n = u.grid.n;
    const double dx = u.grid.dx;
    const Field q = derivative(u);
    Field half_r(u.grid);
    for (int i = 0; i < n; ++i) half_r[i] = 0.5 * model.f2(u[i]) * q[i] * q[i];
    const Field w = hs_nonlocal(u.grid, half_r);

    std::vector<double> flux(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
        const int ip = (i + 1 == n) ? 0 : i + 1;
        const double a = std::max(std::abs(model.f1(u[i])), std::abs(model.f1(u[ip])));
        flux[static_cast<size_t>(i)] =
            0.5 * (model.f(u[i]) + model.f(u[ip])) - 0.5 * a * (u[ip] - u[i]);
    }
    Field out(u.grid);
    for (int i = 0; i < n; ++i) {
        const int im = (i == 0) ? n - 1 : i - 1;
        out[i] = -(flux[static_cast<size_t>(i)] - flux[static_cast<size_t>(im)]) / dx + 2.0 * w[i];
    }
    return out;
}

}  // namespace

double godunov_flux(const FluxModel& model, double ul, double ur) {
    if (ul == ur) return model.f(ul);
    const double s = sonic_point(model);
    if (ul <= ur) {
        if (ul >= s) return model.f(ul);
        if (ur <= s) return model.f(ur);
        return model.f(s);  // transonic rarefaction
    }
    return std::max(model.f(ul), model.f(ur));
}

RunResult entropy_solve(const ScenarioConfig& config) {
    const Grid1D grid = config.make_grid();
    const FluxModel model = config.make_flux();
    const double cfl = std::min(config.cfl, 0.5);
    const int n = grid.n;

    State state;
    state.u = build_initial(config);
    state.t = 0.0;

    RunResult result;
    Trajectory& traj = result.trajectory;
    traj.m_initial_slope = max_value(derivative(state.u));
    auto push = [&](const State& s) {
        traj.states.push_back(s);
        traj.records.push_back(record(s, model, nullptr, traj.m_initial_slope));
    };
    push(state);

    std::vector<double> flux(static_cast<size_t>(n));
    int steps = 0;
    while (state.t < config.t_final) {
        double speed = 0.0;
        for (double u : state.u.v) speed = std::max(speed, std::abs(model.f1(u)));
        const double dt =
            std::min(cfl * grid.dx / std::max(speed, 1.0), config.t_final - state.t);

        for (int i = 0; i < n; ++i) {
            const int ip = (i + 1 == n) ? 0 : i + 1;
            flux[static_cast<size_t>(i)] = godunov_flux(model, state.u[i], state.u[ip]);
        }
        const double lambda = dt / grid.dx;
        Field next = state.u;
        for (int i = 0; i < n; ++i) {
            const int im = (i == 0) ? n - 1 : i - 1;
            next[i] -= lambda * (flux[static_cast<size_t>(i)] - flux[static_cast<size_t>(im)]);
        }
        state.u = std::move(next);
        state.t += dt;
        ++steps;
        if (state.t >= config.t_final || steps % config.record_every == 0) push(state);
    }
    return result;
}

RunResult ghs_solve(const ScenarioConfig& config) {
    const Grid1D grid = config.make_grid();
    const FluxModel model = config.make_flux();
    const int n = grid.n;

    State state;
    state.u = build_initial(config);
    state.t = 0.0;

    RunResult result;
    Trajectory& traj = result.trajectory;
    traj.m_initial_slope = max_value(derivative(state.u));
    auto push = [&](const State& s) {
        traj.states.push_back(s);
        traj.records.push_back(record(s, model, nullptr, traj.m_initial_slope));
    };
    push(state);

    const double blowup_slope = breakdown_slope_threshold(state.u);
    int steps = 0;
    while (state.t < config.t_final) {
        double speed = 0.0;
        for (double u : state.u.v) speed = std::max(speed, std::abs(model.f1(u)));
        const double dt =
            std::min(config.cfl * grid.dx / std::max(speed, 1.0), config.t_final - state.t);

        // SSP-RK3
        Field u1(grid), u2(grid);
        {
            const Field k1 = ghs_rhs(state.u, model);
            for (int i = 0; i < n; ++i) u1[i] = state.u[i] + dt * k1[i];
        }
        {
            const Field k2 = ghs_rhs(u1, model);
            for (int i = 0; i < n; ++i)
                u2[i] = 0.75 * state.u[i] + 0.25 * (u1[i] + dt * k2[i]);
        }
        {
            const Field k3 = ghs_rhs(u2, model);
            for (int i = 0; i < n; ++i)
                state.u[i] = state.u[i] / 3.0 + 2.0 / 3.0 * (u2[i] + dt * k3[i]);
        }
        state.t += dt;
        ++steps;
        if (!state.u.all_finite())
            throw std::runtime_error("ghs_solve: non-finite state at t = " + std::to_string(state.t));

        // the wrap hosts the far-field split of the truncated line problem, so
        // the breakdown scan covers only the interior
        const Field q = derivative(state.u);
        const int margin = std::max(2, n / 20);
        double qmin = 0.0;
        for (int i = margin; i < n - margin; ++i) qmin = std::min(qmin, q[i]);
        if (qmin < -blowup_slope) {
            push(state);
            result.breakdown =
                Breakdown{state.t, qmin, "negative slope left the smooth-solution regime"};
            return result;
        }
        if (state.t >= config.t_final || steps % config.record_every == 0) push(state);
    }
    return result;
}

}  // namespace rscl
