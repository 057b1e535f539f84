#include "rscl/solver.hpp"

#include <cmath>
#include <stdexcept>

#include "rscl/diagnostics.hpp"

namespace rscl {

namespace {

// Breakdown witness for runs without the cut-off: the steepest negative slope
// has grown this factor past the steepest initial feature. Under the Riccati
// collapse that quadrupling consumes 3/4 of the remaining smooth lifetime.
constexpr double kBlowupGrowth = 4.0;
// Hard safety ceiling for any run.
constexpr double kSlopeCeiling = 1e6;

}  // namespace

double breakdown_slope_threshold(const Field& u0) {
    const Field q0 = derivative(u0);
    const double osc = max_value(u0) - min_value(u0);
    return kBlowupGrowth * std::max(std::abs(min_value(q0)), osc);
}

namespace {

void require_finite(const Field& u, double t) {
    if (!u.all_finite())
        throw std::runtime_error("non-finite state at t = " + std::to_string(t));
}

}  // namespace

Field rhs(const State& state, const FluxModel& model, const HelmholtzWorkspace& ws) {
    const Field& u = state.u;
    if (!ws.grid().same_as(u.grid))
        throw std::invalid_argument("rhs: workspace grid does not match state");
    if (ws.ell() != state.ell)
        throw std::invalid_argument("rhs: workspace ell does not match state");
    require_finite(u, state.t);

    const int n = u.grid.n;
    const double dx = u.grid.dx;

    const Field p = compute_p(ws, u, model, state.epsilon);
    const double ell2 = state.ell * state.ell;

    // interface fluxes F_{i+1/2}, i = 0..n-1 (periodic)
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
        const int ipp = (i + 1 == n) ? 0 : i + 1;
        const double local = -(flux[static_cast<size_t>(i)] - flux[static_cast<size_t>(im)]) / dx;
        const double nonlocal = -ell2 * (p[ipp] - p[im]) / (2.0 * dx);
        out[i] = local + nonlocal;
    }
    return out;
}

double cfl_dt(const State& state, const FluxModel& model, double cfl) {
    if (!(cfl > 0.0 && cfl <= 1.0)) throw std::invalid_argument("cfl must lie in (0,1]");
    double speed = 0.0;
    for (double u : state.u.v) speed = std::max(speed, std::abs(model.f1(u)));
    return cfl * state.u.grid.dx / std::max(speed, 1.0);
}

State step(const State& state, const FluxModel& model, const HelmholtzWorkspace& ws,
           double dt) {
    const int n = state.u.grid.n;
    State s1 = state;
    {
        const Field k1 = rhs(state, model, ws);
        for (int i = 0; i < n; ++i) s1.u[i] = state.u[i] + dt * k1[i];
        s1.t = state.t + dt;
    }
    State s2 = s1;
    {
        const Field k2 = rhs(s1, model, ws);
        for (int i = 0; i < n; ++i)
            s2.u[i] = 0.75 * state.u[i] + 0.25 * (s1.u[i] + dt * k2[i]);
        s2.t = state.t + 0.5 * dt;
    }
    State out = s2;
    {
        const Field k3 = rhs(s2, model, ws);
        for (int i = 0; i < n; ++i)
            out.u[i] = state.u[i] / 3.0 + 2.0 / 3.0 * (s2.u[i] + dt * k3[i]);
        out.t = state.t + dt;
    }
    require_finite(out.u, out.t);
    return out;
}

RunResult run(const ScenarioConfig& config) {
    const Grid1D grid = config.make_grid();
    const FluxModel model = config.make_flux();
    const HelmholtzWorkspace ws(grid, config.ell);

    State state;
    state.u = build_initial(config);
    state.t = 0.0;
    state.ell = config.ell;
    state.epsilon = config.epsilon;
    require_finite(state.u, 0.0);

    RunResult result;
    Trajectory& traj = result.trajectory;
    traj.m_initial_slope = max_value(derivative(state.u));

    auto push = [&](const State& s) {
        traj.states.push_back(s);
        traj.records.push_back(record(s, model, &ws, traj.m_initial_slope));
    };
    push(state);

    const double blowup_slope = breakdown_slope_threshold(state.u);
    int steps = 0;
    while (state.t < config.t_final) {
        const double dt = std::min(cfl_dt(state, model, config.cfl), config.t_final - state.t);
        state = step(state, model, ws, dt);
        ++steps;

        const Field q = derivative(state.u);
        const double qmin = min_value(q);
        const double qabs = std::max(std::abs(qmin), std::abs(max_value(q)));
        if (qabs > kSlopeCeiling || !state.u.all_finite()) {
            push(state);
            result.breakdown = Breakdown{state.t, qmin, "slope ceiling exceeded"};
            return result;
        }
        if (config.epsilon == 0.0 && qmin < -blowup_slope) {
            push(state);
            result.breakdown =
                Breakdown{state.t, qmin, "negative slope left the smooth-solution regime"};
            return result;
        }

        const bool last = state.t >= config.t_final;
        if (last || steps % config.record_every == 0) push(state);
    }
    return result;
}

CharTrace trace_characteristic(const Trajectory& traj, double x0, const FluxModel& model) {
    if (traj.states.size() < 2)
        throw std::invalid_argument("trace_characteristic: need at least two stored states");
    const Grid1D& grid = traj.states.front().u.grid;
    const double width = grid.width();

    // periodic piecewise-linear sampling of a stored field
    auto sample = [&](const Field& f, double x) {
        const double s = (x - grid.x_min) / grid.dx - 0.5;
        const double base = std::floor(s);
        const double w = s - base;
        const int i0 = grid.wrap(static_cast<int>(base));
        const int i1 = grid.wrap(i0 + 1);
        return (1.0 - w) * f[i0] + w * f[i1];
    };

    std::vector<Field> slopes;
    slopes.reserve(traj.states.size());
    for (const auto& s : traj.states) slopes.push_back(derivative(s.u));

    // u(t, x) interpolated linearly between stored states
    auto u_at = [&](double t, double x, size_t hint) {
        size_t j = hint;
        while (j + 2 < traj.states.size() && traj.states[j + 1].t <= t) ++j;
        const State& a = traj.states[j];
        const State& b = traj.states[j + 1];
        const double w = (b.t > a.t) ? std::clamp((t - a.t) / (b.t - a.t), 0.0, 1.0) : 0.0;
        return (1.0 - w) * sample(a.u, x) + w * sample(b.u, x);
    };

    CharTrace trace;
    trace.x0 = x0;
    const double c = model.convexity_lower();
    const double im = inv_m(traj.m_initial_slope);

    double x = x0;
    for (size_t j = 0; j + 1 < traj.states.size(); ++j) {
        const double t0 = traj.states[j].t;
        const double dt = traj.states[j + 1].t - t0;
        const double h = sample(slopes[j], x);
        trace.t.push_back(t0);
        trace.x.push_back(x);
        trace.slope.push_back(h);
        trace.max_margin = std::max(trace.max_margin, h * (0.5 * c * t0 + im));

        // SSP-RK3 on X' = u(t, X)
        const double k1 = u_at(t0, x, j);
        const double x1 = x + dt * k1;
        const double k2 = u_at(t0 + dt, x1, j);
        const double x2 = 0.75 * x + 0.25 * (x1 + dt * k2);
        const double k3 = u_at(t0 + 0.5 * dt, x2, j);
        x = x / 3.0 + 2.0 / 3.0 * (x2 + dt * k3);
        x = grid.x_min + std::fmod(std::fmod(x - grid.x_min, width) + width, width);
    }
    const State& last = traj.states.back();
    const double h = sample(slopes.back(), x);
    trace.t.push_back(last.t);
    trace.x.push_back(x);
    trace.slope.push_back(h);
    trace.max_margin = std::max(trace.max_margin, h * (0.5 * c * last.t + im));
    return trace;
}

}  // namespace rscl
