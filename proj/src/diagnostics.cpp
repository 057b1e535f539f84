#include "rscl/diagnostics.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "rscl/cutoff.hpp"
#include "rscl/solver.hpp"

namespace rscl {

namespace {

std::string to_str(double x) {
    std::ostringstream ss;
    ss.precision(6);
    ss << x;
    return ss.str();
}

// trapezoid weight of record j inside [t_lo, t_hi]
double trapezoid_weight(const std::vector<DiagnosticsRecord>& recs, size_t j, double t_lo,
                        double t_hi) {
    const double t = recs[j].t;
    if (t < t_lo || t > t_hi) return 0.0;
    double w = 0.0;
    if (j > 0) w += 0.5 * (t - std::max(recs[j - 1].t, t_lo));
    if (j + 1 < recs.size() && recs[j + 1].t >= t_lo)
        w += 0.5 * (std::min(recs[j + 1].t, t_hi) - t);
    return std::max(w, 0.0);
}

}  // namespace

DiagnosticsRecord record(const State& state, const FluxModel& model,
                         const HelmholtzWorkspace* ws, double m_initial_slope) {
    const Field& u = state.u;
    const Field q = derivative(u);
    const double dx = u.grid.dx;
    const double ell2 = state.ell * state.ell;
    const int n = u.grid.n;

    DiagnosticsRecord rec;
    rec.t = state.t;
    double energy = 0.0, ham = 0.0, mean = 0.0, rate = 0.0;
    for (int i = 0; i < n; ++i) {
        const double q2 = q[i] * q[i];
        energy += u[i] * u[i] + ell2 * q2;
        ham += model.F(u[i]) + 0.5 * ell2 * model.f1(u[i]) * q2;
        mean += u[i];
        if (state.epsilon > 0.0)
            rate += model.f2(u[i]) * q[i] * chi(state.epsilon, q[i]);
    }
    rec.energy = 0.5 * dx * energy;
    rec.hamiltonian = dx * ham;
    rec.mean = dx * mean;
    rec.cutoff_dissipation_rate = 0.5 * ell2 * dx * rate;
    rec.tv = total_variation(u);
    rec.max_slope = max_value(q);
    rec.oleinik_bound = oleinik_bound(model.convexity_lower(), state.t, m_initial_slope);
    if (ws != nullptr && state.ell > 0.0)
        rec.p_mass = ell2 * integrate(compute_p(*ws, u, model, state.epsilon));
    return rec;
}

CheckReport check_energy_balance(const Trajectory& traj, double rel_tol) {
    if (traj.records.size() < 3)
        throw std::invalid_argument("check_energy_balance: records too sparse");
    if (traj.states.front().epsilon <= 0.0)
        throw std::invalid_argument("check_energy_balance: needs an eps > 0 run");

    const auto& recs = traj.records;
    const double e0 = recs.front().energy;
    double integral = 0.0;
    for (size_t j = 1; j < recs.size(); ++j)
        integral += 0.5 * (recs[j].cutoff_dissipation_rate + recs[j - 1].cutoff_dissipation_rate) *
                    (recs[j].t - recs[j - 1].t);
    const double de = recs.back().energy - e0;
    const double mismatch = std::abs(de - integral) / std::max(e0, 1e-300);

    CheckReport rep;
    rep.name = "energy_balance";
    rep.value = mismatch;
    rep.threshold = rel_tol;
    rep.pass = mismatch <= rel_tol;
    rep.detail = "dE = " + to_str(de) + ", integrated rate = " + to_str(integral);
    return rep;
}

CheckReport check_energy_monotone(const Trajectory& traj, double rel_slack) {
    const auto& recs = traj.records;
    const double slack = (rel_slack + 1e-12) * std::max(recs.front().energy, 1.0);
    double worst = 0.0;
    double worst_t = 0.0;
    for (size_t j = 1; j < recs.size(); ++j) {
        const double rise = recs[j].energy - recs[j - 1].energy;
        if (rise > worst) {
            worst = rise;
            worst_t = recs[j].t;
        }
    }
    CheckReport rep;
    rep.name = "energy_monotone";
    rep.value = worst;
    rep.threshold = slack;
    rep.pass = worst <= slack;
    rep.detail = worst > 0.0 ? "largest rise at t = " + to_str(worst_t) : "nonincreasing";
    return rep;
}

CheckReport check_oleinik(const Trajectory& traj, double c, double m, double tol) {
    const double im = inv_m(m);
    double worst = 0.0;
    for (const auto& rec : traj.records)
        worst = std::max(worst, rec.max_slope * (0.5 * c * rec.t + im));
    CheckReport rep;
    rep.name = "oleinik";
    rep.value = worst;
    rep.threshold = 1.0 + tol;
    rep.pass = worst <= rep.threshold;
    rep.detail = "max u_x (c t/2 + 1/M)";
    return rep;
}

CheckReport check_tv_bound(const Trajectory& traj, double c, double c_upper, double m,
                           double tol) {
    if (!(std::isfinite(c_upper)))
        throw std::invalid_argument("check_tv_bound: needs a finite upper convexity bound");
    if (!(m > 0.0) || !std::isfinite(m))
        throw std::invalid_argument("check_tv_bound: needs finite M > 0");
    const double tv0 = traj.records.front().tv;
    const double expo = 2.0 * c_upper / c;
    double worst = 0.0;
    for (const auto& rec : traj.records) {
        const double bound = tv0 * std::pow(0.5 * c * m * rec.t + 1.0, expo);
        worst = std::max(worst, rec.tv / bound);
    }
    CheckReport rep;
    rep.name = "tv_bound";
    rep.value = worst;
    rep.threshold = 1.0 + tol;
    rep.pass = worst <= rep.threshold;
    rep.detail = "max TV(t) / bound(t), ||u_0'||_1 = " + to_str(tv0);
    return rep;
}

CheckReport check_mean_conservation(const Trajectory& traj, double abs_tol) {
    const double m0 = traj.records.front().mean;
    double worst = 0.0;
    for (const auto& rec : traj.records) worst = std::max(worst, std::abs(rec.mean - m0));
    CheckReport rep;
    rep.name = "mean_conservation";
    rep.value = worst;
    rep.threshold = abs_tol;
    rep.pass = worst <= abs_tol;
    rep.detail = "max |mean(t) - mean(0)|";
    return rep;
}

PMassReport p_mass_scaling(const std::vector<ScenarioConfig>& configs, const Window& window) {
    if (configs.size() < 3)
        throw std::invalid_argument("p_mass_scaling: need at least 3 ladder points");

    PMassReport report;
    for (const auto& config : configs) {
        const Grid1D grid = config.make_grid();
        const FluxModel model = config.make_flux();
        const HelmholtzWorkspace ws(grid, config.ell);
        RunResult rr = run(config);
        const auto& traj = rr.trajectory;

        // window mass of ell^2 P: space integral per record, trapezoid in time
        std::vector<double> space(traj.states.size(), 0.0);
        for (size_t j = 0; j < traj.states.size(); ++j) {
            const Field p = compute_p(ws, traj.states[j].u, model, config.epsilon);
            double s = 0.0;
            for (int i = 0; i < grid.n; ++i) {
                const double x = grid.center(i);
                if (x >= window.x_lo && x <= window.x_hi) s += p[i];
            }
            space[j] = config.ell * config.ell * s * grid.dx;
        }
        double mass = 0.0;
        for (size_t j = 0; j < traj.records.size(); ++j)
            mass += space[j] * trapezoid_weight(traj.records, j, window.t_lo, window.t_hi);
        report.points.push_back({config.ell, mass});
    }

    // least-squares fit of log(mass) vs log(ell)
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    const double n = static_cast<double>(report.points.size());
    for (const auto& pt : report.points) {
        const double lx = std::log(pt.ell), ly = std::log(std::max(pt.p_mass, 1e-300));
        sx += lx;
        sy += ly;
        sxx += lx * lx;
        sxy += lx * ly;
    }
    report.fitted_slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);

    report.decreasing = true;
    for (size_t j = 1; j < report.points.size(); ++j) {
        const bool ell_down = report.points[j].ell < report.points[j - 1].ell;
        const bool mass_down = ell_down ? report.points[j].p_mass < report.points[j - 1].p_mass
                                        : report.points[j].p_mass > report.points[j - 1].p_mass;
        if (!mass_down) report.decreasing = false;
    }
    report.pass = report.decreasing && report.fitted_slope >= 0.5;
    return report;
}

double measure_slope_lp(const Trajectory& traj, const FluxModel& model, double p,
                        const Window& window) {
    if (!(p > 2.0 && p < 3.0))
        throw std::invalid_argument("measure_slope_lp: p must lie in (2,3)");
    if (traj.states.empty()) return 0.0;
    const Grid1D& grid = traj.states.front().u.grid;
    if (window.t_lo < traj.states.front().t - 1e-12 ||
        window.t_hi > traj.states.back().t + 1e-12)
        throw std::invalid_argument("measure_slope_lp: window outside trajectory");

    const State& front = traj.states.front();
    HelmholtzWorkspace ws(grid, front.ell > 0.0 ? front.ell : 1.0);

    std::vector<double> space(traj.states.size(), 0.0);
    for (size_t j = 0; j < traj.states.size(); ++j) {
        const State& s = traj.states[j];
        const Field q = derivative(s.u);
        const Field ut = front.ell > 0.0 ? rhs(s, model, ws) : Field(grid);
        double acc = 0.0;
        for (int i = 0; i < grid.n; ++i) {
            const double x = grid.center(i);
            if (x < window.x_lo || x > window.x_hi) continue;
            acc += std::pow(std::abs(ut[i]), p) + std::pow(std::abs(q[i]), p);
        }
        space[j] = acc * grid.dx;
    }
    double mass = 0.0;
    for (size_t j = 0; j < traj.records.size(); ++j)
        mass += space[j] * trapezoid_weight(traj.records, j, window.t_lo, window.t_hi);
    return mass;
}

}  // namespace rscl
