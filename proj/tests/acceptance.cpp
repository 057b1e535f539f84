// Acceptance suite: runs the theorem-level checks end to end at desk scale and
// prints one PASS/FAIL line per criterion. `--skip N` / `--only N` select
// criteria; `--cli <path>` points criterion 12 at the command-line binary.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "rscl/cutoff.hpp"
#include "rscl/diagnostics.hpp"
#include "rscl/io.hpp"
#include "rscl/reference.hpp"
#include "rscl/solver.hpp"
#include "rscl/sweep.hpp"

using namespace rscl;

namespace {

std::string g_cli_path;

struct Outcome {
    bool pass = true;
    std::string detail;

    void require(bool ok, const std::string& what) {
        if (!ok) {
            pass = false;
            if (!detail.empty()) detail += "; ";
            detail += what;
        }
    }
    void note(const std::string& what) {
        if (!detail.empty()) detail += "; ";
        detail += what;
    }
};

std::string num(double x) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.4g", x);
    return buf;
}

// ---- shared scenarios ------------------------------------------------------

ScenarioConfig steep_burgers(int n, double epsilon, double t_final) {
    ScenarioConfig c;
    c.flux_name = "burgers";
    c.ic_name = "riemann_tanh";
    c.ic_params = {{"ul", 1.0}, {"ur", 0.0}, {"x0", -5.0}, {"delta", 0.05}};
    c.x_min = -10.0;
    c.x_max = 10.0;
    c.n = n;
    c.ell = 0.1;
    c.epsilon = epsilon;
    c.t_final = t_final;
    c.cfl = 0.4;
    c.record_every = 1;
    return c;
}

ScenarioConfig ghs_bump(int n, double ell) {
    ScenarioConfig c;
    c.flux_name = "burgers";
    c.ic_name = "bump_slope";
    c.ic_params = {{"m", 0.1}, {"width", 10.0}, {"x0", 0.0}};
    c.x_min = -200.0;
    c.x_max = 200.0;
    c.n = n;
    c.ell = ell;
    c.epsilon = 0.0;
    c.t_final = 1.0;
    c.cfl = 0.4;
    c.record_every = 8;
    return c;
}

double mean_drift(const Trajectory& traj) {
    const double m0 = traj.records.front().mean;
    double worst = 0.0;
    for (const auto& r : traj.records) worst = std::max(worst, std::abs(r.mean - m0));
    return worst;
}

// ---- criteria ---------------------------------------------------------------

Outcome criterion_1_helmholtz_roundtrip() {
    Outcome out;
    std::mt19937 rng(20240101);
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    double worst = 0.0;
    for (int n : {128, 1024}) {
        for (double ell : {0.05, 1.0, 100.0}) {
            Grid1D g(0.0, 40.0 * ell, n);
            HelmholtzWorkspace ws(g, ell);
            for (int rep = 0; rep < 100; ++rep) {
                Field r(g);
                for (int i = 0; i < n; ++i) r[i] = dist(rng);
                const Field back = ws.forward(ws.solve(r));
                for (int i = 0; i < n; ++i) worst = std::max(worst, std::abs(back[i] - r[i]));
            }
        }
    }
    out.require(worst <= 1e-10, "residual " + num(worst) + " > 1e-10");
    out.note("max residual " + num(worst));
    return out;
}

Outcome criterion_2_cutoff_algebra() {
    Outcome out;
    std::mt19937 rng(2);
    std::uniform_real_distribution<double> xi_dist(-30.0, 30.0);
    std::uniform_real_distribution<double> k_dist(0.05, 10.0);
    std::uniform_real_distribution<double> e_dist(0.01, 2.0);
    const double h = 1e-5;
    double worst_id = 0.0, worst_fd = 0.0;
    for (int rep = 0; rep < 100000; ++rep) {
        const double kappa = k_dist(rng), xi = xi_dist(rng), eps = e_dist(rng), q = xi;
        const double t = t_trunc(kappa, xi), s = s_trunc(kappa, xi);

        const double lhs = xi * xi * t - 2.0 * xi * s;
        double rhs_ = kappa * kappa * (t - xi);
        if (xi <= -kappa) rhs_ += kappa * (xi + kappa) * (xi + kappa);
        if (xi >= kappa) rhs_ -= kappa * (xi - kappa) * (xi - kappa);
        const double scale = std::max({1.0, std::abs(lhs), std::abs(rhs_)});
        worst_id = std::max(worst_id, std::abs(lhs - rhs_) / scale);

        if (std::abs(std::abs(xi) - kappa) > 10.0 * h) {
            const double fd = (s_trunc(kappa, xi + h) - s_trunc(kappa, xi - h)) / (2.0 * h);
            worst_fd = std::max(worst_fd, std::abs(fd - t));
        }
        out.require(std::abs(t) <= std::abs(xi) + 1e-15, "|T| > |xi|");
        out.require(chi(eps, q) <= q * q + 1e-12, "chi > q^2");
        out.require(q * chi(eps, q) <= 0.0, "q chi > 0");
        if (!out.pass) break;
    }
    out.require(worst_id <= 1e-12, "identity residual " + num(worst_id));
    out.require(worst_fd <= 1e-6, "S'-T mismatch " + num(worst_fd));
    return out;
}

Outcome criterion_3_godunov_oracle() {
    Outcome out;
    {  // shock speed 1/2 for (1,0)
        ScenarioConfig c;
        c.flux_name = "burgers";
        c.ic_name = "riemann_tanh";
        c.ic_params = {{"ul", 1.0}, {"ur", 0.0}, {"x0", -3.0}, {"delta", 0.05}};
        c.x_min = -10.0;
        c.x_max = 10.0;
        c.n = 2048;
        c.ell = 1.0;
        c.t_final = 1.0;
        c.cfl = 0.45;
        c.record_every = 64;
        RunResult rr = entropy_solve(c);
        auto front = [&](const Field& u) {
            for (int i = 0; i + 1 < u.grid.n; ++i) {
                const double xa = u.grid.center(i);
                if (xa < -5.0 || xa > 1.0) continue;
                if ((u[i] - 0.5) * (u[i + 1] - 0.5) <= 0.0 && u[i] != u[i + 1])
                    return xa + (0.5 - u[i]) / (u[i + 1] - u[i]) * u.grid.dx;
            }
            return std::numeric_limits<double>::quiet_NaN();
        };
        const double speed = (front(rr.trajectory.states.back().u) -
                              front(rr.trajectory.states.front().u)) /
                             c.t_final;
        out.require(std::abs(speed - 0.5) <= 0.01, "shock speed " + num(speed));
        out.note("shock speed " + num(speed));
    }
    {  // transonic rarefaction converges to the x/t fan
        auto fan_error = [&](int n) {
            ScenarioConfig c;
            c.flux_name = "burgers";
            c.ic_name = "riemann_tanh";
            c.ic_params = {{"ul", -1.0}, {"ur", 1.0}, {"x0", 0.0}, {"delta", 0.02}};
            c.x_min = -10.0;
            c.x_max = 10.0;
            c.n = n;
            c.ell = 1.0;
            c.t_final = 1.0;
            c.cfl = 0.45;
            c.record_every = 1 << 20;
            RunResult rr = entropy_solve(c);
            const Field& u = rr.trajectory.states.back().u;
            double e = 0.0;
            for (int i = 0; i < u.grid.n; ++i) {
                const double x = u.grid.center(i);
                if (std::abs(x) > 1.5) continue;
                e += std::abs(u[i] - std::clamp(x / c.t_final, -1.0, 1.0));
            }
            return e * u.grid.dx;
        };
        const double e512 = fan_error(512), e1024 = fan_error(1024), e2048 = fan_error(2048);
        out.require(e1024 < e512 && e2048 < e1024,
                    "fan L1 errors not decreasing: " + num(e512) + ", " + num(e1024) + ", " +
                        num(e2048));
        out.note("fan L1 " + num(e512) + " -> " + num(e2048));
    }
    return out;
}

Outcome criterion_4_energy_budget(Trajectory* keep = nullptr) {
    Outcome out;
    ScenarioConfig c = steep_burgers(2048, 0.05, 2.0);
    RunResult rr = run(c);
    out.require(!rr.breakdown.has_value(), "run broke down");
    const CheckReport mono = check_energy_monotone(rr.trajectory);
    out.require(mono.pass, "energy rose by " + num(mono.value) + " at a record");
    const CheckReport bal = check_energy_balance(rr.trajectory, 0.05);
    out.require(bal.pass, "balance mismatch " + num(bal.value));
    out.note("balance mismatch " + num(bal.value) + " of E(0)");
    out.require(mean_drift(rr.trajectory) <= 1e-9, "mean drift " + num(mean_drift(rr.trajectory)));
    if (keep) *keep = std::move(rr.trajectory);
    return out;
}

Outcome criterion_5_oleinik() {
    Outcome out;
    double prev_violation = std::numeric_limits<double>::infinity();
    for (int n : {1024, 2048, 4096}) {
        ScenarioConfig c = steep_burgers(n, 0.05, 2.0);
        c.record_every = 2;
        RunResult rr = run(c);
        out.require(!rr.breakdown.has_value(), "run broke down");
        const CheckReport ol =
            check_oleinik(rr.trajectory, 1.0, rr.trajectory.m_initial_slope, 0.05);
        out.require(ol.pass, "margin " + num(ol.value) + " at n=" + std::to_string(n));
        const double violation = std::max(0.0, ol.value - 1.0);
        out.require(violation <= prev_violation + 1e-9,
                    "violation grew under refinement at n=" + std::to_string(n));
        prev_violation = violation;
        out.note("n=" + std::to_string(n) + " margin " + num(ol.value));
        out.require(mean_drift(rr.trajectory) <= 1e-9, "mean drift");
    }
    return out;
}

Outcome criterion_6_tv_bound() {
    Outcome out;
    ScenarioConfig c = steep_burgers(1024, 0.05, 2.0);
    c.flux_name = "cosine";
    c.flux_beta = 0.5;
    RunResult rr = run(c);
    out.require(!rr.breakdown.has_value(), "run broke down");
    const double m = rr.trajectory.m_initial_slope;
    out.require(m > 0.0 && std::isfinite(m), "M not finite/positive");
    const CheckReport tv = check_tv_bound(rr.trajectory, 0.5, 1.5, m, 0.05);
    out.require(tv.pass, "TV ratio " + num(tv.value));
    out.note("worst TV/bound " + num(tv.value));
    out.require(mean_drift(rr.trajectory) <= 1e-9, "mean drift");
    return out;
}

Outcome criterion_7_mean_conservation() {
    Outcome out;
    double worst = 0.0;
    {
        ScenarioConfig c = steep_burgers(2048, 0.02, 1.5);
        c.ell = 0.05;
        worst = std::max(worst, mean_drift(run(c).trajectory));
    }
    {
        ScenarioConfig c = steep_burgers(2048, 0.0, 1.0);
        c.record_every = 16;
        worst = std::max(worst, mean_drift(entropy_solve(c).trajectory));
    }
    {
        // the gHS tendency is nonlocal, not a telescoping flux; its conserved
        // counterpart is the slope mean int u_x = 0
        ScenarioConfig c = ghs_bump(2048, 5.0);
        RunResult rr = ghs_solve(c);
        double slope_mean = 0.0;
        for (const auto& s : rr.trajectory.states)
            slope_mean = std::max(slope_mean, std::abs(integrate(derivative(s.u))));
        out.require(slope_mean <= 1e-9, "ghs slope mean " + num(slope_mean));
    }
    out.require(worst <= 1e-9, "worst mean drift " + num(worst));
    out.note("worst drift " + num(worst));
    return out;
}

Outcome criterion_8_entropy_limit() {
    Outcome out;
    SweepSpec spec;
    spec.base = steep_burgers(2048, 0.02, 1.5);
    spec.base.record_every = 1 << 20;  // final snapshot is all the sweep needs
    spec.axis = SweepAxis::ell;
    spec.values = {0.2, 0.1, 0.05, 0.025};
    spec.comparison = SweepComparison::entropy;
    spec.reference_n = 8192;
    spec.window_lo = -8.0;
    spec.window_hi = 0.0;
    SweepReport rep = run_sweep(spec);
    std::string seq;
    for (const auto& p : rep.points) seq += num(p.l1) + " ";
    out.note("L1: " + seq);
    for (size_t j = 1; j < rep.points.size(); ++j)
        out.require(rep.points[j].l1 < rep.points[j - 1].l1, "distances not strictly decreasing");
    out.require(rep.points.back().l1 <= rep.points.front().l1 / 3.0,
                "final distance above a third of the first");
    return out;
}

Outcome criterion_9_ghs_limit() {
    Outcome out;
    SweepSpec spec;
    spec.base = ghs_bump(16384, 5.0);
    spec.base.record_every = 1 << 20;
    spec.axis = SweepAxis::ell;
    spec.values = {5.0, 20.0, 80.0};
    spec.comparison = SweepComparison::ghs;
    spec.window_lo = -30.0;
    spec.window_hi = 30.0;
    SweepReport rep = run_sweep(spec);
    std::string seq;
    for (const auto& p : rep.points) seq += "(" + num(p.linf) + "," + num(p.h1) + ") ";
    out.note("Linf,H1: " + seq);
    for (size_t j = 1; j < rep.points.size(); ++j) {
        out.require(rep.points[j].linf < rep.points[j - 1].linf, "Linf not decreasing");
        out.require(rep.points[j].h1 < rep.points[j - 1].h1, "H1 not decreasing");
    }
    return out;
}

Outcome criterion_10_pmass_scaling() {
    Outcome out;
    std::vector<ScenarioConfig> ladder;
    for (double ell : {0.2, 0.1, 0.05, 0.025}) {
        ScenarioConfig c = steep_burgers(2048, 0.02, 1.5);
        c.ell = ell;
        c.record_every = 4;
        ladder.push_back(c);
    }
    const PMassReport rep = p_mass_scaling(ladder, Window{0.5, 1.5, -8.0, 0.0});
    std::string seq;
    for (const auto& p : rep.points) seq += num(p.p_mass) + " ";
    out.note("masses: " + seq + "slope " + num(rep.fitted_slope));
    out.require(rep.decreasing, "window masses not decreasing with ell");
    out.require(rep.fitted_slope >= 0.5, "fitted slope " + num(rep.fitted_slope) + " < 0.5");
    return out;
}

Outcome criterion_11_blowup_dichotomy() {
    Outcome out;
    // ell small enough that the eps = 0 Riccati collapse runs far past the
    // initial steepness before the nonlocal term can arrest it
    auto scenario = [](double epsilon) {
        ScenarioConfig c = steep_burgers(2048, epsilon, 5.0);
        c.ell = 0.02;
        c.ic_params["delta"] = 0.2;
        c.record_every = 5;
        return c;
    };
    ScenarioConfig smooth = scenario(0.05);
    RunResult ok = run(smooth);
    out.require(!ok.breakdown.has_value(), "eps=0.05 run broke down");
    out.require(std::abs(ok.trajectory.states.back().t - 5.0) < 1e-9, "did not reach T=5");
    out.require(mean_drift(ok.trajectory) <= 1e-9, "mean drift");

    RunResult broke = run(scenario(0.0));
    out.require(broke.breakdown.has_value(), "eps=0 run did not report breakdown");
    if (broke.breakdown) {
        out.require(broke.breakdown->t > 0.0 && broke.breakdown->t < 5.0,
                    "breakdown time not finite/interior");
        out.note("breakdown at t=" + num(broke.breakdown->t));
    }
    return out;
}

Outcome criterion_12_determinism() {
    Outcome out;
    ScenarioConfig c = steep_burgers(2048, 0.05, 2.0);
    c.csv_path = "diag.csv";

    if (!g_cli_path.empty()) {
        const std::string cfg = "acc12_config.cfg";
        std::ofstream(cfg) << render_config(c);
        for (const std::string dir : {"acc12_a", "acc12_b"}) {
            out.require(std::system(("mkdir -p " + dir).c_str()) == 0, "mkdir failed");
            const std::string cmd = g_cli_path + " run --config " + cfg + " --out " + dir +
                                    " > " + dir + "/stdout.txt 2>&1";
            out.require(std::system(cmd.c_str()) == 0, "cli run failed in " + dir);
        }
        auto slurp = [](const std::string& p) {
            std::ifstream in(p, std::ios::binary);
            std::ostringstream ss;
            ss << in.rdbuf();
            return ss.str();
        };
        const std::string a = slurp("acc12_a/diag.csv");
        const std::string b = slurp("acc12_b/diag.csv");
        out.require(!a.empty(), "no CSV produced");
        out.require(a == b, "CSV bytes differ between identical runs");
        out.note("CSV " + std::to_string(a.size()) + " bytes, byte-identical via CLI");
    } else {
        const std::string a = diagnostics_csv_text(run(c).trajectory);
        const std::string b = diagnostics_csv_text(run(c).trajectory);
        out.require(!a.empty() && a == b, "CSV bytes differ between identical runs");
        out.note("CSV byte-identical in-process (no --cli given)");
    }
    return out;
}

struct Criterion {
    int id;
    const char* name;
    std::function<Outcome()> fn;
};

}  // namespace

int main(int argc, char** argv) {
    std::vector<int> skip, only;
    for (int i = 1; i < argc; ++i) {
        const std::string arg = argv[i];
        if (arg == "--skip" && i + 1 < argc) skip.push_back(std::atoi(argv[++i]));
        if (arg == "--only" && i + 1 < argc) only.push_back(std::atoi(argv[++i]));
        if (arg == "--cli" && i + 1 < argc) g_cli_path = argv[++i];
    }

    const std::vector<Criterion> criteria = {
        {1, "helmholtz round-trip", criterion_1_helmholtz_roundtrip},
        {2, "cut-off algebra", criterion_2_cutoff_algebra},
        {3, "godunov oracle", criterion_3_godunov_oracle},
        {4, "energy budget", [] { return criterion_4_energy_budget(); }},
        {5, "oleinik bound", criterion_5_oleinik},
        {6, "tv bound", criterion_6_tv_bound},
        {7, "mean conservation", criterion_7_mean_conservation},
        {8, "entropy limit (ell -> 0)", criterion_8_entropy_limit},
        {9, "ghs limit (ell -> inf)", criterion_9_ghs_limit},
        {10, "ell^2 P scaling", criterion_10_pmass_scaling},
        {11, "blow-up dichotomy", criterion_11_blowup_dichotomy},
        {12, "determinism", criterion_12_determinism},
    };

    bool all_pass = true;
    for (const auto& c : criteria) {
        const bool skipped =
            (!only.empty() && std::find(only.begin(), only.end(), c.id) == only.end()) ||
            std::find(skip.begin(), skip.end(), c.id) != skip.end();
        if (skipped) continue;
        const auto start = std::chrono::steady_clock::now();
        Outcome out;
        try {
            out = c.fn();
        } catch (const std::exception& e) {
            out.pass = false;
            out.note(std::string("exception: ") + e.what());
        }
        const double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::printf("[%s] criterion %2d: %-26s (%s) [%.1fs]\n", out.pass ? "PASS" : "FAIL",
                    c.id, c.name, out.detail.c_str(), secs);
        std::fflush(stdout);
        all_pass = all_pass && out.pass;
    }
    return all_pass ? 0 : 1;
}
