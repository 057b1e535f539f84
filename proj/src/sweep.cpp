#include "rscl/sweep.hpp"

#include <atomic>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <stdexcept>
#include <thread>

#include "rscl/io.hpp"
#include "rscl/reference.hpp"
#include "rscl/solver.hpp"

namespace rscl {

namespace {

ScenarioConfig with_axis(const ScenarioConfig& base, SweepAxis axis, double value) {
    ScenarioConfig c = base;
    switch (axis) {
        case SweepAxis::ell: c.ell = value; break;
        case SweepAxis::epsilon: c.epsilon = value; break;
        case SweepAxis::n: c.n = static_cast<int>(std::llround(value)); break;
    }
    return c;
}

// conservative restriction of a fine field onto a coarser grid (factor must divide)
Field restrict_to(const Field& fine, const Grid1D& coarse) {
    if (fine.grid.n % coarse.n != 0)
        throw std::invalid_argument("restrict_to: fine n must be a multiple of coarse n");
    const int factor = fine.grid.n / coarse.n;
    Field out(coarse);
    for (int i = 0; i < coarse.n; ++i) {
        double s = 0.0;
        for (int j = 0; j < factor; ++j) s += fine[i * factor + j];
        out[i] = s / factor;
    }
    return out;
}

double estimate_cell_steps(const ScenarioConfig& c) {
    const Field u0 = build_initial(c);
    const FluxModel flux = c.make_flux();
    double speed = 1.0;
    for (double u : u0.v) speed = std::max(speed, std::abs(flux.f1(u)));
    const double dx = (c.x_max - c.x_min) / c.n;
    const double steps = c.t_final * speed / (c.cfl * dx);
    return static_cast<double>(c.n) * steps;
}

void run_parallel(int count, int workers, const std::function<void(int)>& task) {
    if (workers <= 1 || count <= 1) {
        for (int i = 0; i < count; ++i) task(i);
        return;
    }
    std::atomic<int> next{0};
    std::vector<std::thread> pool;
    const int nthreads = std::min(workers, count);
    pool.reserve(static_cast<size_t>(nthreads));
    for (int w = 0; w < nthreads; ++w) {
        pool.emplace_back([&] {
            for (int i = next.fetch_add(1); i < count; i = next.fetch_add(1)) task(i);
        });
    }
    for (auto& th : pool) th.join();
}

double window_l1(const Field& a, const Field& b, double lo, double hi) {
    double s = 0.0;
    for (int i = 0; i < a.grid.n; ++i) {
        const double x = a.grid.center(i);
        if (x >= lo && x <= hi) s += std::abs(a[i] - b[i]);
    }
    return s * a.grid.dx;
}

double window_linf(const Field& a, const Field& b, double lo, double hi) {
    double m = 0.0;
    for (int i = 0; i < a.grid.n; ++i) {
        const double x = a.grid.center(i);
        if (x >= lo && x <= hi) m = std::max(m, std::abs(a[i] - b[i]));
    }
    return m;
}

double window_h1(const Field& a, const Field& b, double lo, double hi) {
    const Field qa = derivative(a);
    const Field qb = derivative(b);
    double s = 0.0;
    for (int i = 0; i < a.grid.n; ++i) {
        const double x = a.grid.center(i);
        if (x >= lo && x <= hi) {
            const double d = qa[i] - qb[i];
            s += d * d;
        }
    }
    return std::sqrt(s * a.grid.dx);
}

}  // namespace

int solver_workers() {
    if (const char* env = std::getenv("SOLVER_WORKERS")) {
        const int v = std::atoi(env);
        if (v >= 1) return v;
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

SweepReport run_sweep(const SweepSpec& spec) {
    if (spec.values.size() < 2)
        throw std::invalid_argument("run_sweep: need at least 2 ladder values");
    bool increasing = true, decreasing = true;
    for (size_t j = 1; j < spec.values.size(); ++j) {
        increasing = increasing && spec.values[j] > spec.values[j - 1];
        decreasing = decreasing && spec.values[j] < spec.values[j - 1];
    }
    if (!increasing && !decreasing)
        throw std::invalid_argument("run_sweep: ladder must be monotone");
    if (spec.comparison == SweepComparison::self && spec.axis != SweepAxis::n)
        throw std::invalid_argument("run_sweep: self comparison needs axis = n");

    const double width = spec.base.x_max - spec.base.x_min;
    const double lo = std::isnan(spec.window_lo) ? spec.base.x_min + 0.25 * width : spec.window_lo;
    const double hi = std::isnan(spec.window_hi) ? spec.base.x_max - 0.25 * width : spec.window_hi;

    std::vector<ScenarioConfig> configs;
    double budget = 0.0;
    int finest_n = spec.base.n;
    for (double v : spec.values) {
        configs.push_back(with_axis(spec.base, spec.axis, v));
        budget += estimate_cell_steps(configs.back());
        finest_n = std::max(finest_n, configs.back().n);
    }

    ScenarioConfig ref_config = spec.base;
    bool have_reference = false;
    if (spec.comparison == SweepComparison::entropy) {
        ref_config.n = spec.reference_n > 0 ? spec.reference_n : 4 * finest_n;
        if (ref_config.n < 4 * finest_n)
            throw std::invalid_argument("run_sweep: entropy reference must be >= 4x the finest n");
        budget += estimate_cell_steps(ref_config);
        have_reference = true;
    } else if (spec.comparison == SweepComparison::ghs) {
        budget += estimate_cell_steps(ref_config);
        have_reference = true;
    }
    if (budget > spec.max_cell_steps)
        throw std::runtime_error("run_sweep: estimated cells x steps " +
                                 format_double(budget) + " exceeds the configured cap");

    Field reference;
    if (have_reference) {
        RunResult rr = spec.comparison == SweepComparison::entropy ? entropy_solve(ref_config)
                                                                   : ghs_solve(ref_config);
        reference = rr.trajectory.states.back().u;
    }

    std::vector<Field> finals(configs.size());
    run_parallel(static_cast<int>(configs.size()), solver_workers(), [&](int j) {
        finals[static_cast<size_t>(j)] =
            run(configs[static_cast<size_t>(j)]).trajectory.states.back().u;
    });

    SweepReport report;
    report.points.resize(configs.size());
    for (size_t j = 0; j < configs.size(); ++j) {
        report.points[j].value = spec.values[j];
        if (spec.comparison == SweepComparison::entropy) {
            const Field ref_j = restrict_to(reference, finals[j].grid);
            report.points[j].l1 = window_l1(finals[j], ref_j, lo, hi);
        } else if (spec.comparison == SweepComparison::ghs) {
            report.points[j].linf = window_linf(finals[j], reference, lo, hi);
            report.points[j].h1 = window_h1(finals[j], reference, lo, hi);
        }
    }

    if (spec.comparison == SweepComparison::self) {
        // Richardson pairs: distance between consecutive resolutions on the coarser grid
        std::vector<double> d;
        for (size_t j = 0; j + 1 < finals.size(); ++j) {
            const Field& coarse = finals[j].grid.n <= finals[j + 1].grid.n ? finals[j] : finals[j + 1];
            const Field& fine = finals[j].grid.n <= finals[j + 1].grid.n ? finals[j + 1] : finals[j];
            const double dist = window_l1(coarse, restrict_to(fine, coarse.grid), lo, hi);
            d.push_back(dist);
            report.points[j].l1 = dist;
        }
        for (size_t j = 0; j + 1 < d.size(); ++j)
            if (d[j] > 0.0 && d[j + 1] > 0.0)
                report.observed_orders.push_back(std::log2(d[j] / d[j + 1]));
        report.distances_decreasing = true;
        for (size_t j = 0; j + 1 < d.size(); ++j)
            report.distances_decreasing = report.distances_decreasing && d[j + 1] < d[j];
        return report;
    }

    // toward the limit: distances must shrink as ell -> 0 (entropy) or ell -> inf (ghs)
    auto metric = [&](const SweepPoint& p) {
        return spec.comparison == SweepComparison::entropy ? p.l1 : std::max(p.linf, p.h1);
    };
    const bool toward_small = spec.comparison == SweepComparison::entropy;
    report.distances_decreasing = true;
    for (size_t j = 0; j + 1 < report.points.size(); ++j) {
        const bool value_toward_limit = toward_small
                                            ? spec.values[j + 1] < spec.values[j]
                                            : spec.values[j + 1] > spec.values[j];
        const bool closer = metric(report.points[j + 1]) < metric(report.points[j]);
        if (value_toward_limit != closer) report.distances_decreasing = false;
    }
    return report;
}

void write_sweep_ndjson(const std::string& path, const SweepSpec& spec,
                        const SweepReport& report) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    const char* axis = spec.axis == SweepAxis::ell ? "ell"
                       : spec.axis == SweepAxis::epsilon ? "epsilon"
                                                         : "n";
    for (const auto& p : report.points) {
        out << "{\"axis\":\"" << axis << "\",\"value\":" << format_double(p.value);
        if (!std::isnan(p.l1)) out << ",\"l1\":" << format_double(p.l1);
        if (!std::isnan(p.linf)) out << ",\"linf\":" << format_double(p.linf);
        if (!std::isnan(p.h1)) out << ",\"h1\":" << format_double(p.h1);
        out << "}\n";
    }
    out << "{\"summary\":true,\"decreasing\":" << (report.distances_decreasing ? "true" : "false");
    if (!report.observed_orders.empty()) {
        out << ",\"observed_orders\":[";
        for (size_t j = 0; j < report.observed_orders.size(); ++j) {
            if (j) out << ',';
            out << format_double(report.observed_orders[j]);
        }
        out << ']';
    }
    out << "}\n";
}

}  // namespace rscl
