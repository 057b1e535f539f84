#pragma once

#include <string>
#include <vector>

#include "rscl/scenario.hpp"
#include "rscl/trajectory.hpp"

namespace rscl {

enum class SweepAxis { ell, epsilon, n };
enum class SweepComparison { entropy, ghs, self };

/// Ladder of runs along one axis, each compared against a reference:
///   entropy — L1(window) distance to a Godunov run at >= 4x the finest n
///   ghs     — Linf and H1-seminorm (window) distance to the gHS solver
///   self    — Richardson pairs along an n ladder
struct SweepSpec {
    ScenarioConfig base;
    SweepAxis axis = SweepAxis::ell;
    std::vector<double> values;
    SweepComparison comparison = SweepComparison::self;

    // measurement window; NaN bounds default to the central half of the domain
    double window_lo = std::numeric_limits<double>::quiet_NaN();
    double window_hi = std::numeric_limits<double>::quiet_NaN();

    int reference_n = 0;  // entropy only; 0 = 4x the finest ladder n
    double max_cell_steps = 4e9;
};

struct SweepPoint {
    double value = 0.0;
    double l1 = std::numeric_limits<double>::quiet_NaN();
    double linf = std::numeric_limits<double>::quiet_NaN();
    double h1 = std::numeric_limits<double>::quiet_NaN();
};

struct SweepReport {
    std::vector<SweepPoint> points;  // one per ladder value, in the given order
    bool distances_decreasing = false;
    std::vector<double> observed_orders;  // self comparison only
};

/// Ladder points execute concurrently up to the SOLVER_WORKERS cap.
SweepReport run_sweep(const SweepSpec& spec);

void write_sweep_ndjson(const std::string& path, const SweepSpec& spec,
                        const SweepReport& report);

/// Worker cap: SOLVER_WORKERS env var, default available parallelism.
int solver_workers();

}  // namespace rscl
