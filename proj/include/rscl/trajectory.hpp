#pragma once

#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "rscl/grid.hpp"

namespace rscl {

/// Solution sample at one instant. ell = 0 marks the ell-free reference
/// solvers (entropy, gHS); epsilon = 0 means no slope cut-off.
struct State {
    Field u;
    double t = 0.0;
    double ell = 0.0;
    double epsilon = 0.0;
};

/// Every theorem-level quantity measured on one state.
struct DiagnosticsRecord {
    double t = 0.0;
    double energy = 0.0;       // 1/2 int (u^2 + ell^2 u_x^2)
    double hamiltonian = 0.0;  // int [F(u) + 1/2 ell^2 f'(u) u_x^2]
    double mean = 0.0;         // int u
    double tv = 0.0;           // ||u_x||_L1 as sum |du|
    double max_slope = 0.0;    // max u_x
    double oleinik_bound = 0.0;             // 1/(c t/2 + 1/M); +inf at t=0 when 1/M=0
    double cutoff_dissipation_rate = 0.0;   // 1/2 ell^2 int f''(u) q chi_eps(q) <= 0
    double p_mass = 0.0;                    // ell^2 int P
};

struct Trajectory {
    std::vector<State> states;              // time-ordered, possibly strided
    std::vector<DiagnosticsRecord> records;  // aligned with states
    double m_initial_slope = 0.0;            // M = sup u_0'; <= 0 is treated as 1/M = 0
};

struct Breakdown {
    double t = 0.0;
    double min_slope = 0.0;
    std::string reason;
};

struct RunResult {
    Trajectory trajectory;
    std::optional<Breakdown> breakdown;
};

/// Characteristic trace X' = u(t, X) with the slope sampled along it.
struct CharTrace {
    double x0 = 0.0;
    std::vector<double> t;
    std::vector<double> x;
    std::vector<double> slope;  // h(t) = u_x(t, X(t))
    double max_margin = 0.0;    // max over t of h(t) * (c t/2 + 1/M)
};

inline double inv_m(double m_initial_slope) {
    return m_initial_slope > 0.0 ? 1.0 / m_initial_slope : 0.0;
}

inline double oleinik_bound(double c, double t, double m_initial_slope) {
    const double denom = 0.5 * c * t + inv_m(m_initial_slope);
    return denom > 0.0 ? 1.0 / denom : std::numeric_limits<double>::infinity();
}

}  // namespace rscl
