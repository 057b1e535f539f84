#include "rscl/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace rscl {

namespace {

std::ofstream open_or_throw(const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    return out;
}

std::string join_path(const std::string& dir, const std::string& path) {
    if (dir.empty() || path.empty() || path.front() == '/') return path;
    return dir.back() == '/' ? dir + path : dir + "/" + path;
}

void snapshot_line(std::ostream& out, const State& s) {
    out << "{\"t\":" << format_double(s.t) << ",\"x\":[";
    for (int i = 0; i < s.u.grid.n; ++i) {
        if (i) out << ',';
        out << format_double(s.u.grid.center(i));
    }
    out << "],\"u\":[";
    for (int i = 0; i < s.u.grid.n; ++i) {
        if (i) out << ',';
        out << format_double(s.u[i]);
    }
    out << "]}\n";
}

}  // namespace

std::string format_double(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

std::string diagnostics_csv_text(const Trajectory& traj) {
    std::ostringstream out;
    out << "t,energy,hamiltonian,mean,tv,max_slope,oleinik_margin,energy_balance_residual\n";
    if (traj.records.empty()) return out.str();
    const double e0 = traj.records.front().energy;
    double rate_integral = 0.0;
    for (size_t j = 0; j < traj.records.size(); ++j) {
        const auto& r = traj.records[j];
        if (j > 0)
            rate_integral += 0.5 *
                             (r.cutoff_dissipation_rate +
                              traj.records[j - 1].cutoff_dissipation_rate) *
                             (r.t - traj.records[j - 1].t);
        const double margin = std::isinf(r.oleinik_bound) ? 0.0 : r.max_slope / r.oleinik_bound;
        const double residual =
            std::abs(r.energy - e0 - rate_integral) / std::max(e0, 1e-300);
        out << format_double(r.t) << ',' << format_double(r.energy) << ','
            << format_double(r.hamiltonian) << ',' << format_double(r.mean) << ','
            << format_double(r.tv) << ',' << format_double(r.max_slope) << ','
            << format_double(margin) << ',' << format_double(residual) << "\n";
    }
    return out.str();
}

void write_diagnostics_csv(const std::string& path, const Trajectory& traj) {
    open_or_throw(path) << diagnostics_csv_text(traj);
}

void write_snapshots_ndjson(const std::string& path, const Trajectory& traj, int every) {
    auto out = open_or_throw(path);
    const size_t count = traj.states.size();
    for (size_t j = 0; j < count; ++j) {
        const bool keep = (every > 0 && j % static_cast<size_t>(every) == 0) || j == 0 ||
                          j + 1 == count;
        if (keep) snapshot_line(out, traj.states[j]);
    }
}

std::string field_csv_text(const Field& field) {
    std::ostringstream out;
    out << "x,value\n";
    for (int i = 0; i < field.grid.n; ++i)
        out << format_double(field.grid.center(i)) << ',' << format_double(field[i]) << "\n";
    return out.str();
}

void write_field_csv(const std::string& path, const Field& field) {
    open_or_throw(path) << field_csv_text(field);
}

void write_outputs(const RunResult& result, const ScenarioConfig& config,
                   const std::string& out_dir) {
    if (!config.csv_path.empty())
        write_diagnostics_csv(join_path(out_dir, config.csv_path), result.trajectory);
    if (!config.ndjson_path.empty())
        write_snapshots_ndjson(join_path(out_dir, config.ndjson_path), result.trajectory,
                               config.snapshot_every);
}

void write_pmass_ndjson(const std::string& path, const PMassReport& report) {
    auto out = open_or_throw(path);
    for (const auto& pt : report.points)
        out << "{\"ell\":" << format_double(pt.ell) << ",\"p_mass\":"
            << format_double(pt.p_mass) << ",\"slope_fit\":"
            << format_double(report.fitted_slope) << "}\n";
}

}  // namespace rscl
