#pragma once

#include <string>

#include "rscl/diagnostics.hpp"
#include "rscl/scenario.hpp"
#include "rscl/trajectory.hpp"

namespace rscl {

/// Shortest round-trippable decimal form; the one double formatter everywhere,
/// so identical inputs give byte-identical files.
std::string format_double(double x);

/// Header: t,energy,hamiltonian,mean,tv,max_slope,oleinik_margin,energy_balance_residual
void write_diagnostics_csv(const std::string& path, const Trajectory& traj);
std::string diagnostics_csv_text(const Trajectory& traj);

/// One `{"t":..,"x":[..],"u":[..]}` line per kept state; every = 0 keeps only
/// the first and last.
void write_snapshots_ndjson(const std::string& path, const Trajectory& traj, int every);

/// `x,value` rows, one per cell.
void write_field_csv(const std::string& path, const Field& field);
std::string field_csv_text(const Field& field);

/// Writes whatever sinks the config names, under out_dir when paths are relative.
void write_outputs(const RunResult& result, const ScenarioConfig& config,
                   const std::string& out_dir);

void write_pmass_ndjson(const std::string& path, const PMassReport& report);

}  // namespace rscl
