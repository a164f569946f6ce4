#pragma once

#include "mrpsim/switching.hpp"
#include "mrpsim/trajectory.hpp"

#include <filesystem>
#include <optional>
#include <ostream>
#include <string>

namespace mrpsim {

/// |x(t)| must stay below this for the run to count as settled.
inline constexpr double kSettlingThreshold = 1e-2;

/// Telemetry schema, one row per step:
/// t,s1,s2,s3,w1,w2,w3,sigma_norm,u1,u2,u3,active_set
/// Numbers carry 9 significant digits.
void write_trajectory_csv(const TrajectoryRecord& traj, std::ostream& out);

/// Companion event file: t,norm_before,norm_after,strategy
void write_events_csv(const TrajectoryRecord& traj, const std::string& strategy_name,
                      std::ostream& out);

/// Writes <name>.csv and <name>_events.csv under dir. I/O failures are
/// reported with the offending path.
void write_run_csvs(const TrajectoryRecord& traj, const std::string& strategy_name,
                    const std::filesystem::path& dir, const std::string& name);

struct RunSummary {
    double final_sigma_norm = 0.0;
    double final_omega_norm = 0.0;
    std::optional<double> settling_time; // first t after which |x| stays < 1e-2
    int switch_count = 0;
    bool chattering = false; // alternation persists into the final quarter
    double max_sigma_norm = 0.0;
    std::string termination = "completed";
};

RunSummary summarize_run(const TrajectoryRecord& traj, const ChatterMetrics& metrics);

} // namespace mrpsim
