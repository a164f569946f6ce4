#pragma once

#include "mrpsim/scenario.hpp"
#include "mrpsim/simulate.hpp"
#include "mrpsim/telemetry.hpp"

#include <optional>
#include <string>
#include <vector>

namespace mrpsim {

/// Window width used when scoring chattering in batch runs.
inline constexpr double kMetricsWindow = 1.0; // s

struct RunResult {
    std::string scenario_name;
    std::optional<TrajectoryRecord> trajectory; // absent when the run failed
    ChatterMetrics metrics;
    RunSummary summary;
    bool ok = false;
};

/// Runs every scenario. Results keep the input order no matter how the
/// work is scheduled; a failing run (divergence, blow-up) is captured in
/// its own summary and does not abort the rest.
std::vector<RunResult> run_batch(const std::vector<Scenario>& scenarios,
                                 unsigned parallelism);

/// Convenience wrapper: simulate + metrics + summary for one scenario.
RunResult run_scenario(const Scenario& scenario);

} // namespace mrpsim
