#pragma once

#include "mrpsim/types.hpp"

#include <vector>

namespace mrpsim {

/// Which MRP set the representation currently lives on.
enum class ActiveSet { standard, shadow };

struct TrajectoryRow {
    double t = 0.0;
    Vec3 sigma{Vec3::Zero()};
    Vec3 omega{Vec3::Zero()}; // unscaled, rad/s
    double sigma_norm = 0.0;
    Vec3 torque{Vec3::Zero()};
    ActiveSet active_set = ActiveSet::standard;
};

struct SwitchEvent {
    double t = 0.0;
    double norm_before = 0.0;
    double norm_after = 0.0;
    Vec3 sigma_before{Vec3::Zero()}; // full pre-switch MRP, kept for checks
};

/// Time series of one run plus the shadow-switch events that occurred.
struct TrajectoryRecord {
    std::vector<TrajectoryRow> rows;
    std::vector<SwitchEvent> switch_events;

    double end_time() const { return rows.empty() ? 0.0 : rows.back().t; }
};

} // namespace mrpsim
