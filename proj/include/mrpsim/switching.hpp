#pragma once

#include "mrpsim/dynamics.hpp"
#include "mrpsim/trajectory.hpp"

#include <optional>
#include <string>

namespace mrpsim {

enum class SwitchVariant { NoSwitch, PointCurrent, PointDelayed, HystereticLayer };

/// Which shadow-set switching rule is active, and for the boundary-layer
/// rule, the layer thickness epsilon of the shell 1 <= |sigma| <= 1+epsilon.
struct SwitchStrategy {
    SwitchVariant variant = SwitchVariant::NoSwitch;
    double epsilon = 0.0;

    static SwitchStrategy none() { return {SwitchVariant::NoSwitch, 0.0}; }
    static SwitchStrategy point_current() { return {SwitchVariant::PointCurrent, 0.0}; }
    static SwitchStrategy point_delayed() { return {SwitchVariant::PointDelayed, 0.0}; }
    /// Throws ValidationError unless eps > 0.
    static SwitchStrategy hysteretic(double eps);

    bool monitors_delayed() const {
        return variant == SwitchVariant::PointDelayed ||
               variant == SwitchVariant::HystereticLayer;
    }
    std::string name() const;
};

enum class SwitchDecision { hold, do_switch };

/// Per-run switching state. Point switching on the current norm fires on
/// every upward crossing of |sigma| = 1; point switching on the delayed
/// norm fires on every crossing in either direction, because the delayed
/// measurement stream replays past set switches as jumps through the
/// trigger level. The hysteretic rule fires once per layer-occupancy
/// episode: it switches when the monitored norm enters the layer from
/// below (or jumps clear across it), disarms, and re-arms only after the
/// norm exits the layer again.
class SwitchMachine {
public:
    explicit SwitchMachine(const SwitchStrategy& strategy);

    /// Feed the next monitored norm; returns the switch decision.
    SwitchDecision update(double monitored);

    const SwitchStrategy& strategy() const { return strategy_; }
    bool armed() const { return armed_; }
    int switch_count() const { return count_; }
    std::optional<double> monitored_prev() const { return prev_; }

private:
    SwitchStrategy strategy_;
    bool armed_ = true;
    std::optional<double> prev_;
    int count_ = 0;
};

/// The norm each strategy watches: the current |sigma(t)| for point switching
/// on the current value (and for NoSwitch, where it is only recorded), the
/// delayed |sigma(t-tau)| for the delayed-point and boundary-layer rules.
double monitored_norm(const SwitchStrategy& strategy, const SimState& current,
                      const SimState& delayed);

/// Replace sigma by its shadow set; omega is untouched (the shadow map
/// re-parameterizes attitude only). Throws ZeroNormMrp on |sigma| = 0.
SimState apply_shadow_switch(const SimState& x);

/// Summary numbers for "does this run chatter".
struct ChatterMetrics {
    int total_switches = 0;
    int max_window_rate = 0; // most events inside any window of width w
    std::optional<double> min_interswitch; // absent with fewer than 2 events
    bool alternation_persistent = false;   // events in the final quarter
};

ChatterMetrics chattering_metrics(const TrajectoryRecord& traj, double window_w);

} // namespace mrpsim
