#include "mrpsim/switching.hpp"

#include "mrpsim/errors.hpp"
#include "mrpsim/integrator.hpp"

#include <algorithm>

namespace mrpsim {

SwitchStrategy SwitchStrategy::hysteretic(double eps) {
    if (!(eps > 0.0)) {
        throw ValidationError("boundary layer thickness epsilon must be > 0");
    }
    return {SwitchVariant::HystereticLayer, eps};
}

std::string SwitchStrategy::name() const {
    switch (variant) {
    case SwitchVariant::NoSwitch: return "none";
    case SwitchVariant::PointCurrent: return "point_current";
    case SwitchVariant::PointDelayed: return "point_delayed";
    case SwitchVariant::HystereticLayer: return "hysteretic";
    }
    return "unknown";
}

SwitchMachine::SwitchMachine(const SwitchStrategy& strategy) : strategy_(strategy) {
    if (strategy_.variant == SwitchVariant::HystereticLayer && !(strategy_.epsilon > 0.0)) {
        throw ValidationError("boundary layer thickness epsilon must be > 0");
    }
}

SwitchDecision SwitchMachine::update(double monitored) {
    SwitchDecision decision = SwitchDecision::hold;
    switch (strategy_.variant) {
    case SwitchVariant::NoSwitch:
        break;
    case SwitchVariant::PointCurrent:
        // The current norm reaches 1 only when the attitude passes 180 deg,
        // always from below; the post-switch bookkeeping step must not
        // re-fire, so only upward crossings count.
        if (prev_ && detect_threshold_crossing(*prev_, monitored, 1.0) == Crossing::upward) {
            decision = SwitchDecision::do_switch;
        }
        break;
    case SwitchVariant::PointDelayed:
        // The delayed stream replays recorded set switches as jumps across
        // the trigger level. Those jumps are genuine |sigma(t-tau)| = 1
        // passages, so any crossing fires; this is what lets one switch
        // re-trigger the next one delay period later.
        if (prev_ && detect_threshold_crossing(*prev_, monitored, 1.0) != Crossing::none) {
            decision = SwitchDecision::do_switch;
        }
        break;
    case SwitchVariant::HystereticLayer: {
        const bool inside_layer =
            monitored >= 1.0 && monitored <= 1.0 + strategy_.epsilon;
        if (armed_ && prev_ && *prev_ < 1.0 && monitored >= 1.0) {
            // Entry from below (a jump clear across the layer counts too).
            decision = SwitchDecision::do_switch;
            armed_ = false;
        } else if (!armed_ && !inside_layer) {
            armed_ = true;
        }
        break;
    }
    }
    prev_ = monitored;
    if (decision == SwitchDecision::do_switch) {
        ++count_;
    }
    return decision;
}

double monitored_norm(const SwitchStrategy& strategy, const SimState& current,
                      const SimState& delayed) {
    return strategy.monitors_delayed() ? delayed.sigma_norm() : current.sigma_norm();
}

SimState apply_shadow_switch(const SimState& x) {
    SimState out = x;
    out.sigma = shadow_map(Mrp(x.sigma)).v;
    return out;
}

ChatterMetrics chattering_metrics(const TrajectoryRecord& traj, double window_w) {
    ChatterMetrics m;
    const auto& events = traj.switch_events;
    m.total_switches = static_cast<int>(events.size());
    for (std::size_t i = 0; i < events.size(); ++i) {
        std::size_t j = i;
        while (j + 1 < events.size() && events[j + 1].t <= events[i].t + window_w) {
            ++j;
        }
        m.max_window_rate = std::max(m.max_window_rate, static_cast<int>(j - i + 1));
        if (i + 1 < events.size()) {
            const double gap = events[i + 1].t - events[i].t;
            if (!m.min_interswitch || gap < *m.min_interswitch) {
                m.min_interswitch = gap;
            }
        }
    }
    const double start_of_final_quarter = 0.75 * traj.end_time();
    m.alternation_persistent =
        std::any_of(events.begin(), events.end(),
                    [&](const SwitchEvent& e) { return e.t >= start_of_final_quarter; });
    return m;
}

} // namespace mrpsim
