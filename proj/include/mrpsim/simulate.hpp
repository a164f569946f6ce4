#pragma once

#include "mrpsim/scenario.hpp"
#include "mrpsim/trajectory.hpp"

namespace mrpsim {

/// Integrates the closed-loop delay differential equation over the scenario
/// horizon and returns the full time series plus switch events.
///
/// Per step, in order: evaluate the switching rule on its monitored norm,
/// apply at most one shadow switch to the current sigma, append the
/// (possibly switched) state to the measurement history, evaluate the
/// delayed feedback torque, record the row, then advance one RK4 step with
/// the torque held. History is never rewritten; a switch therefore reaches
/// the controller only one delay later, which is what lets the delayed
/// strategies chatter.
///
/// Deterministic: identical scenarios produce bit-identical records.
/// Throws NonFiniteState on divergence and SingularMrp when |sigma| passes
/// the blow-up bound.
TrajectoryRecord simulate(const Scenario& scenario);

} // namespace mrpsim
