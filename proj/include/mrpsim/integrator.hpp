#pragma once

#include "mrpsim/controller.hpp"
#include "mrpsim/dynamics.hpp"

namespace mrpsim {

/// Fixed-step integration settings. The step is locked to the measurement
/// cadence (dt = 1/sample_rate) and the delay must be a whole number of
/// samples, so the delayed lookup in the control path never interpolates.
struct IntegratorConfig {
    double sample_rate = 1000.0; // Hz
    double horizon = 60.0;       // s
    double tau = 0.0;            // s

    double dt() const { return 1.0 / sample_rate; }
    long delay_steps() const;
    long total_steps() const;

    /// Throws ValidationError on any violated invariant.
    void validate() const;
};

/// One classical Runge-Kutta step of x_dot = state_derivative(x, u) with the
/// torque held constant over the step (zero-order hold).
/// Throws NonFiniteState when the result diverges.
SimState rk4_step(const SimState& x, const Vec3& torque_held, double dt,
                  const InertiaModel& inertia);

enum class Crossing { none, upward, downward };

/// Edge detector for sampled data: upward iff prev < level <= curr,
/// downward iff curr < level <= prev.
Crossing detect_threshold_crossing(double n_prev, double n_curr, double level);

} // namespace mrpsim
