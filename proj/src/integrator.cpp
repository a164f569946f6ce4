#include "mrpsim/integrator.hpp"

#include "mrpsim/errors.hpp"

#include <cmath>

namespace mrpsim {

long IntegratorConfig::delay_steps() const {
    return std::llround(tau * sample_rate);
}

long IntegratorConfig::total_steps() const {
    return std::llround(horizon * sample_rate);
}

void IntegratorConfig::validate() const {
    if (!(sample_rate > 0.0) || !std::isfinite(sample_rate)) {
        throw ValidationError("sample_rate must be positive and finite");
    }
    if (!(horizon > 0.0) || !std::isfinite(horizon)) {
        throw ValidationError("horizon must be positive and finite");
    }
    if (tau < 0.0 || !std::isfinite(tau)) {
        throw ValidationError("tau must be nonnegative and finite");
    }
    const double samples = tau * sample_rate; // = tau/dt
    if (std::abs(samples - std::round(samples)) > 1e-9) {
        throw ValidationError("tau must be a whole number of samples (tau/dt integer)");
    }
}

SimState rk4_step(const SimState& x, const Vec3& torque_held, double dt,
                  const InertiaModel& inertia) {
    const auto f = [&](const Vec6& v) {
        return state_derivative(SimState::from_vector(v), torque_held, inertia);
    };
    const Vec6 y = x.as_vector();
    const Vec6 k1 = f(y);
    const Vec6 k2 = f(y + 0.5 * dt * k1);
    const Vec6 k3 = f(y + 0.5 * dt * k2);
    const Vec6 k4 = f(y + dt * k3);
    const Vec6 next = y + (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    if (!next.allFinite()) {
        throw NonFiniteState("integration step produced a non-finite state");
    }
    return SimState::from_vector(next);
}

Crossing detect_threshold_crossing(double n_prev, double n_curr, double level) {
    if (n_prev < level && level <= n_curr) {
        return Crossing::upward;
    }
    if (n_curr < level && level <= n_prev) {
        return Crossing::downward;
    }
    return Crossing::none;
}

} // namespace mrpsim
