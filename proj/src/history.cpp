#include "mrpsim/history.hpp"

#include "mrpsim/errors.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace mrpsim {

HistoryBuffer::HistoryBuffer(const SimState& initial_state, double dt, double tau)
    : initial_(initial_state), dt_(dt), tau_(tau) {
    if (!(dt > 0.0) || tau < 0.0) {
        throw ValidationError("history buffer requires dt > 0 and tau >= 0");
    }
    capacity_ = static_cast<std::size_t>(std::llround(tau / dt)) + 2;
}

void HistoryBuffer::append(double t, const SimState& x) {
    if (!samples_.empty()) {
        const double expected = samples_.back().t + dt_;
        if (std::abs(t - expected) > 1e-9 * dt_) {
            throw std::logic_error("history samples must be appended at fixed spacing dt");
        }
    }
    samples_.push_back({t, x});
    while (samples_.size() > capacity_) {
        samples_.pop_front();
    }
}

double HistoryBuffer::newest_time() const {
    if (samples_.empty()) {
        throw std::logic_error("history buffer holds no samples yet");
    }
    return samples_.back().t;
}

SimState HistoryBuffer::lookup(double t_query) const {
    // The initial function is constant and never expires.
    if (t_query < 0.0) {
        return initial_;
    }
    if (samples_.empty()) {
        throw std::out_of_range("history lookup before any sample was recorded");
    }
    const double newest = samples_.back().t;
    const double oldest = samples_.front().t;
    if (t_query < newest - tau_ - dt_ - 1e-9 * dt_ || t_query < oldest - 1e-9 * dt_) {
        throw QueryTooOld("history lookup at t=" + std::to_string(t_query) +
                          " is outside the retained window");
    }
    if (t_query > newest + 1e-9 * dt_) {
        throw std::out_of_range("history lookup ahead of the newest sample");
    }

    const double steps = (t_query - oldest) / dt_;
    const auto nearest = static_cast<std::size_t>(std::llround(steps));
    if (nearest < samples_.size() &&
        std::abs(t_query - samples_[nearest].t) <= 1e-9 * dt_) {
        return samples_[nearest].x; // exact hit, no interpolation
    }

    const auto lo = static_cast<std::size_t>(std::floor(steps));
    const auto hi = lo + 1;
    if (hi >= samples_.size()) {
        return samples_.back().x;
    }
    const Sample& a = samples_[lo];
    const Sample& b = samples_[hi];
    const double w = (t_query - a.t) / (b.t - a.t);
    SimState out;
    out.sigma = a.x.sigma + w * (b.x.sigma - a.x.sigma);
    out.omega_scaled = a.x.omega_scaled + w * (b.x.omega_scaled - a.x.omega_scaled);
    return out;
}

} // namespace mrpsim
