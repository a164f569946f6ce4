#pragma once

#include "mrpsim/dynamics.hpp"

#include <deque>

namespace mrpsim {

/// Sampled record of past states over the last delay window: the delayed
/// "sensor" stream. Samples arrive at a fixed spacing dt; anything older
/// than tau + dt may be discarded. Times before the first sample are
/// answered by the constant initial function phi(theta) = x(0).
class HistoryBuffer {
public:
    HistoryBuffer(const SimState& initial_state, double dt, double tau);

    /// Appends a sample; timestamps must advance by exactly dt
    /// (within 1e-9 dt).
    void append(double t, const SimState& x);

    /// State at t_query: the initial function for t_query < 0, the stored
    /// sample on an exact hit, linear interpolation in between.
    /// Throws QueryTooOld below the retained window and out_of_range
    /// ahead of the newest sample.
    SimState lookup(double t_query) const;

    const SimState& initial_state() const { return initial_; }
    bool empty() const { return samples_.empty(); }
    double newest_time() const;
    std::size_t size() const { return samples_.size(); }
    std::size_t capacity() const { return capacity_; }

private:
    struct Sample {
        double t;
        SimState x;
    };

    SimState initial_;
    double dt_;
    double tau_;
    std::size_t capacity_;
    std::deque<Sample> samples_;
};

} // namespace mrpsim
