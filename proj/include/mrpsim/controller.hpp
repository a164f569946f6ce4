#pragma once

#include "mrpsim/dynamics.hpp"
#include "mrpsim/types.hpp"

#include <utility>

namespace mrpsim {

/// Feedback gain K, a 3x6 matrix partitioned as [K_pos | K_vel].
class GainMatrix {
public:
    GainMatrix() { k_.setZero(); }
    explicit GainMatrix(const Mat36& k);

    const Mat36& matrix() const { return k_; }
    Mat3 position_block() const { return k_.leftCols<3>(); }
    Mat3 velocity_block() const { return k_.rightCols<3>(); }

private:
    Mat36 k_;
};

/// K = [4 J k1 | J k2] from the two 3x3 design gains.
GainMatrix compose_gain(const Mat3& k1, const Mat3& k2, const InertiaModel& inertia);

/// Inverse of compose_gain: k1 = J^-1 K_pos / 4, k2 = J^-1 K_vel.
std::pair<Mat3, Mat3> decompose_gain(const GainMatrix& gain, const InertiaModel& inertia);

/// The fixed gain used by the bundled reference scenarios:
/// K = [-70.11 I | -163.08 I].
GainMatrix paper_gain();

/// Delayed state feedback u = K x(t - tau); the caller supplies the
/// delayed sample.
Vec3 control_torque(const GainMatrix& gain, const SimState& x_delayed);

/// Per-axis actuator limit (three orthogonal actuators). Off by default in
/// every scenario; runs opt in through Scenario::torque_limit.
Vec3 saturate_torque(const Vec3& torque, double limit);

} // namespace mrpsim
