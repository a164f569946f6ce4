#include "mrpsim/controller.hpp"

#include "mrpsim/errors.hpp"

namespace mrpsim {

GainMatrix::GainMatrix(const Mat36& k) : k_(k) {
    if (!k.allFinite()) {
        throw ValidationError("gain matrix must be finite");
    }
}

GainMatrix compose_gain(const Mat3& k1, const Mat3& k2, const InertiaModel& inertia) {
    Mat36 k;
    k.leftCols<3>() = 4.0 * inertia.matrix() * k1;
    k.rightCols<3>() = inertia.matrix() * k2;
    return GainMatrix(k);
}

std::pair<Mat3, Mat3> decompose_gain(const GainMatrix& gain, const InertiaModel& inertia) {
    return {Mat3(0.25 * inertia.inverse() * gain.position_block()),
            Mat3(inertia.inverse() * gain.velocity_block())};
}

GainMatrix paper_gain() {
    Mat36 k;
    k.leftCols<3>() = -70.11 * Mat3::Identity();
    k.rightCols<3>() = -163.08 * Mat3::Identity();
    return GainMatrix(k);
}

Vec3 control_torque(const GainMatrix& gain, const SimState& x_delayed) {
    return gain.matrix() * x_delayed.as_vector();
}

Vec3 saturate_torque(const Vec3& torque, double limit) {
    if (!(limit > 0.0)) {
        throw ValidationError("torque limit must be positive");
    }
    return torque.cwiseMax(-limit).cwiseMin(limit);
}

} // namespace mrpsim
