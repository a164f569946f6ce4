#include "mrpsim/attitude.hpp"

#include "mrpsim/errors.hpp"

#include <cmath>
#include <numbers>

namespace mrpsim {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;
} // namespace

PrincipalRotation::PrincipalRotation(double angle_rad, const Vec3& axis) {
    const double n = axis.norm();
    if (!(n > kZeroNormTolerance)) {
        throw ValidationError("principal rotation axis has zero length");
    }
    axis_ = axis / n;
    angle_ = std::fmod(angle_rad, kTwoPi);
    if (angle_ < 0.0) {
        angle_ += kTwoPi;
    }
}

double PrincipalRotation::angle_deg() const {
    return angle_ * 180.0 / std::numbers::pi;
}

double UnitQuaternion::constraint_defect() const {
    return std::abs(b0 * b0 + b.squaredNorm() - 1.0);
}

UnitQuaternion UnitQuaternion::normalized() const {
    const double n = std::sqrt(b0 * b0 + b.squaredNorm());
    if (!(n > kZeroNormTolerance)) {
        throw ValidationError("cannot normalize a zero quaternion");
    }
    return {b0 / n, Vec3(b / n)};
}

Mat3 skew(const Vec3& v) {
    Mat3 s;
    s << 0.0, -v.z(), v.y(),
         v.z(), 0.0, -v.x(),
         -v.y(), v.x(), 0.0;
    return s;
}

Mrp mrp_from_principal(const PrincipalRotation& pr, double singular_tol) {
    if (pr.angle() > kTwoPi - singular_tol) {
        throw SingularRotation("principal angle within tolerance of 360 deg");
    }
    return Mrp(Vec3(std::tan(pr.angle() / 4.0) * pr.axis()));
}

PrincipalRotation principal_from_mrp(const Mrp& m) {
    const double n = m.norm();
    if (n <= kZeroNormTolerance) {
        return PrincipalRotation(0.0, Vec3::UnitX());
    }
    return PrincipalRotation(4.0 * std::atan(n), Vec3(m.v / n));
}

Mrp shadow_map(const Mrp& m, double zero_tol) {
    const double n2 = m.squared_norm();
    if (n2 <= zero_tol * zero_tol) {
        throw ZeroNormMrp("shadow set of the zero MRP is undefined");
    }
    return Mrp(Vec3(-m.v / n2));
}

Mat3 bmat(const Mrp& m) {
    return (1.0 - m.squared_norm()) * Mat3::Identity() + 2.0 * skew(m.v) +
           2.0 * m.v * m.v.transpose();
}

Vec3 mrp_rate(const Mrp& m, const Vec3& omega) {
    return 0.25 * bmat(m) * omega;
}

UnitQuaternion mrp_to_quaternion(const Mrp& m) {
    const double s2 = m.squared_norm();
    const double denom = 1.0 + s2;
    return {(1.0 - s2) / denom, Vec3(2.0 * m.v / denom)};
}

Mrp quaternion_to_mrp(const UnitQuaternion& q, double singular_tol) {
    if (q.constraint_defect() > 1e-6) {
        throw ValidationError("quaternion does not satisfy the unit constraint");
    }
    const double denom = 1.0 + q.b0;
    if (denom < singular_tol) {
        throw SingularProjection("projection is singular at b0 = -1");
    }
    return Mrp(Vec3(q.b / denom));
}

} // namespace mrpsim
