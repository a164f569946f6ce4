#pragma once

#include "mrpsim/types.hpp"

namespace mrpsim {

/// Modified Rodrigues parameter set sigma = tan(phi/4) * axis.
/// A plain 3-vector of dimensionless components; singular at phi = 360 deg.
struct Mrp {
    Vec3 v{Vec3::Zero()};

    Mrp() = default;
    Mrp(double s1, double s2, double s3) : v(s1, s2, s3) {}
    explicit Mrp(const Vec3& sigma) : v(sigma) {}

    double norm() const { return v.norm(); }
    double squared_norm() const { return v.squaredNorm(); }
};

/// Axis/angle attitude description. The angle is kept in the canonical
/// range [0, 2*pi) and the axis is stored unit length.
class PrincipalRotation {
public:
    /// Wraps the angle into [0, 2*pi) and normalizes the axis.
    /// Throws ValidationError when the axis has (near-)zero length.
    PrincipalRotation(double angle_rad, const Vec3& axis);
    PrincipalRotation() : angle_(0.0), axis_(Vec3::UnitX()) {}

    double angle() const { return angle_; }
    double angle_deg() const;
    const Vec3& axis() const { return axis_; }

private:
    double angle_;
    Vec3 axis_;
};

/// Euler parameter (quaternion) set, scalar part first. Used as the
/// singularity-free cross-check representation, never in the control path.
struct UnitQuaternion {
    double b0{1.0};
    Vec3 b{Vec3::Zero()};

    UnitQuaternion() = default;
    UnitQuaternion(double scalar, const Vec3& vec) : b0(scalar), b(vec) {}

    /// Deviation of b0^2 + |b|^2 from one.
    double constraint_defect() const;
    UnitQuaternion normalized() const;
    UnitQuaternion negated() const { return {-b0, -b}; }
};

/// Default guard widths for the singular inputs below; every entry point
/// taking one accepts an override.
inline constexpr double kZeroNormTolerance = 1e-12;
inline constexpr double kSingularAngleTolerance = 1e-9; // rad short of 2*pi

/// Cross-product matrix: skew(v) * w == v x w.
Mat3 skew(const Vec3& v);

/// sigma = tan(phi/4) * axis. Throws SingularRotation near phi = 2*pi.
Mrp mrp_from_principal(const PrincipalRotation& pr,
                       double singular_tol = kSingularAngleTolerance);

/// phi = 4*atan(|sigma|). The axis of the zero rotation is undefined;
/// [1,0,0] is returned by convention.
PrincipalRotation principal_from_mrp(const Mrp& m);

/// The alternate MRP set -sigma/|sigma|^2 describing the same orientation.
/// Throws ZeroNormMrp when |sigma| is (near-)zero.
Mrp shadow_map(const Mrp& m, double zero_tol = kZeroNormTolerance);

/// Kinematic matrix B(sigma) = (1 - s.s) I + 2 skew(s) + 2 s s^T.
Mat3 bmat(const Mrp& m);

/// MRP kinematics: sigma_dot = 1/4 B(sigma) omega.
Vec3 mrp_rate(const Mrp& m, const Vec3& omega);

/// Inverse stereographic map b0 = (1 - s.s)/(1 + s.s), b = 2 s/(1 + s.s).
UnitQuaternion mrp_to_quaternion(const Mrp& m);

/// Stereographic projection sigma = b/(1 + b0). Throws SingularProjection
/// at b0 = -1; callers should negate the quaternion there (shadow set).
Mrp quaternion_to_mrp(const UnitQuaternion& q, double singular_tol = kZeroNormTolerance);

} // namespace mrpsim
