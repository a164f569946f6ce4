#pragma once

#include "mrpsim/attitude.hpp"
#include "mrpsim/types.hpp"

#include <utility>

namespace mrpsim {

/// Rigid-body inertia tensor with its precomputed inverse. Immutable after
/// construction; any symmetric positive-definite matrix is accepted.
/// Units are SI throughout: kg m^2 for J, N m for torques, rad/s for rates.
class InertiaModel {
public:
    /// Validates symmetry and positive definiteness; throws ValidationError.
    explicit InertiaModel(const Mat3& j);
    InertiaModel() : InertiaModel(Mat3::Identity()) {}

    static InertiaModel diagonal(double j1, double j2, double j3);

    const Mat3& matrix() const { return j_; }
    const Mat3& inverse() const { return j_inv_; }

private:
    Mat3 j_;
    Mat3 j_inv_;
};

/// State vector x = [sigma, omega/4] of the parameterized attitude model.
struct SimState {
    Vec3 sigma{Vec3::Zero()};        // x1
    Vec3 omega_scaled{Vec3::Zero()}; // x2 = omega/4

    Vec3 omega() const { return 4.0 * omega_scaled; }
    double sigma_norm() const { return sigma.norm(); }

    Vec6 as_vector() const;
    static SimState from_vector(const Vec6& x);
    bool all_finite() const;
};

SimState pack_state(const Mrp& m, const Vec3& omega);
std::pair<Mrp, Vec3> unpack_state(const SimState& x);

/// Euler's equation: omega_dot = -J^-1 (omega x J omega) + J^-1 u.
Vec3 euler_rate(const Vec3& omega, const Vec3& torque, const InertiaModel& inertia);

/// The residual f(x) left after splitting off the linear blocks:
/// f1 = (B(x1) - I) x2,  f2 = -4 J^-1 (x2 x J x2).
Vec6 nonlinear_residual(const SimState& x, const InertiaModel& inertia);

/// Full right-hand side A x + B u + f(x) with A = [0 I; 0 0], B = [0; J^-1/4].
Vec6 state_derivative(const SimState& x, const Vec3& torque, const InertiaModel& inertia);

} // namespace mrpsim
