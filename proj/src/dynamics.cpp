#include "mrpsim/dynamics.hpp"

#include "mrpsim/errors.hpp"

#include <Eigen/Cholesky>
#include <cmath>

namespace mrpsim {

InertiaModel::InertiaModel(const Mat3& j) : j_(j) {
    if (!j.allFinite()) {
        throw ValidationError("inertia matrix must be finite");
    }
    const double scale = std::max(1.0, j.cwiseAbs().maxCoeff());
    if (((j - j.transpose()).cwiseAbs().maxCoeff()) > 1e-12 * scale) {
        throw ValidationError("inertia matrix must be symmetric");
    }
    Eigen::LLT<Mat3> llt(j);
    if (llt.info() != Eigen::Success) {
        throw ValidationError("inertia matrix must be positive definite");
    }
    j_inv_ = j.inverse();
}

InertiaModel InertiaModel::diagonal(double j1, double j2, double j3) {
    return InertiaModel(Mat3(Vec3(j1, j2, j3).asDiagonal()));
}

Vec6 SimState::as_vector() const {
    Vec6 x;
    x << sigma, omega_scaled;
    return x;
}

SimState SimState::from_vector(const Vec6& x) {
    return {x.head<3>(), x.tail<3>()};
}

bool SimState::all_finite() const {
    return sigma.allFinite() && omega_scaled.allFinite();
}

SimState pack_state(const Mrp& m, const Vec3& omega) {
    return {m.v, Vec3(0.25 * omega)};
}

std::pair<Mrp, Vec3> unpack_state(const SimState& x) {
    return {Mrp(x.sigma), x.omega()};
}

Vec3 euler_rate(const Vec3& omega, const Vec3& torque, const InertiaModel& inertia) {
    return inertia.inverse() * (torque - omega.cross(inertia.matrix() * omega));
}

Vec6 nonlinear_residual(const SimState& x, const InertiaModel& inertia) {
    Vec6 f;
    f.head<3>() = (bmat(Mrp(x.sigma)) - Mat3::Identity()) * x.omega_scaled;
    f.tail<3>() = -4.0 * (inertia.inverse() *
                          x.omega_scaled.cross(inertia.matrix() * x.omega_scaled));
    return f;
}

Vec6 state_derivative(const SimState& x, const Vec3& torque, const InertiaModel& inertia) {
    Vec6 dx = nonlinear_residual(x, inertia);
    dx.head<3>() += x.omega_scaled;                    // A x
    dx.tail<3>() += 0.25 * (inertia.inverse() * torque); // B u
    return dx;
}

} // namespace mrpsim
