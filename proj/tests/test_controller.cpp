#include "mrpsim/controller.hpp"
#include "mrpsim/errors.hpp"

#include <doctest.h>

#include <complex>
#include <random>

using namespace mrpsim;

namespace {

std::mt19937 rng(77113);

Vec6 random_state() {
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    Vec6 x;
    for (int i = 0; i < 6; ++i) {
        x(i) = dist(rng);
    }
    return x;
}

const InertiaModel kPlant = InertiaModel::diagonal(140, 100, 80);

// Analytic solution of sdd = a*sd + b*s with s(0)=s0, sd(0)=v0 via the
// (possibly complex) characteristic roots.
double second_order_solution(double a, double b, double s0, double v0, double t) {
    using cd = std::complex<double>;
    const cd disc = std::sqrt(cd(a * a + 4.0 * b, 0.0));
    const cd l1 = 0.5 * (cd(a, 0) + disc);
    const cd l2 = 0.5 * (cd(a, 0) - disc);
    const cd c2 = (cd(v0, 0) - l1 * s0) / (l2 - l1);
    const cd c1 = cd(s0, 0) - c2;
    return (c1 * std::exp(l1 * t) + c2 * std::exp(l2 * t)).real();
}

} // namespace

TEST_SUITE_BEGIN("controller");

TEST_CASE("compose gain") {
    CHECK(compose_gain(Mat3::Zero(), Mat3::Zero(), kPlant).matrix().isZero(0.0));

    // inverting the composition recovers the fixed reference gain
    const Mat3 k1 = -(70.11 / 4.0) * kPlant.inverse();
    const Mat3 k2 = -163.08 * kPlant.inverse();
    CHECK((compose_gain(k1, k2, kPlant).matrix() - paper_gain().matrix())
              .cwiseAbs()
              .maxCoeff() < 1e-12);
}

TEST_CASE("compose then decompose is the identity") {
    std::uniform_real_distribution<double> dist(-2.0, 2.0);
    for (int i = 0; i < 100; ++i) {
        Mat3 r;
        for (int k = 0; k < 9; ++k) {
            r(k / 3, k % 3) = dist(rng);
        }
        const InertiaModel j(Mat3(r * r.transpose() + 3.0 * Mat3::Identity()));
        Mat3 k1, k2;
        for (int k = 0; k < 9; ++k) {
            k1(k / 3, k % 3) = dist(rng);
            k2(k / 3, k % 3) = dist(rng);
        }
        const auto [r1, r2] = decompose_gain(compose_gain(k1, k2, j), j);
        CHECK((r1 - k1).cwiseAbs().maxCoeff() < 1e-10);
        CHECK((r2 - k2).cwiseAbs().maxCoeff() < 1e-10);
    }
}

TEST_CASE("reference gain entries") {
    const Mat36 k = paper_gain().matrix();
    Eigen::Matrix<double, 1, 6> row1;
    row1 << -70.11, 0, 0, -163.08, 0, 0;
    CHECK(k.row(0) == row1);
    CHECK(paper_gain().position_block().isApprox(-70.11 * Mat3::Identity(), 0.0));
    CHECK(k(2, 5) == -163.08);
}

TEST_CASE("control torque") {
    CHECK(control_torque(paper_gain(), SimState{}).norm() == 0.0);

    const SimState x = pack_state(Mrp(0.93, 0, 0), Vec3(0.46, 0, 0));
    const Vec3 u = control_torque(paper_gain(), x);
    CHECK(u.x() == doctest::Approx(-83.9565).epsilon(1e-12));
    CHECK(u.y() == 0.0);
    CHECK(u.z() == 0.0);

    SimState col;
    col.sigma = Vec3::UnitY();
    CHECK(control_torque(paper_gain(), col).isApprox(Vec3(0, -70.11, 0), 1e-15));
}

TEST_CASE("torque saturation clamps per axis") {
    const Vec3 u(-83.9565, 20.0, 50.0);
    CHECK(saturate_torque(u, 40.0) == Vec3(-40.0, 20.0, 40.0));
    CHECK(saturate_torque(u, 1000.0) == u); // wide limit is a no-op
    CHECK_THROWS_AS(saturate_torque(u, 0.0), ValidationError);
}

TEST_CASE("control torque is linear") {
    std::uniform_real_distribution<double> dist(-3.0, 3.0);
    for (int i = 0; i < 200; ++i) {
        const Vec6 x = random_state();
        const Vec6 y = random_state();
        const double a = dist(rng);
        const double b = dist(rng);
        const Vec3 lhs = control_torque(paper_gain(), SimState::from_vector(a * x + b * y));
        const Vec3 rhs = a * control_torque(paper_gain(), SimState::from_vector(x)) +
                         b * control_torque(paper_gain(), SimState::from_vector(y));
        CHECK((lhs - rhs).norm() < 1e-12 * std::max(1.0, rhs.norm()));
    }
}

TEST_CASE("closed loop on the linearized model matches the per-axis analytic solution") {
    // Linearized plant sdot = w/4, wdot = J^-1 u with u = K x. With
    // (K1, K2) = decompose_gain(K), each axis obeys sdd = K1 s + (K2/4) sd.
    const GainMatrix gain = paper_gain();
    const auto [k1, k2] = decompose_gain(gain, kPlant);

    const Vec3 s0(0.1, -0.2, 0.25);
    const Vec3 w0(0.05, 0.0, -0.1);
    Vec6 y;
    y << s0, 0.25 * w0;

    const auto rate = [&](const Vec6& v) {
        Vec6 d;
        d.head<3>() = v.tail<3>();
        d.tail<3>() = 0.25 * (kPlant.inverse() * (gain.matrix() * v));
        return d;
    };

    const double dt = 1e-3;
    for (int step = 1; step <= 5000; ++step) {
        const Vec6 k1v = rate(y);
        const Vec6 k2v = rate(y + 0.5 * dt * k1v);
        const Vec6 k3v = rate(y + 0.5 * dt * k2v);
        const Vec6 k4v = rate(y + dt * k3v);
        y += (dt / 6.0) * (k1v + 2.0 * k2v + 2.0 * k3v + k4v);
        if (step % 500 == 0) {
            const double t = step * dt;
            for (int axis = 0; axis < 3; ++axis) {
                const double expected = second_order_solution(
                    0.25 * k2(axis, axis), k1(axis, axis), s0(axis), 0.25 * w0(axis), t);
                CHECK(std::abs(y(axis) - expected) < 1e-6);
            }
        }
    }
}

TEST_SUITE_END();
