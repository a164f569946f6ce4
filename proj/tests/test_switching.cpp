#include "mrpsim/attitude.hpp"
#include "mrpsim/errors.hpp"
#include "mrpsim/switching.hpp"

#include <doctest.h>

#include <random>
#include <vector>

using namespace mrpsim;

namespace {

int feed(SwitchMachine& m, const std::vector<double>& norms) {
    int switches = 0;
    for (double n : norms) {
        if (m.update(n) == SwitchDecision::do_switch) {
            ++switches;
        }
    }
    return switches;
}

TrajectoryRecord fixture(double horizon, const std::vector<double>& event_times) {
    TrajectoryRecord traj;
    const double dt = 0.1;
    for (long k = 0; k <= std::llround(horizon / dt); ++k) {
        TrajectoryRow row;
        row.t = k * dt;
        traj.rows.push_back(row);
    }
    for (double t : event_times) {
        traj.switch_events.push_back({t, 1.0, 1.0, Vec3::UnitX()});
    }
    return traj;
}

} // namespace

TEST_SUITE_BEGIN("switching");

TEST_CASE("monitored norm per strategy") {
    SimState current;
    current.sigma = Vec3(0, 0.6, 0.8);
    SimState delayed;
    delayed.sigma = Vec3(0.93, 0, 0);

    CHECK(monitored_norm(SwitchStrategy::point_delayed(), current, delayed) == 0.93);
    CHECK(monitored_norm(SwitchStrategy::point_current(), current, delayed) ==
          doctest::Approx(1.0).epsilon(1e-15));

    SimState shadowed = apply_shadow_switch(delayed);
    CHECK(monitored_norm(SwitchStrategy::hysteretic(0.005), current, shadowed) ==
          doctest::Approx(1.0 / 0.93).epsilon(1e-15));
    CHECK(monitored_norm(SwitchStrategy::none(), current, delayed) ==
          doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("point switching on the current norm fires on upward crossings only") {
    SwitchMachine m(SwitchStrategy::point_current());
    CHECK(feed(m, {0.9998, 1.0001, 0.95, 1.0002}) == 2);
    CHECK(m.switch_count() == 2);
}

TEST_CASE("point switching on the delayed norm fires on every crossing") {
    // The delayed stream replays recorded switches as jumps through 1, so
    // the downward pass counts too.
    SwitchMachine m(SwitchStrategy::point_delayed());
    CHECK(feed(m, {0.9998, 1.0001, 0.95, 1.0002}) == 3);
}

TEST_CASE("no-switch strategy never fires") {
    SwitchMachine m(SwitchStrategy::none());
    CHECK(feed(m, {0.5, 1.2, 0.7, 1.5, 0.9}) == 0);
}

TEST_CASE("hysteretic rule switches once per layer episode") {
    SwitchMachine m(SwitchStrategy::hysteretic(0.005));
    CHECK(m.armed());
    CHECK(m.update(0.999) == SwitchDecision::hold);
    CHECK(m.update(1.002) == SwitchDecision::do_switch); // entered from below
    CHECK_FALSE(m.armed());
    CHECK(m.update(1.003) == SwitchDecision::hold); // same episode, disarmed
    CHECK(m.update(1.004) == SwitchDecision::hold);
    CHECK(m.update(1.007) == SwitchDecision::hold); // exits above, re-arms
    CHECK(m.armed());
    CHECK(m.update(1.002) == SwitchDecision::hold); // re-entry from above
    CHECK(m.update(0.998) == SwitchDecision::hold); // exits below
    CHECK(m.update(1.001) == SwitchDecision::do_switch); // new episode
    CHECK(m.switch_count() == 2);
}

TEST_CASE("hysteretic rule treats a one-step traversal as an entry") {
    SwitchMachine m(SwitchStrategy::hysteretic(0.005));
    m.update(0.999);
    CHECK(m.update(1.05) == SwitchDecision::do_switch);
    CHECK_FALSE(m.armed());
    // post-switch monitored norm 1/1.05 sits below the layer
    CHECK(1.0 / 1.05 < 1.0);
    CHECK(m.update(1.06) == SwitchDecision::hold); // outside, re-arms
    CHECK(m.armed());
}

TEST_CASE("hysteretic strategy requires a positive layer thickness") {
    CHECK_THROWS_AS(SwitchStrategy::hysteretic(0.0), ValidationError);
    CHECK_THROWS_AS(SwitchStrategy::hysteretic(-0.1), ValidationError);
}

TEST_CASE("shadow switch changes sigma only") {
    const SimState x = pack_state(Mrp(0.93, 0, 0), Vec3(0.46, 0, 0));
    const SimState s = apply_shadow_switch(x);
    CHECK(s.sigma.x() == doctest::Approx(-1.0 / 0.93).epsilon(1e-15));
    CHECK(s.omega_scaled == x.omega_scaled);

    SimState unit;
    unit.sigma = Vec3(0, 0.6, 0.8);
    CHECK((apply_shadow_switch(unit).sigma + unit.sigma).norm() < 1e-15);

    const SimState twice = apply_shadow_switch(apply_shadow_switch(x));
    CHECK((twice.as_vector() - x.as_vector()).cwiseAbs().maxCoeff() < 1e-15);

    CHECK_THROWS_AS(apply_shadow_switch(SimState{}), ZeroNormMrp);
}

TEST_CASE("switches preserve the physical attitude") {
    std::mt19937 rng(5150);
    std::uniform_real_distribution<double> dist(-1.5, 1.5);
    for (int i = 0; i < 500; ++i) {
        SimState x;
        x.sigma = Vec3(dist(rng), dist(rng), dist(rng));
        if (x.sigma.norm() < 1e-2) {
            continue;
        }
        const UnitQuaternion qa = mrp_to_quaternion(Mrp(x.sigma));
        const UnitQuaternion qb = mrp_to_quaternion(Mrp(apply_shadow_switch(x).sigma));
        CHECK(std::abs(qa.b0 + qb.b0) < 1e-9);
        CHECK((qa.b + qb.b).norm() < 1e-9);
    }
}

TEST_CASE("chatter metrics on an empty event list") {
    const ChatterMetrics m = chattering_metrics(fixture(10.0, {}), 1.0);
    CHECK(m.total_switches == 0);
    CHECK(m.max_window_rate == 0);
    CHECK_FALSE(m.min_interswitch.has_value());
    CHECK_FALSE(m.alternation_persistent);
}

TEST_CASE("chatter metrics on a synthetic event list") {
    const ChatterMetrics m = chattering_metrics(fixture(10.0, {1.0, 1.5, 2.0}), 1.0);
    CHECK(m.total_switches == 3);
    CHECK(m.max_window_rate == 3);
    CHECK(m.min_interswitch == doctest::Approx(0.5).epsilon(1e-15));
    CHECK_FALSE(m.alternation_persistent); // nothing after t = 7.5

    const ChatterMetrics late = chattering_metrics(fixture(10.0, {1.0, 9.9}), 1.0);
    CHECK(late.alternation_persistent);
}

TEST_SUITE_END();
