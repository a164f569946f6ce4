#include "mrpsim/simulate.hpp"

#include "mrpsim/errors.hpp"
#include "mrpsim/history.hpp"
#include "mrpsim/integrator.hpp"

#include <string>

namespace mrpsim {

TrajectoryRecord simulate(const Scenario& scenario) {
    scenario.validate();
    const IntegratorConfig& cfg = scenario.integrator;
    const double dt = cfg.dt();
    const long n_steps = cfg.total_steps();
    const long delay_steps = cfg.delay_steps();

    const InertiaModel& inertia = scenario.inertia;
    const GainMatrix gain = make_gain(scenario.gain, inertia);
    SimState x = scenario.initial_state();

    HistoryBuffer history(x, dt, cfg.tau);
    SwitchMachine machine(scenario.strategy);
    ActiveSet active = ActiveSet::standard;

    TrajectoryRecord out;
    out.rows.reserve(static_cast<std::size_t>(n_steps) + 1);

    for (long k = 0; k <= n_steps; ++k) {
        const double t = static_cast<double>(k) * dt;
        if (!x.all_finite()) {
            throw NonFiniteState("state became non-finite at t=" + std::to_string(t));
        }
        if (x.sigma_norm() > scenario.blowup_bound) {
            throw SingularMrp("|sigma| exceeded the blow-up bound " +
                              std::to_string(scenario.blowup_bound) + " at t=" +
                              std::to_string(t));
        }

        // With zero delay the monitored "delayed" sample is the current
        // state itself, which is not in the history yet.
        const SimState monitored_sample =
            (scenario.strategy.monitors_delayed() && delay_steps > 0)
                ? history.lookup(t - cfg.tau)
                : x;
        const double monitored = monitored_norm(scenario.strategy, x, monitored_sample);

        if (machine.update(monitored) == SwitchDecision::do_switch) {
            SwitchEvent event;
            event.t = t;
            event.sigma_before = x.sigma;
            event.norm_before = x.sigma_norm();
            x = apply_shadow_switch(x);
            event.norm_after = x.sigma_norm();
            out.switch_events.push_back(event);
            active = active == ActiveSet::standard ? ActiveSet::shadow
                                                   : ActiveSet::standard;
        }

        // Appending first makes the tau = 0 lookup below resolve to the
        // state recorded at this very step.
        history.append(t, x);
        Vec3 torque = control_torque(gain, history.lookup(t - cfg.tau));
        if (scenario.torque_limit) {
            torque = saturate_torque(torque, *scenario.torque_limit);
        }
        out.rows.push_back({t, x.sigma, x.omega(), x.sigma_norm(), torque, active});

        if (k < n_steps) {
            x = rk4_step(x, torque, dt, inertia);
        }
    }
    return out;
}

} // namespace mrpsim
