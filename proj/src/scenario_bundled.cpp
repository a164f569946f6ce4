#include "mrpsim/scenario.hpp"

namespace mrpsim {

// One document per reference run. The same text ships as scenarios/*.scn;
// the copies here make the paper-suite verb independent of the working
// directory.
const std::map<std::string, std::string>& bundled_scenario_documents() {
    static const std::map<std::string, std::string> docs = {
        {"fig2_no_delay",
         R"(# Tumbling spacecraft, no measurement delay, switch on the current norm.
name = fig2_no_delay
inertia.diag = 140 100 80
initial.sigma = 0.93 0 0
initial.omega = 0.46 0 0
gain.mode = paper
tau = 0
strategy = point_current
integrator.sample_rate = 1000
integrator.horizon = 60
)"},
        {"fig3_delay_point_current",
         R"(# Delayed measurements; the switch still watches the current norm.
name = fig3_delay_point_current
inertia.diag = 140 100 80
initial.sigma = 0.93 0 0
initial.omega = 0.46 0 0
gain.mode = paper
tau = 0.5
strategy = point_current
integrator.sample_rate = 1000
integrator.horizon = 60
)"},
        {"fig45_delay_point_delayed",
         R"(# Delayed measurements and the switch watches the delayed norm,
# the latest information a real sensor provides.
name = fig45_delay_point_delayed
inertia.diag = 140 100 80
initial.sigma = 0.93 0 0
initial.omega = 0.46 0 0
gain.mode = paper
tau = 0.5
strategy = point_delayed
integrator.sample_rate = 1000
integrator.horizon = 60
)"},
        {"fig6_delay_no_switch",
         R"(# Delayed measurements, shadow switching disabled entirely.
name = fig6_delay_no_switch
inertia.diag = 140 100 80
initial.sigma = 0.93 0 0
initial.omega = 0.46 0 0
gain.mode = paper
tau = 0.5
strategy = none
integrator.sample_rate = 1000
integrator.horizon = 60
)"},
        {"fig7_delay_hysteretic",
         R"(# Delayed measurements with the boundary-layer switching rule.
name = fig7_delay_hysteretic
inertia.diag = 140 100 80
initial.sigma = 0.93 0 0
initial.omega = 0.46 0 0
gain.mode = paper
tau = 0.5
strategy = hysteretic
epsilon = 0.005
integrator.sample_rate = 1000
integrator.horizon = 60
)"},
    };
    return docs;
}

} // namespace mrpsim
