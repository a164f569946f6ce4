#pragma once

#include "mrpsim/attitude.hpp"
#include "mrpsim/controller.hpp"
#include "mrpsim/dynamics.hpp"
#include "mrpsim/integrator.hpp"
#include "mrpsim/switching.hpp"

#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace mrpsim {

/// Where the feedback gain comes from.
struct GainSpec {
    enum class Mode { paper, explicit_matrix, pd };
    Mode mode = Mode::paper;
    Mat36 matrix = Mat36::Zero(); // explicit_matrix mode
    Mat3 k1 = Mat3::Zero();       // pd mode
    Mat3 k2 = Mat3::Zero();
};

GainMatrix make_gain(const GainSpec& spec, const InertiaModel& inertia);

/// One run configuration: plant, initial state, controller, delay,
/// switching rule and integration settings.
struct Scenario {
    std::string name;
    InertiaModel inertia;
    std::variant<PrincipalRotation, Mrp> initial_attitude;
    Vec3 initial_omega{Vec3::Zero()};
    GainSpec gain;
    SwitchStrategy strategy;
    IntegratorConfig integrator; // integrator.tau is the feedback delay
    double blowup_bound = 100.0;
    std::optional<double> torque_limit; // per-axis saturation, off by default

    double tau() const { return integrator.tau; }
    Mrp initial_mrp() const;
    SimState initial_state() const;

    /// Throws ValidationError on any violated invariant.
    void validate() const;
};

/// Parses the flat key-value scenario document format. Unknown keys,
/// malformed numbers and duplicate keys raise ParseError with the line
/// number; semantic violations raise ValidationError.
Scenario parse_scenario(const std::string& text);

/// The five run configurations shipped with the repository, as documents
/// in the scenario file format, keyed by scenario name.
const std::map<std::string, std::string>& bundled_scenario_documents();

/// Parsed form of bundled_scenario_documents(), in fixed order.
std::vector<Scenario> bundled_scenarios();

} // namespace mrpsim
