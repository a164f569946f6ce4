#include "mrpsim/attitude.hpp"
#include "mrpsim/batch.hpp"
#include "mrpsim/errors.hpp"
#include "mrpsim/scenario.hpp"
#include "mrpsim/simulate.hpp"
#include "mrpsim/telemetry.hpp"

#include <pybind11/eigen.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

namespace py = pybind11;
using namespace mrpsim;

namespace {

py::array_t<double> column(const TrajectoryRecord& traj, double (*get)(const TrajectoryRow&)) {
    py::array_t<double> out(static_cast<py::ssize_t>(traj.rows.size()));
    auto view = out.mutable_unchecked<1>();
    for (py::ssize_t i = 0; i < view.shape(0); ++i) {
        view(i) = get(traj.rows[static_cast<std::size_t>(i)]);
    }
    return out;
}

py::array_t<double> matrix3(const TrajectoryRecord& traj, const Vec3& (*get)(const TrajectoryRow&)) {
    py::array_t<double> out({static_cast<py::ssize_t>(traj.rows.size()), py::ssize_t(3)});
    auto view = out.mutable_unchecked<2>();
    for (py::ssize_t i = 0; i < view.shape(0); ++i) {
        const Vec3& v = get(traj.rows[static_cast<std::size_t>(i)]);
        view(i, 0) = v.x();
        view(i, 1) = v.y();
        view(i, 2) = v.z();
    }
    return out;
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Rigid-spacecraft attitude dynamics under delayed feedback with "
              "MRP shadow-set switching";

    py::register_exception<SimError>(m, "SimError");

    // attitude algebra on plain 3-vectors
    m.def("skew", &skew, py::arg("v"), "Cross-product matrix of a 3-vector");
    m.def("shadow_map", [](const Vec3& s) { return shadow_map(Mrp(s)).v; }, py::arg("sigma"),
          "Alternate MRP set -sigma/|sigma|^2 for the same orientation");
    m.def("bmat", [](const Vec3& s) { return bmat(Mrp(s)); }, py::arg("sigma"),
          "Kinematic matrix B(sigma)");
    m.def("mrp_rate", [](const Vec3& s, const Vec3& w) { return mrp_rate(Mrp(s), w); },
          py::arg("sigma"), py::arg("omega"), "sigma_dot = B(sigma) omega / 4");
    m.def("mrp_from_principal",
          [](double phi_rad, const Vec3& axis) {
              return mrp_from_principal(PrincipalRotation(phi_rad, axis)).v;
          },
          py::arg("phi_rad"), py::arg("axis"));
    m.def("principal_from_mrp",
          [](const Vec3& s) {
              const PrincipalRotation pr = principal_from_mrp(Mrp(s));
              return py::make_tuple(pr.angle(), pr.axis());
          },
          py::arg("sigma"), "Returns (phi_rad, axis)");
    m.def("mrp_to_quaternion",
          [](const Vec3& s) {
              const UnitQuaternion q = mrp_to_quaternion(Mrp(s));
              return py::make_tuple(q.b0, q.b);
          },
          py::arg("sigma"), "Returns (b0, b)");
    m.def("quaternion_to_mrp",
          [](double b0, const Vec3& b) { return quaternion_to_mrp({b0, b}).v; },
          py::arg("b0"), py::arg("b"));

    py::class_<InertiaModel>(m, "InertiaModel")
        .def(py::init<const Mat3&>(), py::arg("matrix"))
        .def_static("diagonal", &InertiaModel::diagonal, py::arg("j1"), py::arg("j2"),
                    py::arg("j3"))
        .def_property_readonly("matrix", &InertiaModel::matrix)
        .def_property_readonly("inverse", &InertiaModel::inverse);

    m.def("euler_rate", &euler_rate, py::arg("omega"), py::arg("torque"), py::arg("inertia"));
    m.def("state_derivative",
          [](const Vec6& x, const Vec3& u, const InertiaModel& j) {
              return state_derivative(SimState::from_vector(x), u, j);
          },
          py::arg("x"), py::arg("torque"), py::arg("inertia"),
          "Right-hand side for the packed state [sigma, omega/4]");

    m.def("paper_gain", [] { return paper_gain().matrix(); },
          "Gain of the bundled reference scenarios, [-70.11 I | -163.08 I]");
    m.def("compose_gain",
          [](const Mat3& k1, const Mat3& k2, const InertiaModel& j) {
              return compose_gain(k1, k2, j).matrix();
          },
          py::arg("k1"), py::arg("k2"), py::arg("inertia"));
    m.def("control_torque",
          [](const Mat36& k, const Vec6& x) {
              return control_torque(GainMatrix(k), SimState::from_vector(x));
          },
          py::arg("gain"), py::arg("x_delayed"), "u = K x(t - tau)");

    py::class_<Scenario>(m, "Scenario")
        .def_property_readonly("name", [](const Scenario& s) { return s.name; })
        .def_property_readonly("tau", &Scenario::tau)
        .def_property_readonly("strategy", [](const Scenario& s) { return s.strategy.name(); })
        .def_property_readonly("horizon",
                               [](const Scenario& s) { return s.integrator.horizon; })
        .def_property_readonly("sample_rate",
                               [](const Scenario& s) { return s.integrator.sample_rate; })
        .def("initial_state", [](const Scenario& s) { return s.initial_state().as_vector(); })
        .def("__repr__", [](const Scenario& s) {
            std::ostringstream out;
            out << "Scenario(name='" << s.name << "', tau=" << s.tau() << ", strategy='"
                << s.strategy.name() << "')";
            return out.str();
        });

    m.def("parse_scenario", &parse_scenario, py::arg("text"),
          "Parse a scenario document (key = value lines)");
    m.def("bundled_scenario_documents",
          [] { return bundled_scenario_documents(); },
          "The five reference scenario documents, keyed by name");
    m.def("bundled_scenarios", &bundled_scenarios);

    py::class_<TrajectoryRecord>(m, "Trajectory")
        .def_property_readonly("t",
                               [](const TrajectoryRecord& r) {
                                   return column(r, +[](const TrajectoryRow& row) { return row.t; });
                               })
        .def_property_readonly("sigma",
                               [](const TrajectoryRecord& r) {
                                   return matrix3(r, +[](const TrajectoryRow& row) -> const Vec3& {
                                       return row.sigma;
                                   });
                               })
        .def_property_readonly("omega",
                               [](const TrajectoryRecord& r) {
                                   return matrix3(r, +[](const TrajectoryRow& row) -> const Vec3& {
                                       return row.omega;
                                   });
                               })
        .def_property_readonly("sigma_norm",
                               [](const TrajectoryRecord& r) {
                                   return column(r, +[](const TrajectoryRow& row) {
                                       return row.sigma_norm;
                                   });
                               })
        .def_property_readonly("torque",
                               [](const TrajectoryRecord& r) {
                                   return matrix3(r, +[](const TrajectoryRow& row) -> const Vec3& {
                                       return row.torque;
                                   });
                               })
        .def_property_readonly("active_set",
                               [](const TrajectoryRecord& r) {
                                   std::vector<int> flags;
                                   flags.reserve(r.rows.size());
                                   for (const auto& row : r.rows) {
                                       flags.push_back(row.active_set == ActiveSet::shadow);
                                   }
                                   return flags;
                               },
                               "0 = standard set, 1 = shadow set")
        .def_property_readonly("switch_times",
                               [](const TrajectoryRecord& r) {
                                   std::vector<double> t;
                                   t.reserve(r.switch_events.size());
                                   for (const auto& e : r.switch_events) {
                                       t.push_back(e.t);
                                   }
                                   return t;
                               })
        .def_property_readonly("switch_norms",
                               [](const TrajectoryRecord& r) {
                                   std::vector<std::pair<double, double>> n;
                                   n.reserve(r.switch_events.size());
                                   for (const auto& e : r.switch_events) {
                                       n.emplace_back(e.norm_before, e.norm_after);
                                   }
                                   return n;
                               },
                               "(norm_before, norm_after) per switch event")
        .def("__len__", [](const TrajectoryRecord& r) { return r.rows.size(); });

    m.def("simulate", &simulate, py::arg("scenario"),
          py::call_guard<py::gil_scoped_release>(),
          "Integrate the closed-loop delay differential equation");

    py::class_<ChatterMetrics>(m, "ChatterMetrics")
        .def_readonly("total_switches", &ChatterMetrics::total_switches)
        .def_readonly("max_window_rate", &ChatterMetrics::max_window_rate)
        .def_readonly("min_interswitch", &ChatterMetrics::min_interswitch)
        .def_readonly("alternation_persistent", &ChatterMetrics::alternation_persistent);
    m.def("chattering_metrics", &chattering_metrics, py::arg("trajectory"),
          py::arg("window") = 1.0);

    py::class_<RunSummary>(m, "RunSummary")
        .def_readonly("final_sigma_norm", &RunSummary::final_sigma_norm)
        .def_readonly("final_omega_norm", &RunSummary::final_omega_norm)
        .def_readonly("settling_time", &RunSummary::settling_time)
        .def_readonly("switch_count", &RunSummary::switch_count)
        .def_readonly("chattering", &RunSummary::chattering)
        .def_readonly("max_sigma_norm", &RunSummary::max_sigma_norm)
        .def_readonly("termination", &RunSummary::termination);
    m.def("summarize_run", &summarize_run, py::arg("trajectory"), py::arg("metrics"));

    m.def("write_trajectory_csv",
          [](const TrajectoryRecord& traj) {
              std::ostringstream out;
              write_trajectory_csv(traj, out);
              return out.str();
          },
          py::arg("trajectory"), "Telemetry CSV as a string");

#ifdef MRPSIM_VERSION
    m.attr("__version__") = MRPSIM_VERSION;
#else
    m.attr("__version__") = "dev";
#endif
}
