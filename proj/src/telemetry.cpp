#include "mrpsim/telemetry.hpp"

#include "mrpsim/errors.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>

namespace mrpsim {

namespace {

// 9 significant digits, compact form; negative zero prints as plain zero.
std::string num(double v) {
    if (v == 0.0) {
        return "0";
    }
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.9g", v);
    return buf;
}

const char* set_name(ActiveSet s) {
    return s == ActiveSet::standard ? "standard" : "shadow";
}

} // namespace

void write_trajectory_csv(const TrajectoryRecord& traj, std::ostream& out) {
    out << "t,s1,s2,s3,w1,w2,w3,sigma_norm,u1,u2,u3,active_set\n";
    for (const TrajectoryRow& r : traj.rows) {
        out << num(r.t) << ',' << num(r.sigma.x()) << ',' << num(r.sigma.y()) << ','
            << num(r.sigma.z()) << ',' << num(r.omega.x()) << ',' << num(r.omega.y())
            << ',' << num(r.omega.z()) << ',' << num(r.sigma_norm) << ','
            << num(r.torque.x()) << ',' << num(r.torque.y()) << ',' << num(r.torque.z())
            << ',' << set_name(r.active_set) << '\n';
    }
}

void write_events_csv(const TrajectoryRecord& traj, const std::string& strategy_name,
                      std::ostream& out) {
    out << "t,norm_before,norm_after,strategy\n";
    for (const SwitchEvent& e : traj.switch_events) {
        out << num(e.t) << ',' << num(e.norm_before) << ',' << num(e.norm_after) << ','
            << strategy_name << '\n';
    }
}

void write_run_csvs(const TrajectoryRecord& traj, const std::string& strategy_name,
                    const std::filesystem::path& dir, const std::string& name) {
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    const auto write = [&](const std::filesystem::path& path, auto&& writer) {
        std::ofstream out(path);
        if (!out) {
            throw SimError("cannot open '" + path.string() + "' for writing");
        }
        writer(out);
        out.flush();
        if (!out) {
            throw SimError("failed while writing '" + path.string() + "'");
        }
    };
    write(dir / (name + ".csv"),
          [&](std::ostream& out) { write_trajectory_csv(traj, out); });
    write(dir / (name + "_events.csv"),
          [&](std::ostream& out) { write_events_csv(traj, strategy_name, out); });
}

RunSummary summarize_run(const TrajectoryRecord& traj, const ChatterMetrics& metrics) {
    RunSummary s;
    s.switch_count = metrics.total_switches;
    s.chattering = metrics.alternation_persistent;
    if (traj.rows.empty()) {
        return s;
    }
    const TrajectoryRow& last = traj.rows.back();
    s.final_sigma_norm = last.sigma_norm;
    s.final_omega_norm = last.omega.norm();

    bool any_violation = false;
    std::size_t last_violation = 0;
    for (std::size_t i = 0; i < traj.rows.size(); ++i) {
        const TrajectoryRow& r = traj.rows[i];
        s.max_sigma_norm = std::max(s.max_sigma_norm, r.sigma_norm);
        const double state_norm = std::sqrt(r.sigma.squaredNorm() +
                                            0.0625 * r.omega.squaredNorm());
        if (state_norm >= kSettlingThreshold) {
            any_violation = true;
            last_violation = i;
        }
    }
    if (!any_violation) {
        s.settling_time = traj.rows.front().t;
    } else if (last_violation + 1 < traj.rows.size()) {
        s.settling_time = traj.rows[last_violation + 1].t;
    }
    return s;
}

} // namespace mrpsim
