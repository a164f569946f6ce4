#include "mrpsim/batch.hpp"
#include "mrpsim/errors.hpp"
#include "mrpsim/scenario.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace fs = std::filesystem;

namespace {

std::string read_file(const fs::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw mrpsim::SimError("cannot read scenario file '" + path.string() + "'");
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

void print_summary_header() {
    std::printf("%-28s %8s %12s %11s %12s %12s %10s %8s\n", "name", "switches",
                "first_switch", "settled_at", "final|sigma|", "final|omega|",
                "max|sigma|", "chatter");
}

void print_summary_row(const mrpsim::RunResult& r) {
    if (!r.ok) {
        std::printf("%-28s FAILED: %s\n", r.scenario_name.c_str(),
                    r.summary.termination.c_str());
        return;
    }
    const auto& events = r.trajectory->switch_events;
    const std::string first_switch = events.empty() ? "-" : fmt(events.front().t);
    const std::string settled =
        r.summary.settling_time ? fmt(*r.summary.settling_time) : "-";
    std::printf("%-28s %8d %12s %11s %12s %12s %10s %8s\n", r.scenario_name.c_str(),
                r.summary.switch_count, first_switch.c_str(), settled.c_str(),
                fmt(r.summary.final_sigma_norm).c_str(),
                fmt(r.summary.final_omega_norm).c_str(),
                fmt(r.summary.max_sigma_norm).c_str(),
                r.summary.chattering ? "yes" : "no");
}

int report(const std::vector<mrpsim::Scenario>& scenarios,
           const std::vector<mrpsim::RunResult>& results, const std::string& out_dir) {
    print_summary_header();
    bool all_ok = true;
    for (std::size_t i = 0; i < results.size(); ++i) {
        print_summary_row(results[i]);
        if (results[i].ok && !out_dir.empty()) {
            mrpsim::write_run_csvs(*results[i].trajectory, scenarios[i].strategy.name(),
                                   out_dir, results[i].scenario_name);
        }
        all_ok = all_ok && results[i].ok;
    }
    return all_ok ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Rigid-spacecraft attitude simulator with MRP shadow-set switching"};
    app.require_subcommand(1);

    std::string scenario_file;
    std::string scenario_dir;
    std::string out_dir = ".";
    unsigned jobs = 1;

    CLI::App* run = app.add_subcommand("run", "Run one scenario file");
    run->add_option("scenario-file", scenario_file, "Scenario document")->required();
    run->add_option("--out", out_dir, "Directory for telemetry CSV output");

    CLI::App* batch = app.add_subcommand("batch", "Run every *.scn scenario in a directory");
    batch->add_option("dir", scenario_dir, "Directory of scenario documents")->required();
    batch->add_option("--jobs", jobs, "Worker threads");
    batch->add_option("--out", out_dir, "Directory for telemetry CSV output");

    CLI::App* suite = app.add_subcommand(
        "paper-suite", "Run the five bundled reference scenarios and print the summary table");
    std::string suite_out;
    suite->add_option("--out", suite_out, "Also write telemetry CSVs to this directory");

    CLI11_PARSE(app, argc, argv);

    try {
        if (run->parsed()) {
            const mrpsim::Scenario sc = mrpsim::parse_scenario(read_file(scenario_file));
            const auto results = mrpsim::run_batch({sc}, 1);
            return report({sc}, results, out_dir);
        }
        if (batch->parsed()) {
            std::vector<fs::path> files;
            for (const auto& entry : fs::directory_iterator(scenario_dir)) {
                if (entry.is_regular_file() && entry.path().extension() == ".scn") {
                    files.push_back(entry.path());
                }
            }
            std::sort(files.begin(), files.end());
            if (files.empty()) {
                std::cerr << "no *.scn files in '" << scenario_dir << "'\n";
                return 1;
            }
            std::vector<mrpsim::Scenario> scenarios;
            scenarios.reserve(files.size());
            for (const auto& f : files) {
                scenarios.push_back(mrpsim::parse_scenario(read_file(f)));
            }
            const auto results = mrpsim::run_batch(scenarios, jobs);
            return report(scenarios, results, out_dir);
        }
        // paper-suite
        const auto scenarios = mrpsim::bundled_scenarios();
        const auto results = mrpsim::run_batch(scenarios, 1);
        return report(scenarios, results, suite_out);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
