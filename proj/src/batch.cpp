#include "mrpsim/batch.hpp"

#include <atomic>
#include <thread>

namespace mrpsim {

RunResult run_scenario(const Scenario& scenario) {
    RunResult result;
    result.scenario_name = scenario.name;
    try {
        TrajectoryRecord traj = simulate(scenario);
        result.metrics = chattering_metrics(traj, kMetricsWindow);
        result.summary = summarize_run(traj, result.metrics);
        result.trajectory = std::move(traj);
        result.ok = true;
    } catch (const std::exception& e) {
        result.summary.termination = e.what();
        result.ok = false;
    }
    return result;
}

std::vector<RunResult> run_batch(const std::vector<Scenario>& scenarios,
                                 unsigned parallelism) {
    std::vector<RunResult> results(scenarios.size());
    if (scenarios.empty()) {
        return results;
    }
    const unsigned workers =
        std::max(1u, std::min<unsigned>(parallelism, static_cast<unsigned>(scenarios.size())));
    if (workers == 1) {
        for (std::size_t i = 0; i < scenarios.size(); ++i) {
            results[i] = run_scenario(scenarios[i]);
        }
        return results;
    }

    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            while (true) {
                const std::size_t i = next.fetch_add(1);
                if (i >= scenarios.size()) {
                    return;
                }
                results[i] = run_scenario(scenarios[i]);
            }
        });
    }
    for (std::thread& t : pool) {
        t.join();
    }
    return results;
}

} // namespace mrpsim
