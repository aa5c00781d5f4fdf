#include "ainv/harness.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>

#include "ainv/controller.hpp"
#include "ainv/error.hpp"

namespace ainv {

void validate(const ExperimentConfig& config) {
    if (config.n_reps < 2) throw ConfigError("experiment needs at least 2 replications for a paired t-test");
    if (config.horizon < 1) throw ConfigError("horizon must be >= 1");
    if (config.update_period < 1) throw ConfigError("update period must be >= 1");
    if (!(config.lead_time_p > 0.0 && config.lead_time_p <= 1.0)) {
        throw ConfigError("lead-time probability must lie in (0, 1]");
    }
    if (config.initial_on_hand && *config.initial_on_hand < 0) throw ConfigError("initial on-hand must be >= 0");
    validate(config.costs);
    validate(config.optimizer);
    try {
        validate(config.baseline);
        validate(config.prior);
    } catch (const InvalidParameter& e) {
        throw ConfigError(e.what());
    }
}

SystemState experiment_initial_state(const ExperimentConfig& config) {
    return initial_state(config.initial_on_hand.value_or(config.baseline.order_up_to));
}

MetricsSummary summarize(const std::vector<RunMetrics>& runs) {
    MetricsSummary s;
    if (runs.empty()) return s;
    for (const auto& r : runs) {
        s.total_cost += r.total_cost;
        s.cost_per_period += r.cost_per_period;
        s.period_service_level += r.period_service_level;
        s.fill_rate += r.fill_rate;
        s.avg_inventory += r.avg_inventory;
        s.stockout_events += static_cast<double>(r.stockout_events);
        s.holding_total += r.holding_total;
        s.stockout_total += r.stockout_total;
        s.ordering_total += r.ordering_total;
        s.disruptions_experienced += static_cast<double>(r.disruptions_experienced);
    }
    const auto n = static_cast<double>(runs.size());
    for (double* f : {&s.total_cost, &s.cost_per_period, &s.period_service_level, &s.fill_rate, &s.avg_inventory,
                      &s.stockout_events, &s.holding_total, &s.stockout_total, &s.ordering_total,
                      &s.disruptions_experienced}) {
        *f /= n;
    }
    return s;
}

namespace {

// Runs task(i) for i in [0, count) on a small pool; the first exception is rethrown.
template <class Task>
void parallel_for(std::size_t count, unsigned threads, Task&& task) {
    unsigned workers = threads ? threads : std::max(1u, std::thread::hardware_concurrency());
    workers = static_cast<unsigned>(std::min<std::size_t>(workers, count));
    if (workers <= 1) {
        for (std::size_t i = 0; i < count; ++i) task(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            for (std::size_t i = next++; i < count; i = next++) {
                try {
                    task(i);
                } catch (...) {
                    std::lock_guard lock(failure_mutex);
                    if (!failure) failure = std::current_exception();
                }
            }
        });
    }
    pool.clear();
    if (failure) std::rethrow_exception(failure);
}

}  // namespace

ComparisonResult run_experiment(const ScenarioSchedule& scenario, const ExperimentConfig& config) {
    validate(config);
    try {
        validate(scenario, config.horizon);
    } catch (const InvalidParameter& e) {
        throw ConfigError(std::string(to_string(scenario.name)) + ": " + e.what());
    }
    const auto reps = static_cast<std::size_t>(config.n_reps);
    const SystemState start = experiment_initial_state(config);
    const auto baseline = PolicyController::make_static(config.baseline);
    const auto adaptive = PolicyController::make_adaptive(config.baseline, config.prior, config.update_period,
                                                          config.optimizer, config.costs);
    const ScenarioSchedule reference = stationary();

    std::vector<SimulationResult> base_runs(reps), adapt_runs(reps);
    std::vector<RunMetrics> reference_runs(config.stationary_reference ? reps : 0);
    parallel_for(reps, config.threads, [&](std::size_t r) {
        base_runs[r] = run_simulation(config.horizon, start, scenario, baseline, config.costs, config.seed, r,
                                      config.lead_time_p);
        adapt_runs[r] = run_simulation(config.horizon, start, scenario, adaptive, config.costs, config.seed, r,
                                       config.lead_time_p);
        if (config.stationary_reference) {
            reference_runs[r] = run_simulation(config.horizon, start, reference, baseline, config.costs, config.seed,
                                               r, config.lead_time_p)
                                    .metrics;
        }
    });

    ComparisonResult out;
    out.scenario = std::string(to_string(scenario.name));
    out.n = config.n_reps;
    std::vector<double> differences;
    for (std::size_t r = 0; r < reps; ++r) {
        out.baseline_runs.push_back(base_runs[r].metrics);
        out.adaptive_runs.push_back(adapt_runs[r].metrics);
        differences.push_back(base_runs[r].metrics.total_cost - adapt_runs[r].metrics.total_cost);
        if (config.keep_traces) {
            out.baseline_traces.push_back(std::move(base_runs[r].trace));
            out.adaptive_traces.push_back(std::move(adapt_runs[r].trace));
        }
    }
    out.baseline_mean = summarize(out.baseline_runs);
    out.adaptive_mean = summarize(out.adaptive_runs);
    if (config.stationary_reference) out.stationary_baseline_mean = summarize(reference_runs);
    out.percent_change = out.baseline_mean.total_cost != 0.0
                             ? 100.0 * (out.baseline_mean.total_cost - out.adaptive_mean.total_cost) /
                                   out.baseline_mean.total_cost
                             : 0.0;
    out.service_level_change =
        100.0 * (out.adaptive_mean.period_service_level - out.baseline_mean.period_service_level);
    try {
        const auto test = paired_t_test(differences);
        out.mean_cost_difference = test.mean;
        out.t_statistic = test.t_statistic;
        out.p_value = test.p_value;
    } catch (const DegenerateSample&) {
        // Identical paired costs in every replication: no evidence of a difference.
        out.mean_cost_difference = differences.front();
        out.t_statistic = 0.0;
        out.p_value = 1.0;
    }
    return out;
}

std::vector<ComparisonResult> robustness_sweep(std::vector<double> magnitudes, const ExperimentConfig& config) {
    if (magnitudes.empty()) throw ConfigError("robustness sweep needs at least one shock magnitude");
    std::sort(magnitudes.begin(), magnitudes.end());
    std::vector<ComparisonResult> rows;
    for (double target : magnitudes) {
        auto row = run_experiment(shock_magnitude_variant(target), config);
        row.scenario = "demand-shock-" + format_rate(target);
        rows.push_back(std::move(row));
    }
    return rows;
}

std::vector<SensitivityVariation> default_sensitivity_variations() {
    std::vector<SensitivityVariation> v;
    v.push_back({"c_h=0.5", 0.5, {}, {}, {}});
    v.push_back({"c_h=2", 2.0, {}, {}, {}});
    v.push_back({"c_s=5", {}, 5.0, {}, {}});
    v.push_back({"c_s=20", {}, 20.0, {}, {}});
    v.push_back({"N=5", {}, {}, 5, {}});
    v.push_back({"N=10", {}, {}, 10, {}});
    v.push_back({"N=14", {}, {}, 14, {}});
    return v;
}

std::vector<SensitivityRow> sensitivity_sweep(const std::vector<SensitivityVariation>& variations,
                                              const std::vector<ScenarioSchedule>& scenarios,
                                              const ExperimentConfig& config) {
    std::vector<SensitivityRow> rows;
    for (const auto& variation : variations) {
        ExperimentConfig varied = config;
        if (variation.holding) varied.costs.holding = *variation.holding;
        if (variation.stockout) varied.costs.stockout = *variation.stockout;
        if (variation.update_period) varied.update_period = *variation.update_period;
        if (variation.prior) varied.prior = *variation.prior;
        for (const auto& scenario : scenarios) {
            SensitivityRow row;
            row.variation = variation.label;
            row.scenario = std::string(to_string(scenario.name));
            try {
                row.result = run_experiment(scenario, varied);
            } catch (const ConfigError& e) {
                row.error = e.what();
            } catch (const InvalidParameter& e) {
                row.error = e.what();
            }
            rows.push_back(std::move(row));
        }
    }
    return rows;
}

std::optional<std::int64_t> demand_estimate_crossing(const ScenarioSchedule& scenario, const PosteriorState& prior,
                                                     double threshold, std::uint64_t seed, std::uint64_t replication,
                                                     std::int64_t max_horizon) {
    RngStream demand_rng(seed, StreamId::Demand, replication);
    PosteriorState post = prior;
    for (std::int64_t t = 1; t <= max_horizon; ++t) {
        post = update_demand(post, sample_poisson(params_at(scenario, t).lambda, demand_rng));
        if (demand_mean(post) > threshold) return t;
    }
    return std::nullopt;
}

}  // namespace ainv
