#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ainv/inventory.hpp"
#include "ainv/learning.hpp"
#include "ainv/optimizer.hpp"
#include "ainv/policies.hpp"
#include "ainv/scenarios.hpp"
#include "ainv/simulation.hpp"
#include "ainv/stats.hpp"

namespace ainv {

/// Everything needed to run one baseline-vs-adaptive experiment.
struct ExperimentConfig {
    std::int64_t horizon = 365;
    int n_reps = 30;
    std::uint64_t seed = 20240601;
    CostParams costs;
    PolicyParams baseline;      // static (s, S), also the adaptive starting point
    PosteriorState prior;
    int update_period = 7;      // N
    OptimizerConfig optimizer;
    double lead_time_p = 0.8;
    std::optional<Units> initial_on_hand;  // defaults to baseline S
    bool stationary_reference = true;      // also run the baseline under the stationary schedule
    bool keep_traces = false;
    unsigned threads = 0;                  // 0: hardware concurrency
};

/// Throws ConfigError when any component is invalid or n_reps < 2.
void validate(const ExperimentConfig& config);

SystemState experiment_initial_state(const ExperimentConfig& config);

/// Replication means of RunMetrics; counts become real-valued averages.
struct MetricsSummary {
    double total_cost = 0.0;
    double cost_per_period = 0.0;
    double period_service_level = 0.0;
    double fill_rate = 0.0;
    double avg_inventory = 0.0;
    double stockout_events = 0.0;
    double holding_total = 0.0;
    double stockout_total = 0.0;
    double ordering_total = 0.0;
    double disruptions_experienced = 0.0;

    friend bool operator==(const MetricsSummary&, const MetricsSummary&) = default;
};

MetricsSummary summarize(const std::vector<RunMetrics>& runs);

struct ComparisonResult {
    std::string scenario;
    int n = 0;
    MetricsSummary baseline_mean;
    MetricsSummary adaptive_mean;
    std::optional<MetricsSummary> stationary_baseline_mean;
    double mean_cost_difference = 0.0;  // baseline - adaptive, paired mean
    double percent_change = 0.0;        // 100 * (baseline - adaptive) / baseline
    double service_level_change = 0.0;  // adaptive - baseline period service level, in points
    double t_statistic = 0.0;
    double p_value = 1.0;
    std::vector<RunMetrics> baseline_runs;
    std::vector<RunMetrics> adaptive_runs;
    std::vector<std::vector<PeriodRecord>> baseline_traces;  // only with keep_traces
    std::vector<std::vector<PeriodRecord>> adaptive_traces;
};

/**
 * Runs both policies for replications 0..n_reps-1 with common random numbers:
 * replication r of either policy draws demand, lead times and disruptions
 * from the same (seed, r) streams. The paired t-test is on per-replication
 * total cost, baseline minus adaptive. Replications may execute on several
 * threads; results are folded in replication order.
 */
ComparisonResult run_experiment(const ScenarioSchedule& scenario, const ExperimentConfig& config);

/// Demand-shock comparisons for each target rate, ordered by rate.
std::vector<ComparisonResult> robustness_sweep(std::vector<double> magnitudes, const ExperimentConfig& config);

/// One configuration variation; unset fields keep the base value.
struct SensitivityVariation {
    std::string label;
    std::optional<double> holding;
    std::optional<double> stockout;
    std::optional<int> update_period;
    std::optional<PosteriorState> prior;
};

/// c_h in {0.5, 2}, c_s in {5, 20}, N in {5, 10, 14}.
std::vector<SensitivityVariation> default_sensitivity_variations();

struct SensitivityRow {
    std::string variation;
    std::string scenario;
    std::optional<ComparisonResult> result;
    std::string error;  // set when the variation's config was rejected
};

std::vector<SensitivityRow> sensitivity_sweep(const std::vector<SensitivityVariation>& variations,
                                              const std::vector<ScenarioSchedule>& scenarios,
                                              const ExperimentConfig& config);

/// First period in 1..max_horizon at which the demand posterior mean exceeds
/// `threshold`, learning from the replication's demand stream (the same draws
/// run_simulation feeds the adaptive controller). Empty if never.
std::optional<std::int64_t> demand_estimate_crossing(const ScenarioSchedule& scenario, const PosteriorState& prior,
                                                     double threshold, std::uint64_t seed, std::uint64_t replication,
                                                     std::int64_t max_horizon);

}  // namespace ainv
