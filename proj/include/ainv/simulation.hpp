#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "ainv/controller.hpp"
#include "ainv/inventory.hpp"
#include "ainv/scenarios.hpp"

namespace ainv {

/// Per-replication aggregates of a trace.
struct RunMetrics {
    double total_cost = 0.0;
    double cost_per_period = 0.0;
    double period_service_level = 1.0;  // share of periods with no lost units
    double fill_rate = 1.0;             // units sold / units demanded (1 with no demand)
    double avg_inventory = 0.0;         // mean end-of-period on-hand
    std::int64_t stockout_events = 0;
    double holding_total = 0.0;
    double stockout_total = 0.0;
    double ordering_total = 0.0;
    std::int64_t disruptions_experienced = 0;

    friend bool operator==(const RunMetrics&, const RunMetrics&) = default;
};

RunMetrics compute_metrics(std::span<const PeriodRecord> trace);

struct SimulationResult {
    RunMetrics metrics;
    std::vector<PeriodRecord> trace;
    int reoptimizations = 0;
};

/**
 * Runs periods 1..horizon. Each period draws demand, lead time and the
 * disruption flag from their own streams keyed by (seed, replication), lets
 * the controller observe the draws (and possibly re-optimize from the
 * start-of-period state), then advances the system with the controller's
 * current (s, S).
 */
SimulationResult run_simulation(std::int64_t horizon, const SystemState& initial, const ScenarioSchedule& scenario,
                                PolicyController controller, const CostParams& costs, std::uint64_t seed,
                                std::uint64_t replication, double lead_time_p = 0.8);

}  // namespace ainv
