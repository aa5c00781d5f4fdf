#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "ainv/policies.hpp"

namespace ainv {

/// Cost rates. Table defaults: c_h = 1, c_s = 10, K = 5.
struct CostParams {
    double holding = 1.0;      // per unit per period, on end-of-period stock
    double stockout = 10.0;    // per unit of lost demand
    double fixed_order = 5.0;  // per order placed

    friend bool operator==(const CostParams&, const CostParams&) = default;
};

/// Throws ConfigError unless all rates are >= 0 and stockout > holding.
void validate(const CostParams& costs);

struct PipelineOrder {
    Units quantity = 0;
    std::int64_t arrival_period = 0;
    bool disrupted = false;

    friend bool operator==(const PipelineOrder&, const PipelineOrder&) = default;
};

/// Start-of-period system state. Pipeline orders have arrival_period >= period.
struct SystemState {
    std::int64_t period = 1;
    Units on_hand = 0;
    std::vector<PipelineOrder> pipeline;

    friend bool operator==(const SystemState&, const SystemState&) = default;
};

/// Default initial state: full stock at the order-up-to level, nothing in transit.
SystemState initial_state(Units on_hand);

Units inventory_position(const SystemState& state);

/// One row of a simulation trace. Field order is the trace CSV column order.
struct PeriodRecord {
    std::int64_t period = 0;
    double lambda_true = 0.0;
    double alpha_true = 0.0;
    Units demand = 0;
    Units sales = 0;
    Units lost_units = 0;
    Units on_hand_end = 0;
    Units order_qty = 0;
    bool order_placed = false;
    std::int64_t sampled_lead_time = 0;
    bool disrupted = false;
    Units active_s = 0;
    Units active_S = 0;
    std::optional<double> lambda_hat;
    std::optional<double> alpha_hat;
    double holding_cost = 0.0;
    double stockout_cost = 0.0;
    double ordering_cost = 0.0;
    double total_cost = 0.0;

    // Not part of the CSV schema: stock received at the start of the period.
    Units arrivals = 0;

    friend bool operator==(const PeriodRecord&, const PeriodRecord&) = default;
};

/**
 * Executes one period: arrivals, demand, sales (lost-sales), cost accrual,
 * then the reorder decision on inventory position. A disrupted period doubles
 * the lead time of the order placed in it. Returns the next start-of-period
 * state and the period's record (scenario and learner fields left blank).
 */
std::pair<SystemState, PeriodRecord> advance_period(const SystemState& state, Units demand,
                                                    std::int64_t lead_time, bool disrupted,
                                                    const PolicyParams& policy, const CostParams& costs);

}  // namespace ainv
