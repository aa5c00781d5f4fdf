#include "ainv/inventory.hpp"

#include <algorithm>

#include "ainv/assert.hpp"
#include "ainv/error.hpp"

namespace ainv {

void validate(const CostParams& costs) {
    if (!(costs.holding >= 0.0) || !(costs.stockout >= 0.0) || !(costs.fixed_order >= 0.0)) {
        throw ConfigError("cost rates must be non-negative");
    }
    if (!(costs.stockout > costs.holding)) {
        throw ConfigError("stockout cost must exceed holding cost");
    }
}

SystemState initial_state(Units on_hand) {
    AINV_ASSERT(on_hand >= 0);
    return SystemState{1, on_hand, {}};
}

Units inventory_position(const SystemState& state) {
    Units position = state.on_hand;
    for (const auto& order : state.pipeline) position += order.quantity;
    return position;
}

std::pair<SystemState, PeriodRecord> advance_period(const SystemState& state, Units demand,
                                                    std::int64_t lead_time, bool disrupted,
                                                    const PolicyParams& policy, const CostParams& costs) {
    AINV_ASSERT(state.on_hand >= 0);
    AINV_ASSERT(demand >= 0);
    AINV_ASSERT(lead_time >= 1);

    const std::int64_t t = state.period;
    SystemState next;
    next.period = t + 1;
    next.pipeline.reserve(state.pipeline.size() + 1);

    PeriodRecord rec;
    rec.period = t;

    // 1. arrivals
    Units on_hand = state.on_hand;
    for (const auto& order : state.pipeline) {
        AINV_ASSERT(order.arrival_period >= t);
        if (order.arrival_period == t) {
            on_hand += order.quantity;
            rec.arrivals += order.quantity;
        } else {
            next.pipeline.push_back(order);
        }
    }

    // 2-3. demand and lost-sales fulfilment
    rec.demand = demand;
    rec.sales = std::min(on_hand, demand);
    rec.lost_units = demand - rec.sales;
    on_hand -= rec.sales;
    rec.on_hand_end = on_hand;

    // 5. reorder on inventory position (decided before costing so K lands in period t)
    Units position = on_hand;
    for (const auto& order : next.pipeline) position += order.quantity;
    const Units qty = decide_order(position, policy);
    rec.sampled_lead_time = lead_time;
    rec.disrupted = disrupted;
    rec.active_s = policy.reorder_point;
    rec.active_S = policy.order_up_to;
    if (qty > 0) {
        const std::int64_t effective = disrupted ? 2 * lead_time : lead_time;
        next.pipeline.push_back(PipelineOrder{qty, t + effective, disrupted});
        rec.order_qty = qty;
        rec.order_placed = true;
    }

    // 4. costs
    rec.holding_cost = costs.holding * static_cast<double>(rec.on_hand_end);
    rec.stockout_cost = costs.stockout * static_cast<double>(rec.lost_units);
    rec.ordering_cost = rec.order_placed ? costs.fixed_order : 0.0;
    rec.total_cost = rec.holding_cost + rec.stockout_cost + rec.ordering_cost;

    next.on_hand = on_hand;
    return {std::move(next), rec};
}

}  // namespace ainv
