#include "ainv/simulation.hpp"

#include "ainv/assert.hpp"
#include "ainv/error.hpp"
#include "ainv/learning.hpp"

namespace ainv {

RunMetrics compute_metrics(std::span<const PeriodRecord> trace) {
    RunMetrics m;
    if (trace.empty()) return m;
    Units demand = 0, sales = 0, on_hand_sum = 0;
    for (const auto& r : trace) {
        m.holding_total += r.holding_cost;
        m.stockout_total += r.stockout_cost;
        m.ordering_total += r.ordering_cost;
        m.total_cost += r.total_cost;
        if (r.lost_units > 0) ++m.stockout_events;
        if (r.disrupted) ++m.disruptions_experienced;
        demand += r.demand;
        sales += r.sales;
        on_hand_sum += r.on_hand_end;
    }
    const auto n = static_cast<double>(trace.size());
    m.cost_per_period = m.total_cost / n;
    m.period_service_level = 1.0 - static_cast<double>(m.stockout_events) / n;
    m.fill_rate = demand == 0 ? 1.0 : static_cast<double>(sales) / static_cast<double>(demand);
    m.avg_inventory = static_cast<double>(on_hand_sum) / n;
    return m;
}

SimulationResult run_simulation(std::int64_t horizon, const SystemState& initial, const ScenarioSchedule& scenario,
                                PolicyController controller, const CostParams& costs, std::uint64_t seed,
                                std::uint64_t replication, double lead_time_p) {
    if (horizon < 1) throw InvalidParameter("horizon must be >= 1");
    if (initial.period != 1) throw InvalidParameter("initial state must be at period 1");
    RngStream demand_rng(seed, StreamId::Demand, replication);
    RngStream lead_rng(seed, StreamId::LeadTime, replication);
    RngStream disruption_rng(seed, StreamId::Disruption, replication);
    RngStream optimizer_rng(seed, StreamId::Optimizer, replication);

    SimulationResult result;
    result.trace.reserve(static_cast<std::size_t>(horizon));
    SystemState state = initial;
    for (std::int64_t t = 1; t <= horizon; ++t) {
        AINV_ASSERT(state.period == t);
        const auto truth = params_at(scenario, t);
        const auto demand = sample_poisson(truth.lambda, demand_rng);
        const auto lead = sample_lead_time(lead_time_p, lead_rng);
        const int disrupted = sample_bernoulli(truth.alpha, disruption_rng);

        controller.observe(demand, disrupted, t, state, optimizer_rng);

        auto [next, rec] = advance_period(state, demand, lead, disrupted != 0, controller.params(), costs);
        rec.lambda_true = truth.lambda;
        rec.alpha_true = truth.alpha;
        if (controller.mode() == PolicyMode::Adaptive) {
            rec.lambda_hat = demand_mean(controller.posterior());
            rec.alpha_hat = disruption_mean(controller.posterior());
        }
        result.trace.push_back(rec);
        state = std::move(next);
    }
    result.metrics = compute_metrics(result.trace);
    result.reoptimizations = controller.reoptimizations();
    return result;
}

}  // namespace ainv
