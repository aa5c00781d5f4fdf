#include "ainv/controller.hpp"

#include "ainv/error.hpp"

namespace ainv {

PolicyController PolicyController::make_static(PolicyParams params) {
    validate(params);
    PolicyController c;
    c.mode_ = PolicyMode::Static;
    c.params_ = params;
    return c;
}

PolicyController PolicyController::make_adaptive(PolicyParams initial, PosteriorState prior, int update_period,
                                                 OptimizerConfig optimizer, CostParams costs) {
    validate(initial);
    validate(prior);
    validate(optimizer);
    if (update_period < 1) throw ConfigError("update period must be >= 1");
    PolicyController c;
    c.mode_ = PolicyMode::Adaptive;
    c.params_ = initial;
    c.posterior_ = prior;
    c.update_period_ = update_period;
    c.optimizer_ = std::move(optimizer);
    c.costs_ = costs;
    return c;
}

bool PolicyController::reoptimizes_at(std::int64_t t) const {
    return mode_ == PolicyMode::Adaptive && t > 0 && t % update_period_ == 0;
}

void PolicyController::observe(std::int64_t demand, int disrupted, std::int64_t t, const SystemState& current,
                               RngStream& optimizer_rng) {
    if (t < 1) throw InvalidParameter("controller: period must be >= 1");
    if (mode_ == PolicyMode::Static) return;
    posterior_ = update_disruption(update_demand(posterior_, demand), disrupted);
    if (reoptimizes_at(t)) {
        params_ = optimize(posterior_, optimizer_, costs_, current, optimizer_rng).best;
        ++reoptimizations_;
    }
}

}  // namespace ainv
