#include "ainv/optimizer.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "ainv/error.hpp"

namespace ainv {

void validate(const OptimizerConfig& config) {
    if (config.num_samples < 1) throw ConfigError("optimizer: num_samples must be >= 1");
    if (config.planning_horizon < 1) throw ConfigError("optimizer: planning_horizon must be >= 1");
    if (!(config.lead_time_p > 0.0 && config.lead_time_p <= 1.0)) {
        throw ConfigError("optimizer: lead-time probability must lie in (0, 1]");
    }
    if (config.grid.empty()) throw ConfigError("optimizer: candidate grid is empty");
    for (const auto& p : config.grid) {
        if (p.reorder_point < 0 || p.reorder_point >= p.order_up_to) {
            throw ConfigError("optimizer: grid pair (" + std::to_string(p.reorder_point) + ", " +
                              std::to_string(p.order_up_to) + ") violates 0 <= s < S");
        }
    }
}

std::vector<PolicyParams> make_grid(Units s_min, Units s_max, Units S_max, Units step) {
    if (step <= 0 || s_min < 0 || s_max < s_min) throw ConfigError("grid bounds are invalid");
    std::vector<PolicyParams> grid;
    for (Units s = s_min; s <= s_max; s += step) {
        for (Units S = s + step; S <= S_max; S += step) grid.push_back({s, S});
    }
    return grid;
}

std::vector<PolicyParams> default_grid() { return make_grid(0, 60, 120, 5); }

ScenarioPath draw_path(double lambda, double alpha, int horizon, double lead_time_p, RngStream& rng) {
    const PoissonSampler poisson(lambda);
    ScenarioPath path;
    path.demand.resize(static_cast<std::size_t>(horizon));
    path.effective_lead.resize(static_cast<std::size_t>(horizon));
    for (std::size_t h = 0; h < path.demand.size(); ++h) {
        path.demand[h] = static_cast<std::int32_t>(poisson(rng));
        const auto lead = sample_lead_time(lead_time_p, rng);
        const int disrupted = sample_bernoulli(alpha, rng);
        path.effective_lead[h] = static_cast<std::int32_t>(disrupted ? 2 * lead : lead);
    }
    return path;
}

namespace {

// Outstanding stock at the start of an inner run, bucketed by arrival offset.
struct StartLoad {
    Units on_hand = 0;
    Units on_order = 0;
    std::vector<Units> arrivals;  // arrivals[h] lands at the start of inner period h
};

StartLoad make_start_load(const SystemState& state, int horizon) {
    StartLoad load;
    load.on_hand = state.on_hand;
    load.arrivals.assign(static_cast<std::size_t>(horizon), 0);
    for (const auto& order : state.pipeline) {
        load.on_order += order.quantity;
        const auto offset = order.arrival_period - state.period;
        if (offset >= 0 && offset < horizon) load.arrivals[static_cast<std::size_t>(offset)] += order.quantity;
    }
    return load;
}

struct PathTotals {
    Units held = 0;
    Units lost = 0;
    Units orders = 0;
};

// Same event order as advance_period, with per-period integer tallies.
// `arrivals` has one extra trailing slot that absorbs orders due past the horizon.
PathTotals run_path(const PolicyParams& params, const ScenarioPath& path, const StartLoad& load,
                    std::vector<Units>& arrivals) {
    const auto horizon = static_cast<std::int64_t>(path.demand.size());
    std::copy(load.arrivals.begin(), load.arrivals.end(), arrivals.begin());
    arrivals[static_cast<std::size_t>(horizon)] = 0;
    Units on_hand = load.on_hand;
    Units on_order = load.on_order;
    PathTotals totals;
    const Units s = params.reorder_point;
    const Units S = params.order_up_to;
    const std::int32_t* demand = path.demand.data();
    const std::int32_t* lead = path.effective_lead.data();
    Units* due_at = arrivals.data();
    for (std::int64_t h = 0; h < horizon; ++h) {
        const Units arriving = due_at[h];
        on_hand += arriving;
        on_order -= arriving;
        const Units d = demand[h];
        totals.lost += std::max<Units>(d - on_hand, 0);
        on_hand = std::max<Units>(on_hand - d, 0);
        totals.held += on_hand;
        const Units position = on_hand + on_order;
        const Units qty = position <= s ? S - position : 0;
        totals.orders += qty > 0;
        on_order += qty;
        due_at[std::min<std::int64_t>(h + lead[h], horizon)] += qty;
    }
    return totals;
}

double cost_of(const PathTotals& totals, const CostParams& costs) {
    return costs.holding * static_cast<double>(totals.held) + costs.stockout * static_cast<double>(totals.lost) +
           costs.fixed_order * static_cast<double>(totals.orders);
}

void evaluate_candidates(std::span<PolicyEvaluation> out, const std::vector<ScenarioPath>& paths,
                         const StartLoad& load, const CostParams& costs) {
    std::vector<double> sum(out.size(), 0.0), sum_sq(out.size(), 0.0);
    std::vector<Units> arrivals(load.arrivals.size() + 1);
    for (std::size_t i = 0; i < out.size(); ++i) {
        for (const auto& path : paths) {
            const double c = cost_of(run_path(out[i].params, path, load, arrivals), costs);
            sum[i] += c;
            sum_sq[i] += c * c;
        }
    }
    const auto m = static_cast<double>(paths.size());
    for (std::size_t i = 0; i < out.size(); ++i) {
        out[i].estimated_cost = sum[i] / m;
        if (paths.size() > 1) {
            const double var = std::max(0.0, (sum_sq[i] - sum[i] * sum[i] / m) / (m - 1.0));
            out[i].cost_std_error = std::sqrt(var / m);
        } else {
            out[i].cost_std_error = 0.0;
        }
    }
}

}  // namespace

double simulate_path(const PolicyParams& params, const ScenarioPath& path, const CostParams& costs,
                     const SystemState& initial) {
    const auto load = make_start_load(initial, static_cast<int>(path.demand.size()));
    std::vector<Units> arrivals(load.arrivals.size() + 1);
    return cost_of(run_path(params, path, load, arrivals), costs);
}

double evaluate_policy(const PolicyParams& params, double lambda, double alpha, int horizon,
                       const CostParams& costs, const SystemState& initial, RngStream& rng,
                       double lead_time_p) {
    validate(params);
    if (horizon < 1) throw InvalidParameter("evaluate_policy: horizon must be >= 1");
    const auto path = draw_path(lambda, alpha, horizon, lead_time_p, rng);
    return simulate_path(params, path, costs, initial);
}

std::size_t select_best(std::span<const PolicyEvaluation> evaluations) {
    if (evaluations.empty()) throw ConfigError("optimizer: no candidates to select from");
    std::size_t best = 0;
    for (std::size_t i = 1; i < evaluations.size(); ++i) {
        const auto& a = evaluations[i];
        const auto& b = evaluations[best];
        if (a.estimated_cost < b.estimated_cost ||
            (a.estimated_cost == b.estimated_cost &&
             (a.params.order_up_to < b.params.order_up_to ||
              (a.params.order_up_to == b.params.order_up_to && a.params.reorder_point < b.params.reorder_point)))) {
            best = i;
        }
    }
    return best;
}

OptimizationResult optimize(const PosteriorState& posterior, const OptimizerConfig& config,
                            const CostParams& costs, const SystemState& current, RngStream& rng) {
    validate(config);
    validate(posterior);
    const auto& grid = config.grid;

    // Scenario m uses parameters drawn in order from `rng` and its path from
    // substream m of `paths_root`.
    const RngStream paths_root = RngStream::from_key(rng.next_u64());
    const double lambda_hat = demand_mean(posterior);
    const double alpha_hat = disruption_mean(posterior);

    std::vector<ScenarioPath> paths;
    paths.reserve(static_cast<std::size_t>(config.num_samples));
    for (int m = 0; m < config.num_samples; ++m) {
        double lambda = lambda_hat;
        double alpha = alpha_hat;
        if (config.mode == SamplingMode::PosteriorSampling) {
            lambda = sample_gamma(posterior.demand_shape, posterior.demand_rate, rng);
            alpha = sample_beta(posterior.disruption_alpha, posterior.disruption_beta, rng);
        }
        auto sub = paths_root.substream(static_cast<std::uint64_t>(m));
        paths.push_back(draw_path(lambda, alpha, config.planning_horizon, config.lead_time_p, sub));
    }

    const auto load = make_start_load(current, config.planning_horizon);
    OptimizationResult result;
    result.evaluations.reserve(grid.size());
    for (const auto& p : grid) result.evaluations.push_back({p, 0.0, 0.0});
    evaluate_candidates(result.evaluations, paths, load, costs);
    std::size_t best = select_best(result.evaluations);

    if (config.refine) {
        const PolicyParams centre = result.evaluations[best].params;
        std::vector<PolicyEvaluation> extra;
        for (Units ds = -4; ds <= 4; ++ds) {
            for (Units dS = -4; dS <= 4; ++dS) {
                const PolicyParams p{centre.reorder_point + ds, centre.order_up_to + dS};
                if (p.reorder_point < 0 || p.reorder_point >= p.order_up_to) continue;
                const bool seen = std::any_of(result.evaluations.begin(), result.evaluations.end(),
                                              [&](const PolicyEvaluation& e) { return e.params == p; });
                if (!seen) extra.push_back({p, 0.0, 0.0});
            }
        }
        evaluate_candidates(extra, paths, load, costs);
        result.evaluations.insert(result.evaluations.end(), extra.begin(), extra.end());
        best = select_best(result.evaluations);
    }

    result.best = result.evaluations[best].params;
    return result;
}

}  // namespace ainv
