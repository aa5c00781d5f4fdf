#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "ainv/inventory.hpp"
#include "ainv/learning.hpp"
#include "ainv/policies.hpp"
#include "ainv/stochastic.hpp"

namespace ainv {

enum class SamplingMode {
    PosteriorSampling,  // draw (lambda, alpha) per scenario from the posterior
    PointEstimate,      // every scenario uses the posterior means
};

/// {(s, S) : s in {0, 5, ..., 60}, S in {s + 5, ..., 120}}, 247 pairs.
std::vector<PolicyParams> default_grid();

/// Pairs (s, S) with s in {s_min, s_min + step, ..., s_max} and S in {s + step, ..., S_max}.
std::vector<PolicyParams> make_grid(Units s_min, Units s_max, Units S_max, Units step);

struct OptimizerConfig {
    int num_samples = 1000;      // M
    int planning_horizon = 50;   // inner simulation length
    std::vector<PolicyParams> grid = default_grid();
    SamplingMode mode = SamplingMode::PosteriorSampling;
    bool refine = false;         // unit-step search around the coarse argmin
    double lead_time_p = 0.8;
};

/// Throws ConfigError on M < 1, horizon < 1, bad lead-time p, an empty grid or an invalid grid pair.
void validate(const OptimizerConfig& config);

struct PolicyEvaluation {
    PolicyParams params;
    double estimated_cost = 0.0;   // sample mean over the M scenarios
    double cost_std_error = 0.0;   // sample sd / sqrt(M); 0 when M == 1
};

struct OptimizationResult {
    PolicyParams best;
    std::vector<PolicyEvaluation> evaluations;  // grid order, refinement points appended
};

/**
 * Pre-drawn randomness for one inner scenario. Demand, lead time and the
 * disruption flag are drawn every period so that all candidates evaluated on
 * the same path see identical realizations.
 */
struct ScenarioPath {
    std::vector<std::int32_t> demand;
    std::vector<std::int32_t> effective_lead;  // lead time, doubled when disrupted
};

ScenarioPath draw_path(double lambda, double alpha, int horizon, double lead_time_p, RngStream& rng);

/// Cumulative cost of (s, S) along a drawn path, starting from `initial`.
double simulate_path(const PolicyParams& params, const ScenarioPath& path, const CostParams& costs,
                     const SystemState& initial);

/// One inner realization of the planning-horizon cost under fixed (lambda, alpha).
double evaluate_policy(const PolicyParams& params, double lambda, double alpha, int horizon,
                       const CostParams& costs, const SystemState& initial, RngStream& rng,
                       double lead_time_p = 0.8);

/**
 * Sample-average-approximation grid search. Scenario m is drawn from
 * substream m of a key taken from `rng`, and every candidate is evaluated on
 * the same M paths. Ties go to the smallest S, then the smallest s.
 */
OptimizationResult optimize(const PosteriorState& posterior, const OptimizerConfig& config,
                            const CostParams& costs, const SystemState& current, RngStream& rng);

/// Index of the argmin under the tie-break rule.
std::size_t select_best(std::span<const PolicyEvaluation> evaluations);

}  // namespace ainv
