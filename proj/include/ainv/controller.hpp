#pragma once

#include <cstdint>

#include "ainv/inventory.hpp"
#include "ainv/learning.hpp"
#include "ainv/optimizer.hpp"
#include "ainv/policies.hpp"
#include "ainv/stochastic.hpp"

namespace ainv {

enum class PolicyMode { Static, Adaptive };

/// Hosts the active (s, S) pair. A static controller never changes it; an
/// adaptive one updates its posterior every period and re-optimizes whenever
/// t is a positive multiple of the update period.
class PolicyController {
public:
    static PolicyController make_static(PolicyParams params);
    static PolicyController make_adaptive(PolicyParams initial, PosteriorState prior, int update_period,
                                          OptimizerConfig optimizer, CostParams costs);

    /// Observe period t's demand and disruption draw. `current` is the state
    /// inner simulations start from when a re-optimization fires.
    void observe(std::int64_t demand, int disrupted, std::int64_t t, const SystemState& current,
                 RngStream& optimizer_rng);

    [[nodiscard]] PolicyMode mode() const { return mode_; }
    [[nodiscard]] const PolicyParams& params() const { return params_; }
    [[nodiscard]] const PosteriorState& posterior() const { return posterior_; }
    [[nodiscard]] int update_period() const { return update_period_; }
    [[nodiscard]] int reoptimizations() const { return reoptimizations_; }
    [[nodiscard]] const OptimizerConfig& optimizer_config() const { return optimizer_; }

    /// True when t triggers a re-optimization for an adaptive controller.
    [[nodiscard]] bool reoptimizes_at(std::int64_t t) const;

private:
    PolicyController() = default;

    PolicyMode mode_ = PolicyMode::Static;
    PolicyParams params_;
    PosteriorState posterior_;
    int update_period_ = 7;
    OptimizerConfig optimizer_;
    CostParams costs_;
    int reoptimizations_ = 0;
};

}  // namespace ainv
