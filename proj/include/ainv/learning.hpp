#pragma once

#include <cstdint>

namespace ainv {

/// Conjugate posterior: Gamma(shape, rate) over the demand rate and
/// Beta(alpha, beta) over the per-period disruption probability.
/// Defaults are the shipped priors: Gamma(10, 1), Beta(1, 49).
struct PosteriorState {
    double demand_shape = 10.0;     // a
    double demand_rate = 1.0;       // b
    double disruption_alpha = 1.0;  // c
    double disruption_beta = 49.0;  // d

    friend bool operator==(const PosteriorState&, const PosteriorState&) = default;
};

/// Throws InvalidParameter unless every parameter is finite and > 0.
void validate(const PosteriorState& post);

/// a += D, b += 1.
PosteriorState update_demand(const PosteriorState& post, std::int64_t demand);

/// c += S, d += 1 - S. Throws InvalidParameter unless S is 0 or 1.
PosteriorState update_disruption(const PosteriorState& post, int disrupted);

/// Posterior mean of the demand rate, a / b.
double demand_mean(const PosteriorState& post);

/// Posterior mean of the disruption probability, c / (c + d).
double disruption_mean(const PosteriorState& post);

}  // namespace ainv
