#include "ainv/learning.hpp"

#include <cmath>
#include <string>

#include "ainv/assert.hpp"
#include "ainv/error.hpp"

namespace ainv {

void validate(const PosteriorState& post) {
    for (double v : {post.demand_shape, post.demand_rate, post.disruption_alpha, post.disruption_beta}) {
        if (!(v > 0.0) || !std::isfinite(v)) throw InvalidParameter("posterior parameters must be finite and > 0");
    }
}

PosteriorState update_demand(const PosteriorState& post, std::int64_t demand) {
    AINV_ASSERT(demand >= 0);
    PosteriorState next = post;
    next.demand_shape += static_cast<double>(demand);
    next.demand_rate += 1.0;
    return next;
}

PosteriorState update_disruption(const PosteriorState& post, int disrupted) {
    if (disrupted != 0 && disrupted != 1) {
        throw InvalidParameter("disruption indicator must be 0 or 1, got " + std::to_string(disrupted));
    }
    PosteriorState next = post;
    next.disruption_alpha += disrupted;
    next.disruption_beta += 1 - disrupted;
    return next;
}

double demand_mean(const PosteriorState& post) { return post.demand_shape / post.demand_rate; }

double disruption_mean(const PosteriorState& post) {
    return post.disruption_alpha / (post.disruption_alpha + post.disruption_beta);
}

}  // namespace ainv
