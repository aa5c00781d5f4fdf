#include "ainv/stochastic.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "ainv/error.hpp"

namespace ainv {

namespace {

constexpr std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

constexpr std::uint64_t combine(std::uint64_t key, std::uint64_t value) {
    return mix64(key ^ mix64(value + 0x632be59bd9b4e019ULL));
}

}  // namespace

std::string_view to_string(StreamId id) {
    switch (id) {
        case StreamId::Demand: return "demand";
        case StreamId::LeadTime: return "lead_time";
        case StreamId::Disruption: return "disruption";
        case StreamId::Optimizer: return "optimizer";
    }
    return "unknown";
}

RngStream::RngStream(std::uint64_t seed, StreamId id, std::uint64_t replication)
    : RngStream(combine(combine(mix64(seed), static_cast<std::uint64_t>(id)), replication), 0) {}

RngStream::RngStream(std::uint64_t key, int) : key_(key) {
    std::uint64_t x = key;
    for (auto& word : s_) {
        x += 0x9e3779b97f4a7c15ULL;
        std::uint64_t z = x;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        word = z ^ (z >> 31);
    }
}

RngStream RngStream::from_key(std::uint64_t key) { return RngStream(key, 0); }

RngStream RngStream::substream(std::uint64_t index) const { return RngStream(combine(key_, index), 0); }

std::uint64_t RngStream::next_u64() {
    const std::uint64_t result = rotl(s_[1] * 5, 7) * 9;
    const std::uint64_t t = s_[1] << 17;
    s_[2] ^= s_[0];
    s_[3] ^= s_[1];
    s_[1] ^= s_[2];
    s_[0] ^= s_[3];
    s_[2] ^= t;
    s_[3] = rotl(s_[3], 45);
    return result;
}

double RngStream::normal() {
    if (has_spare_) {
        has_spare_ = false;
        return spare_normal_;
    }
    double u, v, r2;
    do {
        u = 2.0 * uniform() - 1.0;
        v = 2.0 * uniform() - 1.0;
        r2 = u * u + v * v;
    } while (r2 >= 1.0 || r2 == 0.0);
    const double f = std::sqrt(-2.0 * std::log(r2) / r2);
    spare_normal_ = v * f;
    has_spare_ = true;
    return u * f;
}

PoissonSampler::PoissonSampler(double lambda) : lambda_(lambda) {
    if (!(lambda >= 0.0) || !std::isfinite(lambda)) {
        throw InvalidParameter("poisson: lambda must be finite and >= 0, got " + std::to_string(lambda));
    }
    use_ptrs_ = lambda >= 30.0;
    if (!use_ptrs_) {
        exp_neg_lambda_ = std::exp(-lambda);
        return;
    }
    const double slam = std::sqrt(lambda);
    log_lambda_ = std::log(lambda);
    b_ = 0.931 + 2.53 * slam;
    a_ = -0.059 + 0.02483 * b_;
    inv_alpha_ = 1.1239 + 1.1328 / (b_ - 3.4);
    vr_ = 0.9277 - 3.6224 / (b_ - 2.0);
}

std::int64_t PoissonSampler::operator()(RngStream& rng) const {
    if (lambda_ == 0.0) return 0;
    if (!use_ptrs_) {
        const double u = rng.uniform();
        double p = exp_neg_lambda_;
        double cdf = p;
        std::int64_t k = 0;
        // Cap guards against cdf saturating just below u through rounding.
        while (u > cdf && k < 1000) {
            ++k;
            p *= lambda_ / static_cast<double>(k);
            cdf += p;
        }
        return k;
    }
    for (;;) {
        const double u = rng.uniform() - 0.5;
        const double v = rng.uniform();
        const double us = 0.5 - std::fabs(u);
        const auto k = static_cast<std::int64_t>(std::floor((2.0 * a_ / us + b_) * u + lambda_ + 0.43));
        if (us >= 0.07 && v <= vr_) return k;
        if (k < 0 || (us < 0.013 && v > us)) continue;
        const double lhs = std::log(v) + std::log(inv_alpha_) - std::log(a_ / (us * us) + b_);
        const double rhs = -lambda_ + static_cast<double>(k) * log_lambda_ - std::lgamma(static_cast<double>(k) + 1.0);
        if (lhs <= rhs) return k;
    }
}

std::int64_t sample_poisson(double lambda, RngStream& rng) { return PoissonSampler(lambda)(rng); }

std::int64_t sample_lead_time(double p, RngStream& rng) {
    if (!(p > 0.0 && p <= 1.0)) {
        throw InvalidParameter("lead time: success probability must lie in (0, 1], got " + std::to_string(p));
    }
    const double u = rng.uniform_pos();
    if (p == 1.0) return 1;
    return 1 + static_cast<std::int64_t>(std::floor(std::log(u) / std::log1p(-p)));
}

int sample_bernoulli(double alpha, RngStream& rng) {
    if (!(alpha >= 0.0 && alpha <= 1.0)) {
        throw InvalidParameter("bernoulli: probability must lie in [0, 1], got " + std::to_string(alpha));
    }
    return rng.uniform() < alpha ? 1 : 0;
}

namespace {

// Marsaglia & Tsang for shape >= 1; unit rate.
double gamma_unit(double shape, RngStream& rng) {
    const double d = shape - 1.0 / 3.0;
    const double c = 1.0 / std::sqrt(9.0 * d);
    for (;;) {
        double x, v;
        do {
            x = rng.normal();
            v = 1.0 + c * x;
        } while (v <= 0.0);
        v = v * v * v;
        const double u = rng.uniform_pos();
        const double x2 = x * x;
        if (u < 1.0 - 0.0331 * x2 * x2) return d * v;
        if (std::log(u) < 0.5 * x2 + d * (1.0 - v + std::log(v))) return d * v;
    }
}

}  // namespace

double sample_gamma(double shape, double rate, RngStream& rng) {
    if (!(shape > 0.0) || !(rate > 0.0) || !std::isfinite(shape) || !std::isfinite(rate)) {
        throw InvalidParameter("gamma: shape and rate must be finite and > 0");
    }
    double x;
    if (shape >= 1.0) {
        x = gamma_unit(shape, rng);
    } else {
        // Gamma(a) = Gamma(a + 1) * U^(1/a)
        const double g = gamma_unit(shape + 1.0, rng);
        x = g * std::pow(rng.uniform_pos(), 1.0 / shape);
    }
    x /= rate;
    // Underflow for tiny shapes; keep the draw inside the support.
    return x > 0.0 ? x : std::numeric_limits<double>::min();
}

double sample_beta(double a, double b, RngStream& rng) {
    if (!(a > 0.0) || !(b > 0.0) || !std::isfinite(a) || !std::isfinite(b)) {
        throw InvalidParameter("beta: both shape parameters must be finite and > 0");
    }
    const double x = sample_gamma(a, 1.0, rng);
    const double y = sample_gamma(b, 1.0, rng);
    return x / (x + y);
}

}  // namespace ainv
