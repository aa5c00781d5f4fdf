#pragma once

#include <array>
#include <cstdint>
#include <string_view>

namespace ainv {

/// Named random streams. Each stream is keyed independently so that the
/// number of draws taken from one never shifts the sequence of another.
enum class StreamId : std::uint64_t {
    Demand = 1,
    LeadTime = 2,
    Disruption = 3,
    Optimizer = 4,
};

std::string_view to_string(StreamId id);

/// splitmix64 finalizer; used for key derivation and generator seeding.
constexpr std::uint64_t mix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

/**
 * Reproducible random stream.
 *
 * Generator: xoshiro256** seeded from a 64-bit key via splitmix64. The key is
 * a pure function of (seed, stream id, replication id), and substreams are
 * keyed from (parent key, index), so streams can be created independently on
 * any thread. All distribution samplers below are implemented here rather
 * than through <random> distributions, whose output is not specified across
 * standard library implementations.
 */
class RngStream {
public:
    RngStream(std::uint64_t seed, StreamId id, std::uint64_t replication = 0);

    /// Stream keyed directly; used for substreams.
    static RngStream from_key(std::uint64_t key);

    /// Child stream number `index`; does not advance this stream.
    [[nodiscard]] RngStream substream(std::uint64_t index) const;

    [[nodiscard]] std::uint64_t key() const { return key_; }

    std::uint64_t next_u64();

    /// Uniform on [0, 1) with 53 bits of resolution.
    double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    /// Uniform on (0, 1].
    double uniform_pos() { return static_cast<double>((next_u64() >> 11) + 1) * 0x1.0p-53; }

    /// Standard normal (Marsaglia polar method, spare value cached).
    double normal();

private:
    explicit RngStream(std::uint64_t key, int);

    std::uint64_t key_;
    std::array<std::uint64_t, 4> s_{};
    double spare_normal_ = 0.0;
    bool has_spare_ = false;
};

/// Poisson(lambda). Inversion by sequential search below lambda = 30,
/// transformed rejection (PTRS) above.
std::int64_t sample_poisson(double lambda, RngStream& rng);

/// Lead time L = 1 + G, G = failures before first success at probability p.
std::int64_t sample_lead_time(double p, RngStream& rng);

/// Returns 1 with probability alpha, else 0.
int sample_bernoulli(double alpha, RngStream& rng);

/// Gamma with shape/rate parameterization (mean shape/rate).
double sample_gamma(double shape, double rate, RngStream& rng);

/// Beta(a, b) on [0, 1].
double sample_beta(double a, double b, RngStream& rng);

/// Poisson sampler with per-rate constants precomputed; draws match
/// sample_poisson for the same rate and stream state.
class PoissonSampler {
public:
    explicit PoissonSampler(double lambda);
    std::int64_t operator()(RngStream& rng) const;
    [[nodiscard]] double lambda() const { return lambda_; }

private:
    double lambda_;
    double exp_neg_lambda_ = 0.0;
    bool use_ptrs_ = false;
    // PTRS constants
    double b_ = 0, a_ = 0, inv_alpha_ = 0, vr_ = 0, log_lambda_ = 0;
};

}  // namespace ainv
