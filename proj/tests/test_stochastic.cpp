#include <doctest.h>

#include <cmath>
#include <set>
#include <vector>

#include "ainv/error.hpp"
#include "ainv/stochastic.hpp"
#include "gof.hpp"

using namespace ainv;

namespace {

constexpr int kDraws = 100000;

double mean_of(const std::vector<double>& xs) {
    double s = 0;
    for (double x : xs) s += x;
    return s / static_cast<double>(xs.size());
}

void check_poisson_fit(double lambda, std::uint64_t seed) {
    RngStream rng(seed, StreamId::Demand);
    const int bins = static_cast<int>(lambda * 4 + 20);
    std::vector<long> counts(static_cast<std::size_t>(bins) + 1, 0);
    for (int i = 0; i < kDraws; ++i) {
        const auto k = sample_poisson(lambda, rng);
        REQUIRE(k >= 0);
        ++counts[static_cast<std::size_t>(std::min<std::int64_t>(k, bins))];
    }
    std::vector<double> probs;
    double tail = 1.0;
    for (int k = 0; k < bins; ++k) {
        const double p = std::exp(-lambda + k * std::log(lambda) - std::lgamma(k + 1.0));
        probs.push_back(p);
        tail -= p;
    }
    probs.push_back(std::max(tail, 0.0));
    int dof = 0;
    const double stat = gof::chi_square(counts, probs, kDraws, &dof);
    INFO("lambda=" << lambda << " chi2=" << stat << " dof=" << dof);
    CHECK(stat < gof::chi_square_crit_1pct(dof));
}

}  // namespace

TEST_CASE("same seed and stream id reproduce the sequence") {
    RngStream a(42, StreamId::Demand), b(42, StreamId::Demand);
    for (int i = 0; i < 1000; ++i) REQUIRE(sample_poisson(10.0, a) == sample_poisson(10.0, b));
    RngStream c(42, StreamId::Optimizer, 3), d(42, StreamId::Optimizer, 3);
    for (int i = 0; i < 1000; ++i) REQUIRE(sample_gamma(2.5, 0.5, c) == sample_gamma(2.5, 0.5, d));
}

TEST_CASE("generator output is pinned") {
    // Frozen first outputs; a change here breaks bit-exact reproducibility of every trace.
    RngStream rng(20240601, StreamId::Demand, 0);
    CHECK(rng.next_u64() == 0xa0f092015cd26e6cULL);
    CHECK(rng.next_u64() == 0xfc240b75ce1f9982ULL);
    CHECK(rng.next_u64() == 0x7be05dad1054c678ULL);
    RngStream demand(20240601, StreamId::Demand, 0);
    const std::int64_t expected[] = {11, 17, 10, 17, 11, 13, 12, 7};
    for (std::int64_t d : expected) CHECK(sample_poisson(10.0, demand) == d);
    CHECK(RngStream(42, StreamId::Demand, 0).key() != RngStream(42, StreamId::LeadTime, 0).key());
    CHECK(RngStream(42, StreamId::Demand, 0).key() != RngStream(42, StreamId::Demand, 1).key());
    CHECK(RngStream(42, StreamId::Demand, 0).key() != RngStream(43, StreamId::Demand, 0).key());
}

TEST_CASE("distinct streams from one seed are uncorrelated") {
    RngStream a(7, StreamId::Demand), b(7, StreamId::LeadTime);
    double sxy = 0, sx = 0, sy = 0, sxx = 0, syy = 0;
    for (int i = 0; i < kDraws; ++i) {
        const double x = a.uniform(), y = b.uniform();
        sx += x;
        sy += y;
        sxy += x * y;
        sxx += x * x;
        syy += y * y;
    }
    const double n = kDraws;
    const double corr = (sxy / n - sx / n * sy / n) /
                        std::sqrt((sxx / n - sx / n * sx / n) * (syy / n - sy / n * sy / n));
    // 4 sigma under independence: 4 / sqrt(n)
    CHECK(std::fabs(corr) < 4.0 / std::sqrt(n));
}

TEST_CASE("demand stream is isolated from draws on other streams") {
    RngStream demand1(11, StreamId::Demand), lead1(11, StreamId::LeadTime);
    RngStream demand2(11, StreamId::Demand), lead2(11, StreamId::LeadTime), disr2(11, StreamId::Disruption);
    for (int i = 0; i < 500; ++i) {
        const auto d1 = sample_poisson(10.0, demand1);
        sample_lead_time(0.8, lead1);
        // interleave differently: extra draws on other streams
        sample_bernoulli(0.3, disr2);
        sample_lead_time(0.8, lead2);
        sample_lead_time(0.8, lead2);
        const auto d2 = sample_poisson(10.0, demand2);
        REQUIRE(d1 == d2);
    }
}

TEST_CASE("substreams are pure functions of the parent key") {
    const RngStream root = RngStream::from_key(1234);
    auto a = root.substream(5), b = root.substream(5), c = root.substream(6);
    CHECK(a.next_u64() == b.next_u64());
    CHECK(a.key() != c.key());
    CHECK(root.key() == 1234);
}

TEST_CASE("poisson") {
    RngStream rng(42, StreamId::Demand);
    SUBCASE("lambda 0 is degenerate at zero") {
        for (int i = 0; i < 100; ++i) CHECK(sample_poisson(0.0, rng) == 0);
    }
    SUBCASE("lambda 10 sample mean within 3 sigma") {
        double sum = 0;
        for (int i = 0; i < kDraws; ++i) sum += static_cast<double>(sample_poisson(10.0, rng));
        const double mean = sum / kDraws;
        CHECK(mean >= 9.9);
        CHECK(mean <= 10.1);
    }
    SUBCASE("variance matches the mean") {
        double s = 0, ss = 0;
        for (int i = 0; i < kDraws; ++i) {
            const auto k = static_cast<double>(sample_poisson(25.0, rng));
            s += k;
            ss += k * k;
        }
        const double var = ss / kDraws - (s / kDraws) * (s / kDraws);
        CHECK(var == doctest::Approx(25.0).epsilon(0.03));
    }
    SUBCASE("chi-square fit at the rates in use") {
        check_poisson_fit(10.0, 1);
        check_poisson_fit(15.0, 2);
        check_poisson_fit(20.0, 3);
        check_poisson_fit(25.0, 4);
        check_poisson_fit(0.7, 5);
        check_poisson_fit(45.0, 6);  // rejection branch
    }
    SUBCASE("invalid rates") {
        CHECK_THROWS_AS(sample_poisson(-1.0, rng), InvalidParameter);
        CHECK_THROWS_AS(sample_poisson(std::nan(""), rng), InvalidParameter);
        CHECK_THROWS_AS(sample_poisson(INFINITY, rng), InvalidParameter);
    }
}

TEST_CASE("lead time") {
    RngStream rng(42, StreamId::LeadTime);
    SUBCASE("p = 1 always gives one period") {
        for (int i = 0; i < 1000; ++i) CHECK(sample_lead_time(1.0, rng) == 1);
    }
    SUBCASE("mean at p = 0.8 and p = 0.5") {
        for (auto [p, lo, hi] : {std::tuple{0.8, 1.24, 1.26}, std::tuple{0.5, 1.97, 2.03}}) {
            double sum = 0;
            for (int i = 0; i < kDraws; ++i) {
                const auto l = sample_lead_time(p, rng);
                REQUIRE(l >= 1);
                sum += static_cast<double>(l);
            }
            CHECK(sum / kDraws >= lo);
            CHECK(sum / kDraws <= hi);
        }
    }
    SUBCASE("chi-square fit of 1 + Geometric(0.8)") {
        const double p = 0.8;
        const int bins = 12;
        std::vector<long> counts(bins + 1, 0);
        for (int i = 0; i < kDraws; ++i) {
            const auto g = sample_lead_time(p, rng) - 1;
            ++counts[static_cast<std::size_t>(std::min<std::int64_t>(g, bins))];
        }
        std::vector<double> probs;
        for (int g = 0; g < bins; ++g) probs.push_back(p * std::pow(1 - p, g));
        probs.push_back(std::pow(1 - p, bins));
        int dof = 0;
        const double stat = gof::chi_square(counts, probs, kDraws, &dof);
        CHECK(stat < gof::chi_square_crit_1pct(dof));
    }
    SUBCASE("invalid probabilities") {
        CHECK_THROWS_AS(sample_lead_time(0.0, rng), InvalidParameter);
        CHECK_THROWS_AS(sample_lead_time(1.5, rng), InvalidParameter);
        CHECK_THROWS_AS(sample_lead_time(-0.1, rng), InvalidParameter);
    }
}

TEST_CASE("bernoulli") {
    RngStream rng(42, StreamId::Disruption);
    for (int i = 0; i < 1000; ++i) {
        CHECK(sample_bernoulli(0.0, rng) == 0);
        CHECK(sample_bernoulli(1.0, rng) == 1);
    }
    for (double alpha : {0.02, 0.15}) {
        long hits = 0;
        for (int i = 0; i < kDraws; ++i) hits += sample_bernoulli(alpha, rng);
        const double freq = static_cast<double>(hits) / kDraws;
        const double sigma = std::sqrt(alpha * (1 - alpha) / kDraws);
        CHECK(std::fabs(freq - alpha) < 3 * sigma);
        int dof = 0;
        const double stat = gof::chi_square({kDraws - hits, hits}, {1 - alpha, alpha}, kDraws, &dof);
        CHECK(stat < gof::chi_square_crit_1pct(dof));
    }
    long hits = 0;
    for (int i = 0; i < kDraws; ++i) hits += sample_bernoulli(0.15, rng);
    // 4 sigma band: sqrt(0.15 * 0.85 / 1e5) = 0.00113
    CHECK(std::fabs(static_cast<double>(hits) / kDraws - 0.15) < 4 * 0.00113);
    CHECK_THROWS_AS(sample_bernoulli(-0.01, rng), InvalidParameter);
    CHECK_THROWS_AS(sample_bernoulli(1.01, rng), InvalidParameter);
}

TEST_CASE("gamma") {
    RngStream rng(42, StreamId::Optimizer);
    SUBCASE("shape 10 rate 1 mean") {
        std::vector<double> xs;
        for (int i = 0; i < kDraws; ++i) xs.push_back(sample_gamma(10.0, 1.0, rng));
        CHECK(mean_of(xs) >= 9.97);
        CHECK(mean_of(xs) <= 10.03);
        // Erlang CDF for integer shape
        const double d = gof::ks_statistic(xs, [](double x) {
            double term = 1.0, sum = 1.0;
            for (int k = 1; k < 10; ++k) {
                term *= x / k;
                sum += term;
            }
            return 1.0 - std::exp(-x) * sum;
        });
        CHECK(d < gof::ks_crit_1pct(xs.size()));
    }
    SUBCASE("shape 1 is exponential") {
        std::vector<double> xs;
        for (int i = 0; i < kDraws; ++i) xs.push_back(sample_gamma(1.0, 1.0, rng));
        CHECK(gof::ks_statistic(xs, [](double x) { return 1.0 - std::exp(-x); }) < gof::ks_crit_1pct(xs.size()));
    }
    SUBCASE("rate scales the draw") {
        std::vector<double> xs;
        for (int i = 0; i < kDraws; ++i) xs.push_back(sample_gamma(1.0, 4.0, rng));
        CHECK(gof::ks_statistic(xs, [](double x) { return 1.0 - std::exp(-4.0 * x); }) <
              gof::ks_crit_1pct(xs.size()));
    }
    SUBCASE("shape below one uses the boost identity") {
        // Gamma(0.5, 1) = chi-square(1) / 2: CDF erf(sqrt(x)).
        std::vector<double> xs;
        for (int i = 0; i < kDraws; ++i) xs.push_back(sample_gamma(0.5, 1.0, rng));
        CHECK(gof::ks_statistic(xs, [](double x) { return std::erf(std::sqrt(x)); }) < gof::ks_crit_1pct(xs.size()));
        for (int i = 0; i < 1000; ++i) CHECK(sample_gamma(0.01, 1.0, rng) > 0.0);
    }
    SUBCASE("invalid parameters") {
        CHECK_THROWS_AS(sample_gamma(0.0, 1.0, rng), InvalidParameter);
        CHECK_THROWS_AS(sample_gamma(1.0, 0.0, rng), InvalidParameter);
        CHECK_THROWS_AS(sample_gamma(-2.0, 1.0, rng), InvalidParameter);
    }
}

TEST_CASE("beta") {
    RngStream rng(42, StreamId::Optimizer);
    SUBCASE("uniform case") {
        std::vector<double> xs;
        for (int i = 0; i < kDraws; ++i) {
            xs.push_back(sample_beta(1.0, 1.0, rng));
            REQUIRE(xs.back() >= 0.0);
            REQUIRE(xs.back() <= 1.0);
        }
        CHECK(mean_of(xs) >= 0.497);
        CHECK(mean_of(xs) <= 0.503);
        CHECK(gof::ks_statistic(xs, [](double x) { return x; }) < gof::ks_crit_1pct(xs.size()));
    }
    SUBCASE("Beta(1, 49) prior shape") {
        std::vector<double> xs;
        for (int i = 0; i < kDraws; ++i) xs.push_back(sample_beta(1.0, 49.0, rng));
        const double sigma = std::sqrt(1.0 * 49.0 / (50.0 * 50.0 * 51.0) / kDraws);
        CHECK(std::fabs(mean_of(xs) - 0.02) < 3 * sigma);
        CHECK(gof::ks_statistic(xs, [](double x) { return 1.0 - std::pow(1.0 - x, 49.0); }) <
              gof::ks_crit_1pct(xs.size()));
    }
    SUBCASE("invalid parameters") {
        CHECK_THROWS_AS(sample_beta(0.0, 1.0, rng), InvalidParameter);
        CHECK_THROWS_AS(sample_beta(1.0, -1.0, rng), InvalidParameter);
    }
}
