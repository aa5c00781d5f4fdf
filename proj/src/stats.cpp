#include "ainv/stats.hpp"

#include <cmath>
#include <limits>

#include "ainv/error.hpp"

namespace ainv {

namespace {

double beta_continued_fraction(double a, double b, double x) {
    constexpr int max_iter = 10000;
    constexpr double eps = 1e-16;
    constexpr double tiny = 1e-300;
    const double qab = a + b, qap = a + 1.0, qam = a - 1.0;
    double c = 1.0;
    double d = 1.0 - qab * x / qap;
    if (std::fabs(d) < tiny) d = tiny;
    d = 1.0 / d;
    double h = d;
    for (int m = 1; m <= max_iter; ++m) {
        const double m2 = 2.0 * m;
        double aa = m * (b - m) * x / ((qam + m2) * (a + m2));
        d = 1.0 + aa * d;
        if (std::fabs(d) < tiny) d = tiny;
        c = 1.0 + aa / c;
        if (std::fabs(c) < tiny) c = tiny;
        d = 1.0 / d;
        h *= d * c;
        aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
        d = 1.0 + aa * d;
        if (std::fabs(d) < tiny) d = tiny;
        c = 1.0 + aa / c;
        if (std::fabs(c) < tiny) c = tiny;
        d = 1.0 / d;
        const double del = d * c;
        h *= del;
        if (std::fabs(del - 1.0) < eps) break;
    }
    return h;
}

}  // namespace

double incomplete_beta(double a, double b, double x) {
    if (!(a > 0.0) || !(b > 0.0)) throw InvalidParameter("incomplete beta: a and b must be > 0");
    if (!(x >= 0.0 && x <= 1.0)) throw InvalidParameter("incomplete beta: x must lie in [0, 1]");
    if (x == 0.0) return 0.0;
    if (x == 1.0) return 1.0;
    const double log_front =
        std::lgamma(a + b) - std::lgamma(a) - std::lgamma(b) + a * std::log(x) + b * std::log1p(-x);
    const double front = std::exp(log_front);
    if (x < (a + 1.0) / (a + b + 2.0)) return front * beta_continued_fraction(a, b, x) / a;
    return 1.0 - front * beta_continued_fraction(b, a, 1.0 - x) / b;
}

double student_t_two_sided_p(double t, double dof) {
    if (!(dof > 0.0)) throw InvalidParameter("student t: degrees of freedom must be > 0");
    if (std::isnan(t)) return std::numeric_limits<double>::quiet_NaN();
    if (std::isinf(t)) return 0.0;
    // P(|T| >= |t|) = I_{v / (v + t^2)}(v / 2, 1 / 2)
    const double x = dof / (dof + t * t);
    return incomplete_beta(0.5 * dof, 0.5, x);
}

TTestResult paired_t_test(std::span<const double> differences) {
    const auto n = differences.size();
    if (n < 2) throw InvalidParameter("paired t-test needs at least two differences");
    double mean = 0.0;
    for (double d : differences) mean += d;
    mean /= static_cast<double>(n);
    double ss = 0.0;
    bool all_equal = true;
    for (double d : differences) {
        ss += (d - mean) * (d - mean);
        all_equal = all_equal && d == differences[0];
    }
    if (all_equal || ss == 0.0) throw DegenerateSample("paired t-test: differences have zero variance");
    TTestResult r;
    r.n = static_cast<int>(n);
    r.mean = mean;
    r.std_dev = std::sqrt(ss / static_cast<double>(n - 1));
    r.t_statistic = mean / (r.std_dev / std::sqrt(static_cast<double>(n)));
    r.p_value = student_t_two_sided_p(r.t_statistic, static_cast<double>(n - 1));
    return r;
}

}  // namespace ainv
