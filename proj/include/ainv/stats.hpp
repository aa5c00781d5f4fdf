#pragma once

#include <span>

namespace ainv {

/// Regularized incomplete beta I_x(a, b), continued fraction (modified Lentz).
double incomplete_beta(double a, double b, double x);

/// Two-sided tail probability P(|T| >= |t|) for Student t with `dof` degrees of freedom.
double student_t_two_sided_p(double t, double dof);

struct TTestResult {
    double t_statistic = 0.0;
    double p_value = 1.0;
    double mean = 0.0;
    double std_dev = 0.0;  // sample (n - 1) standard deviation
    int n = 0;
};

/// Paired t-test on per-pair differences. Throws InvalidParameter for n < 2
/// and DegenerateSample when all differences are identical.
TTestResult paired_t_test(std::span<const double> differences);

}  // namespace ainv
