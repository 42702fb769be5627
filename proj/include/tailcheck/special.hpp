#pragma once

namespace tailcheck {

// Upper tail of the standard normal distribution,
// gaussian_tail(x) = integral of the standard normal density over [x, inf).
// Relative accuracy ~1e-15 for |x| <= 8; gaussian_tail(x) + gaussian_tail(-x) = 1.
double gaussian_tail(double x);

// Standard normal CDF and density.
double normal_cdf(double x);
double normal_pdf(double x);

// Inverse of normal_cdf on (0, 1); absolute accuracy well below 1e-9.
// Throws parameter_error outside (0, 1).
double normal_quantile(double p);

// Regularized lower incomplete gamma function P(a, x), a > 0, x >= 0.
double regularized_lower_gamma(double a, double x);

}  // namespace tailcheck
