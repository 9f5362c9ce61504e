#pragma once

namespace restore {

/// Regularized lower incomplete gamma P(a, x). Series expansion for
/// x < a + 1, Lentz continued fraction otherwise.
double gamma_p(double a, double x);

/// Chi-squared CDF with d degrees of freedom.
double chi_squared_cdf(double x, int d);

/// Chi-squared quantile: smallest x with CDF(x) >= p, found by bisection on
/// the regularized incomplete gamma to an interval width of 1e-10.
double chi_squared_quantile(double p, int d);

}  // namespace restore
