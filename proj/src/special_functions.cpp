#include "restore/special_functions.hpp"

#include <cmath>
#include <stdexcept>

namespace restore {

namespace {

double gamma_p_series(double a, double x) {
  double ap = a;
  double del = 1.0 / a;
  double sum = del;
  for (int n = 0; n < 1000; ++n) {
    ap += 1.0;
    del *= x / ap;
    sum += del;
    if (std::fabs(del) < std::fabs(sum) * 1e-16) break;
  }
  return sum * std::exp(-x + a * std::log(x) - std::lgamma(a));
}

// Continued fraction for the regularized upper gamma Q(a, x).
double gamma_q_cont_fraction(double a, double x) {
  constexpr double tiny = 1e-300;
  double b = x + 1.0 - a;
  double c = 1.0 / tiny;
  double d = 1.0 / b;
  double h = d;
  for (int i = 1; i <= 1000; ++i) {
    const double an = -static_cast<double>(i) * (static_cast<double>(i) - a);
    b += 2.0;
    d = an * d + b;
    if (std::fabs(d) < tiny) d = tiny;
    c = b + an / c;
    if (std::fabs(c) < tiny) c = tiny;
    d = 1.0 / d;
    const double del = d * c;
    h *= del;
    if (std::fabs(del - 1.0) < 1e-16) break;
  }
  return std::exp(-x + a * std::log(x) - std::lgamma(a)) * h;
}

}  // namespace

double gamma_p(double a, double x) {
  if (a <= 0.0) throw std::invalid_argument("gamma_p: a must be positive");
  if (x < 0.0) throw std::invalid_argument("gamma_p: x must be nonnegative");
  if (x == 0.0) return 0.0;
  if (x < a + 1.0) return gamma_p_series(a, x);
  return 1.0 - gamma_q_cont_fraction(a, x);
}

double chi_squared_cdf(double x, int d) {
  if (d < 1) throw std::invalid_argument("chi_squared_cdf: d must be >= 1");
  if (x <= 0.0) return 0.0;
  return gamma_p(0.5 * d, 0.5 * x);
}

double chi_squared_quantile(double p, int d) {
  if (d < 1) throw std::invalid_argument("chi_squared_quantile: d must be >= 1");
  if (!(p > 0.0 && p < 1.0))
    throw std::invalid_argument("chi_squared_quantile: p must lie in (0,1)");
  double lo = 0.0;
  double hi = d + 10.0 * std::sqrt(2.0 * d) + 10.0;
  while (chi_squared_cdf(hi, d) < p) hi *= 2.0;
  while (hi - lo > 1e-10) {
    const double mid = 0.5 * (lo + hi);
    if (chi_squared_cdf(mid, d) < p) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace restore
