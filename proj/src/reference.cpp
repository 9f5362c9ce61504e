#include "restore/reference.hpp"

#include <cmath>
#include <memory>
#include <stdexcept>

namespace restore {

ReferenceDistribution gaussian_reference(const Vector& mean,
                                         const Vector& diag_var) {
  const int dim = static_cast<int>(mean.size());
  if (diag_var.size() != dim)
    throw std::invalid_argument("gaussian_reference: variance length mismatch");
  if ((diag_var.array() <= 0.0).any())
    throw std::invalid_argument("gaussian_reference: variances must be > 0");
  auto sd = std::make_shared<Vector>(diag_var.cwiseSqrt());
  auto mu = std::make_shared<Vector>(mean);
  double log_norm = -0.5 * dim * std::log(2.0 * M_PI);
  for (int i = 0; i < dim; ++i) log_norm -= 0.5 * std::log(diag_var[i]);

  ReferenceDistribution ref;
  ref.dim = dim;
  ref.log_density = [mu, sd, log_norm](const Vector& x) {
    return log_norm - 0.5 * ((x - *mu).cwiseQuotient(*sd)).squaredNorm();
  };
  ref.sample = [mu, sd, dim](Rng& rng) -> Vector {
    Vector x(dim);
    for (int i = 0; i < dim; ++i) x[i] = (*mu)[i] + (*sd)[i] * rng.normal();
    return x;
  };
  return ref;
}

ReferenceDistribution gaussian_reference(int dim, double mean, double var) {
  return gaussian_reference(Vector::Constant(dim, mean),
                            Vector::Constant(dim, var));
}

}  // namespace restore
