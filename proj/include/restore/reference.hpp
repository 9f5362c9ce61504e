#pragma once

#include <functional>

#include "restore/rng.hpp"
#include "restore/types.hpp"

namespace restore {

/// A regeneration distribution: normalized log-density plus sampler.
struct ReferenceDistribution {
  int dim = 0;
  std::function<double(const Vector&)> log_density;
  std::function<Vector(Rng&)> sample;
};

/// Gaussian with diagonal covariance.
ReferenceDistribution gaussian_reference(const Vector& mean,
                                         const Vector& diag_var);

/// Isotropic Gaussian with scalar mean and variance in every coordinate.
ReferenceDistribution gaussian_reference(int dim, double mean, double var);

}  // namespace restore
