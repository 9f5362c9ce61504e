#pragma once

#include <cstdint>
#include <vector>

#include "restore/target_model.hpp"

namespace restore {

/// Standard Gaussian in d dimensions, pi~(x) = exp(-|x|^2/2).
TargetModel std_gaussian(int dim);

/// Gaussian with the given mean and covariance (unnormalized).
TargetModel gaussian(const Vector& mean, const Matrix& cov);

/// Logit-transformed Beta(2,2): pi(x) = 6 e^{2x} (e^x + 1)^{-4}, normalized.
TargetModel transformed_beta();

/// Multivariate t with location m, scale matrix Sigma and nu degrees of
/// freedom.
TargetModel multivariate_t(double nu, const Vector& m, const Matrix& sigma);

/// Two-component Gaussian mixture w1 N(m1,S1) + w2 N(m2,S2), normalized.
TargetModel gaussian_mixture2(double w1, const Vector& m1, const Vector& m2,
                              const Matrix& s1, const Matrix& s2);

/// The mixture with its reference parameters: w = (0.4, 0.6),
/// m1 = (1.05, 1.05), m2 = -m1, off-diagonal correlations -0.1 / +0.1.
TargetModel gaussian_mixture2_default();

/// Hierarchical pump-failure posterior on log-transformed variables.
/// failures[i] ~ Poisson(rate_i * exposure_i), rate_i ~ Gamma(c1, rate = h),
/// h ~ InvGamma(c2, c3); state = (log rate_1..n, log h), dim = n + 1.
/// The log-transform Jacobian is folded into the density.
TargetModel pump_hierarchical(const std::vector<double>& failures,
                              const std::vector<double>& exposures,
                              double c1 = 1.802, double c2 = 2.01,
                              double c3 = 1.01);

/// The ten-pump dataset of Gaver & O'Mahoney used with this model.
struct PumpData {
  std::vector<double> failures;
  std::vector<double> exposures;
};
PumpData pump_default_data();

/// Pump posterior on the default dataset.
TargetModel pump_hierarchical_default();

/// Log-Gaussian Cox process on an n x n grid of the unit square. counts holds
/// the per-cell counts row-major (size n^2); the latent field has zero-mean
/// Gaussian prior with covariance exp(-dist/n) and the cell counts are
/// Poisson(n^2 exp(x)).
TargetModel log_gaussian_cox(int grid_n, const std::vector<double>& counts);

/// Simulates cell counts from the prior for the Cox model (latent field drawn
/// from the Gaussian prior, counts Poisson given the field).
std::vector<double> simulate_log_gaussian_cox_counts(int grid_n,
                                                     std::uint64_t seed);

}  // namespace restore
