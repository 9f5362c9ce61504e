#pragma once

#include <cstdint>
#include <string>

#include "restore/target_model.hpp"

namespace restore {

/// Design matrix and responses for a Bayesian logistic regression. The
/// predictors include the appended intercept column; responses live in
/// {-1, +1}. After load_logistic_dataset the non-binary predictor columns
/// have mean 0 and standard deviation 0.5 and binary columns have mean 0 and
/// range 1.
struct LogisticDataset {
  Matrix predictors;  // n x d, last column is the intercept
  Vector responses;   // entries in {-1, +1}
  int dim() const { return static_cast<int>(predictors.cols()); }
  long rows() const { return static_cast<long>(predictors.rows()); }
};

/// Loads a comma-delimited file with a header row. The response column is
/// named `y` and may hold {0,1} or {-1,+1} values; every other column is a
/// predictor. Columns are rescaled and an intercept column appended.
/// Malformed rows, non-binary responses and constant predictor columns raise
/// std::runtime_error naming the offending row or column.
LogisticDataset load_logistic_dataset(const std::string& path);

/// Scales predictors and appends the intercept; used by the loader and by
/// tests that build datasets in memory. `raw` must not already contain an
/// intercept column.
LogisticDataset prepare_logistic_dataset(const Matrix& raw,
                                         const Vector& responses);

/// Posterior of the logistic model with an isotropic Gaussian prior:
/// log pi~(b) = -sum_i log(1 + exp(-y_i b.x_i)) - |b|^2 / (2 prior_var).
TargetModel logistic_posterior(const LogisticDataset& data,
                               double prior_var = 400.0);

/// Writes a synthetic dataset shaped like the breast-cancer data: nine
/// integer-valued predictors in 1..10 strongly separated by class, plus a
/// {0,1} response column named y. Used for tests and shipped presets.
void write_synthetic_logistic_csv(const std::string& path, long rows,
                                  std::uint64_t seed);

}  // namespace restore
