#include "restore/logistic_regression.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <memory>
#include <set>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "restore/rng.hpp"

namespace restore {

namespace {

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> fields;
  std::string field;
  std::stringstream ss(line);
  while (std::getline(ss, field, ',')) fields.push_back(field);
  if (!line.empty() && line.back() == ',') fields.push_back("");
  return fields;
}

double softplus(double t) {
  if (t > 0.0) return t + std::log1p(std::exp(-t));
  return std::log1p(std::exp(t));
}

double sigmoid(double t) {
  if (t >= 0.0) return 1.0 / (1.0 + std::exp(-t));
  const double e = std::exp(t);
  return e / (1.0 + e);
}

}  // namespace

LogisticDataset prepare_logistic_dataset(const Matrix& raw,
                                         const Vector& responses) {
  const long n = raw.rows();
  const long p = raw.cols();
  if (responses.size() != n)
    throw std::runtime_error("logistic data: row count mismatch");
  if (n < 2) throw std::runtime_error("logistic data: need at least two rows");

  Matrix out(n, p + 1);
  for (long j = 0; j < p; ++j) {
    const Vector col = raw.col(j);
    std::set<double> values(col.data(), col.data() + n);
    const double mean = col.mean();
    if (values.size() < 2) {
      throw std::runtime_error("logistic data: predictor column " +
                               std::to_string(j) + " is constant");
    }
    if (values.size() == 2) {
      // Binary predictor: mean 0, range 1.
      const double range = *values.rbegin() - *values.begin();
      out.col(j) = (col.array() - mean) / range;
    } else {
      // Continuous predictor: mean 0, standard deviation 0.5.
      const double sd =
          std::sqrt((col.array() - mean).square().sum() / double(n - 1));
      out.col(j) = (col.array() - mean) / (2.0 * sd);
    }
  }
  out.col(p).setOnes();

  LogisticDataset data;
  data.predictors = std::move(out);
  data.responses = responses;
  return data;
}

LogisticDataset load_logistic_dataset(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open dataset file: " + path);

  std::string line;
  if (!std::getline(in, line))
    throw std::runtime_error("dataset file is empty: " + path);
  const auto header = split_csv_line(line);
  long response_col = -1;
  for (size_t j = 0; j < header.size(); ++j) {
    if (header[j] == "y") response_col = static_cast<long>(j);
  }
  if (response_col < 0)
    throw std::runtime_error("dataset has no response column named 'y'");
  const long n_cols = static_cast<long>(header.size());

  std::vector<std::vector<double>> rows;
  std::vector<double> resp_raw;
  long line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    const auto fields = split_csv_line(line);
    if (static_cast<long>(fields.size()) != n_cols)
      throw std::runtime_error("malformed row " + std::to_string(line_no) +
                               ": expected " + std::to_string(n_cols) +
                               " fields, got " +
                               std::to_string(fields.size()));
    std::vector<double> row;
    for (long j = 0; j < n_cols; ++j) {
      double v;
      try {
        size_t pos = 0;
        v = std::stod(fields[j], &pos);
        if (pos != fields[j].size()) throw std::invalid_argument(fields[j]);
      } catch (const std::exception&) {
        throw std::runtime_error("malformed row " + std::to_string(line_no) +
                                 ": cannot parse field '" + fields[j] + "'");
      }
      if (j == response_col) {
        resp_raw.push_back(v);
      } else {
        row.push_back(v);
      }
    }
    rows.push_back(std::move(row));
  }
  const long n = static_cast<long>(rows.size());
  if (n < 2) throw std::runtime_error("dataset has fewer than two data rows");

  Vector responses(n);
  for (long i = 0; i < n; ++i) {
    const double v = resp_raw[i];
    if (v == -1.0 || v == 1.0) {
      responses[i] = v;
    } else if (v == 0.0) {
      responses[i] = -1.0;
    } else {
      throw std::runtime_error("non-binary response in row " +
                               std::to_string(i + 2) + ": " +
                               std::to_string(v));
    }
  }

  Matrix raw(n, n_cols - 1);
  for (long i = 0; i < n; ++i)
    for (long j = 0; j < n_cols - 1; ++j) raw(i, j) = rows[i][j];
  return prepare_logistic_dataset(raw, responses);
}

TargetModel logistic_posterior(const LogisticDataset& data, double prior_var) {
  if (prior_var <= 0.0)
    throw std::invalid_argument("logistic_posterior: prior_var must be > 0");
  const int dim = data.dim();
  auto x = std::make_shared<Matrix>(data.predictors);
  auto y = std::make_shared<Vector>(data.responses);
  auto row_sq_norms = std::make_shared<Vector>(x->rowwise().squaredNorm());
  const double inv_var = 1.0 / prior_var;

  TargetModel t;
  t.dim = dim;
  t.log_density_unnorm = [x, y, inv_var](const Vector& beta) {
    const Vector z = y->cwiseProduct(*x * beta);
    double ll = 0.0;
    for (long i = 0; i < z.size(); ++i) ll -= softplus(-z[i]);
    return ll - 0.5 * inv_var * beta.squaredNorm();
  };
  t.grad_energy = [x, y, inv_var](const Vector& beta) -> Vector {
    const Vector z = y->cwiseProduct(*x * beta);
    Vector w(z.size());
    for (long i = 0; i < z.size(); ++i) w[i] = sigmoid(-z[i]);
    return -x->transpose() * y->cwiseProduct(w) + inv_var * beta;
  };
  t.hessian_energy = [x, y, inv_var, dim](const Vector& beta) -> Matrix {
    const Vector z = y->cwiseProduct(*x * beta);
    Vector w(z.size());
    for (long i = 0; i < z.size(); ++i) {
      const double s = sigmoid(z[i]);
      w[i] = s * (1.0 - s);
    }
    return x->transpose() * w.asDiagonal() * (*x) +
           inv_var * Matrix::Identity(dim, dim);
  };
  t.laplacian_energy = [x, y, row_sq_norms, inv_var, dim](const Vector& beta) {
    const Vector z = y->cwiseProduct(*x * beta);
    double lap = dim * inv_var;
    for (long i = 0; i < z.size(); ++i) {
      const double s = sigmoid(z[i]);
      lap += s * (1.0 - s) * (*row_sq_norms)[i];
    }
    return lap;
  };
  return t;
}

void write_synthetic_logistic_csv(const std::string& path, long rows,
                                  std::uint64_t seed) {
  Rng rng(seed);
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write dataset file: " + path);
  out << "f1,f2,f3,f4,f5,f6,f7,f8,f9,y\n";
  // Feature loadings vary so the class boundary is not axis-aligned.
  const double loading[9] = {1.4, 0.9, 1.2, 0.6, 1.5, 0.8, 1.1, 0.7, 1.3};
  for (long i = 0; i < rows; ++i) {
    const bool malignant = rng.uniform() < 0.35;
    const double cls = malignant ? 1.0 : -1.0;
    for (int j = 0; j < 9; ++j) {
      const double u = loading[j] * (1.1 * cls + 0.8 * rng.normal());
      int v = 1 + static_cast<int>(std::lround(4.5 * (1.0 + std::tanh(u))));
      v = std::max(1, std::min(10, v));
      out << v << ',';
    }
    out << (malignant ? 1 : 0) << '\n';
  }
}

}  // namespace restore
