#include "restore/targets.hpp"

#include <cmath>
#include <memory>
#include <stdexcept>

#include "restore/rng.hpp"

namespace restore {

namespace {

double sigmoid(double t) {
  if (t >= 0.0) return 1.0 / (1.0 + std::exp(-t));
  const double e = std::exp(t);
  return e / (1.0 + e);
}

double softplus(double t) {  // log(1 + e^t)
  if (t > 0.0) return t + std::log1p(std::exp(-t));
  return std::log1p(std::exp(t));
}

}  // namespace

TargetModel std_gaussian(int dim) {
  if (dim < 1) throw std::invalid_argument("std_gaussian: dim must be >= 1");
  TargetModel t;
  t.dim = dim;
  t.log_density_unnorm = [](const Vector& x) { return -0.5 * x.squaredNorm(); };
  t.grad_energy = [](const Vector& x) { return x; };
  t.hessian_energy = [dim](const Vector&) {
    return Matrix::Identity(dim, dim);
  };
  t.laplacian_energy = [dim](const Vector&) { return double(dim); };
  return t;
}

TargetModel gaussian(const Vector& mean, const Matrix& cov) {
  const int dim = static_cast<int>(mean.size());
  if (cov.rows() != dim || cov.cols() != dim)
    throw std::invalid_argument("gaussian: covariance shape mismatch");
  Eigen::LLT<Matrix> llt(cov);
  if (llt.info() != Eigen::Success)
    throw std::invalid_argument("gaussian: covariance not positive definite");
  auto prec = std::make_shared<Matrix>(
      llt.solve(Matrix::Identity(dim, dim)));
  const double trace_prec = prec->trace();
  TargetModel t;
  t.dim = dim;
  t.log_density_unnorm = [mean, prec](const Vector& x) {
    const Vector d = x - mean;
    return -0.5 * d.dot(*prec * d);
  };
  t.grad_energy = [mean, prec](const Vector& x) -> Vector {
    return *prec * (x - mean);
  };
  t.hessian_energy = [prec](const Vector&) { return *prec; };
  t.laplacian_energy = [trace_prec](const Vector&) { return trace_prec; };
  return t;
}

TargetModel transformed_beta() {
  TargetModel t;
  t.dim = 1;
  const double log6 = std::log(6.0);
  t.log_density_unnorm = [log6](const Vector& x) {
    return log6 + 2.0 * x[0] - 4.0 * softplus(x[0]);
  };
  t.grad_energy = [](const Vector& x) {
    Vector g(1);
    g[0] = 4.0 * sigmoid(x[0]) - 2.0;
    return g;
  };
  t.hessian_energy = [](const Vector& x) {
    const double s = sigmoid(x[0]);
    Matrix h(1, 1);
    h(0, 0) = 4.0 * s * (1.0 - s);
    return h;
  };
  t.laplacian_energy = [](const Vector& x) {
    const double s = sigmoid(x[0]);
    return 4.0 * s * (1.0 - s);
  };
  return t;
}

TargetModel multivariate_t(double nu, const Vector& m, const Matrix& sigma) {
  const int dim = static_cast<int>(m.size());
  if (nu <= 0.0) throw std::invalid_argument("multivariate_t: nu must be > 0");
  if (sigma.rows() != dim || sigma.cols() != dim)
    throw std::invalid_argument("multivariate_t: scale shape mismatch");
  Eigen::LLT<Matrix> llt(sigma);
  if (llt.info() != Eigen::Success)
    throw std::invalid_argument("multivariate_t: scale not positive definite");
  auto prec = std::make_shared<Matrix>(llt.solve(Matrix::Identity(dim, dim)));
  const double trace_prec = prec->trace();
  const double c = 0.5 * (nu + dim);

  TargetModel t;
  t.dim = dim;
  t.log_density_unnorm = [m, prec, nu, c](const Vector& x) {
    const Vector d = x - m;
    const double q = d.dot(*prec * d);
    return -c * std::log1p(q / nu);
  };
  t.grad_energy = [m, prec, nu, dim](const Vector& x) -> Vector {
    const Vector d = x - m;
    const Vector pd = *prec * d;
    const double q = d.dot(pd);
    return (nu + dim) / (nu + q) * pd;
  };
  t.hessian_energy = [m, prec, nu, dim](const Vector& x) -> Matrix {
    const Vector d = x - m;
    const Vector pd = *prec * d;
    const double q = d.dot(pd);
    const double w = (nu + dim) / (nu + q);
    return w * (*prec) - (2.0 * w / (nu + q)) * (pd * pd.transpose());
  };
  t.laplacian_energy = [m, prec, nu, dim, trace_prec](const Vector& x) {
    const Vector d = x - m;
    const Vector pd = *prec * d;
    const double q = d.dot(pd);
    const double w = (nu + dim) / (nu + q);
    return w * trace_prec - (2.0 * w / (nu + q)) * pd.squaredNorm();
  };
  return t;
}

namespace {

struct MixtureComponent {
  Vector mean;
  Matrix prec;
  double log_weight_norm;  // log w_k - (d/2) log 2pi - (1/2) log det S_k
};

struct Mixture2 {
  MixtureComponent a, b;

  // Returns log pi plus the responsibilities and precision-weighted
  // deviations of both components.
  struct Eval {
    double log_pi;
    double ra, rb;
    Vector ga, gb;
  };

  Eval eval(const Vector& x) const {
    Eval e;
    e.ga = a.prec * (x - a.mean);
    e.gb = b.prec * (x - b.mean);
    const double la = a.log_weight_norm - 0.5 * (x - a.mean).dot(e.ga);
    const double lb = b.log_weight_norm - 0.5 * (x - b.mean).dot(e.gb);
    const double mx = std::max(la, lb);
    e.log_pi = mx + std::log(std::exp(la - mx) + std::exp(lb - mx));
    e.ra = std::exp(la - e.log_pi);
    e.rb = std::exp(lb - e.log_pi);
    return e;
  }
};

MixtureComponent make_component(double w, const Vector& m, const Matrix& s) {
  const int dim = static_cast<int>(m.size());
  Eigen::LLT<Matrix> llt(s);
  if (llt.info() != Eigen::Success)
    throw std::invalid_argument(
        "gaussian_mixture2: covariance not positive definite");
  MixtureComponent c;
  c.mean = m;
  c.prec = llt.solve(Matrix::Identity(dim, dim));
  double log_det = 0.0;
  for (int i = 0; i < dim; ++i) log_det += 2.0 * std::log(llt.matrixL()(i, i));
  c.log_weight_norm = std::log(w) -
                      0.5 * dim * std::log(2.0 * M_PI) - 0.5 * log_det;
  return c;
}

}  // namespace

TargetModel gaussian_mixture2(double w1, const Vector& m1, const Vector& m2,
                              const Matrix& s1, const Matrix& s2) {
  if (!(w1 > 0.0 && w1 < 1.0))
    throw std::invalid_argument("gaussian_mixture2: w1 must lie in (0,1)");
  if (m1.size() != m2.size())
    throw std::invalid_argument("gaussian_mixture2: mean dimension mismatch");
  const int dim = static_cast<int>(m1.size());
  auto mix = std::make_shared<Mixture2>();
  mix->a = make_component(w1, m1, s1);
  mix->b = make_component(1.0 - w1, m2, s2);

  TargetModel t;
  t.dim = dim;
  t.log_density_unnorm = [mix](const Vector& x) { return mix->eval(x).log_pi; };
  t.grad_energy = [mix](const Vector& x) -> Vector {
    const auto e = mix->eval(x);
    return e.ra * e.ga + e.rb * e.gb;
  };
  t.hessian_energy = [mix](const Vector& x) -> Matrix {
    const auto e = mix->eval(x);
    const Vector gbar = e.ra * e.ga + e.rb * e.gb;
    return e.ra * mix->a.prec + e.rb * mix->b.prec +
           gbar * gbar.transpose() -
           e.ra * (e.ga * e.ga.transpose()) - e.rb * (e.gb * e.gb.transpose());
  };
  t.laplacian_energy = [mix](const Vector& x) {
    const auto e = mix->eval(x);
    const Vector gbar = e.ra * e.ga + e.rb * e.gb;
    return e.ra * mix->a.prec.trace() + e.rb * mix->b.prec.trace() +
           gbar.squaredNorm() -
           e.ra * e.ga.squaredNorm() - e.rb * e.gb.squaredNorm();
  };
  return t;
}

TargetModel gaussian_mixture2_default() {
  Vector m1(2), m2(2);
  m1 << 1.05, 1.05;
  m2 << -1.05, -1.05;
  Matrix s1(2, 2), s2(2, 2);
  s1 << 1.0, -0.1, -0.1, 1.0;
  s2 << 1.0, 0.1, 0.1, 1.0;
  return gaussian_mixture2(0.4, m1, m2, s1, s2);
}

TargetModel pump_hierarchical(const std::vector<double>& failures,
                              const std::vector<double>& exposures,
                              double c1, double c2, double c3) {
  if (failures.size() != exposures.size() || failures.empty())
    throw std::invalid_argument("pump_hierarchical: data length mismatch");
  const int n = static_cast<int>(failures.size());
  const int dim = n + 1;
  auto r = std::make_shared<std::vector<double>>(failures);
  auto tt = std::make_shared<std::vector<double>>(exposures);

  // With v_i = e^{x_i} and h = e^{x_{n}} (the hyper variable), the log
  // density on the log scale, Jacobians included, is
  //   sum_i [(r_i + c1) x_i - (t_i + h) v_i] + (n c1 - c2) x_n - c3 / h.
  TargetModel t;
  t.dim = dim;
  t.log_density_unnorm = [r, tt, n, c1, c2, c3](const Vector& x) {
    const double h = std::exp(x[n]);
    double lp = (n * c1 - c2) * x[n] - c3 * std::exp(-x[n]);
    for (int i = 0; i < n; ++i) {
      lp += ((*r)[i] + c1) * x[i] - ((*tt)[i] + h) * std::exp(x[i]);
    }
    return lp;
  };
  t.grad_energy = [r, tt, n, c1, c2, c3](const Vector& x) -> Vector {
    const double h = std::exp(x[n]);
    Vector g(n + 1);
    double sum_v = 0.0;
    for (int i = 0; i < n; ++i) {
      const double v = std::exp(x[i]);
      sum_v += v;
      g[i] = -((*r)[i] + c1) + ((*tt)[i] + h) * v;
    }
    g[n] = -(n * c1 - c2) + h * sum_v - c3 * std::exp(-x[n]);
    return g;
  };
  t.hessian_energy = [tt, n, c3](const Vector& x) -> Matrix {
    const double h = std::exp(x[n]);
    Matrix hess = Matrix::Zero(n + 1, n + 1);
    double sum_v = 0.0;
    for (int i = 0; i < n; ++i) {
      const double v = std::exp(x[i]);
      sum_v += v;
      hess(i, i) = ((*tt)[i] + h) * v;
      hess(i, n) = h * v;
      hess(n, i) = h * v;
    }
    hess(n, n) = h * sum_v + c3 * std::exp(-x[n]);
    return hess;
  };
  t.laplacian_energy = [tt, n, c3](const Vector& x) {
    const double h = std::exp(x[n]);
    double lap = c3 * std::exp(-x[n]);
    for (int i = 0; i < n; ++i) {
      const double v = std::exp(x[i]);
      lap += ((*tt)[i] + h) * v + h * v;
    }
    return lap;
  };
  return t;
}

PumpData pump_default_data() {
  return PumpData{
      {5, 1, 5, 14, 3, 19, 1, 1, 4, 22},
      {94.32, 15.72, 62.88, 125.76, 5.24, 31.44, 1.048, 1.048, 2.096, 10.48}};
}

TargetModel pump_hierarchical_default() {
  const PumpData data = pump_default_data();
  return pump_hierarchical(data.failures, data.exposures);
}

namespace {

Matrix cox_prior_covariance(int grid_n) {
  const int d = grid_n * grid_n;
  Matrix cov(d, d);
  for (int k = 0; k < d; ++k) {
    const int i = k / grid_n, j = k % grid_n;
    for (int l = 0; l < d; ++l) {
      const int ii = l / grid_n, jj = l % grid_n;
      const double dist = std::hypot(double(i - ii), double(j - jj));
      cov(k, l) = std::exp(-dist / grid_n);
    }
  }
  return cov;
}

}  // namespace

TargetModel log_gaussian_cox(int grid_n, const std::vector<double>& counts) {
  if (grid_n < 1) throw std::invalid_argument("log_gaussian_cox: grid_n >= 1");
  const int dim = grid_n * grid_n;
  if (static_cast<int>(counts.size()) != dim)
    throw std::invalid_argument("log_gaussian_cox: counts must have n^2 cells");
  Eigen::LLT<Matrix> llt(cox_prior_covariance(grid_n));
  auto prec = std::make_shared<Matrix>(llt.solve(Matrix::Identity(dim, dim)));
  const double trace_prec = prec->trace();
  auto y = std::make_shared<Vector>(
      Eigen::Map<const Vector>(counts.data(), dim));
  const double area_scale = double(grid_n) * double(grid_n);

  TargetModel t;
  t.dim = dim;
  t.log_density_unnorm = [prec, y, area_scale](const Vector& x) {
    double lp = -0.5 * x.dot(*prec * x);
    for (int k = 0; k < x.size(); ++k) {
      lp += (*y)[k] * x[k] - area_scale * std::exp(x[k]);
    }
    return lp;
  };
  t.grad_energy = [prec, y, area_scale](const Vector& x) -> Vector {
    Vector g = *prec * x - *y;
    for (int k = 0; k < x.size(); ++k) g[k] += area_scale * std::exp(x[k]);
    return g;
  };
  t.hessian_energy = [prec, area_scale](const Vector& x) -> Matrix {
    Matrix h = *prec;
    for (int k = 0; k < x.size(); ++k) h(k, k) += area_scale * std::exp(x[k]);
    return h;
  };
  t.laplacian_energy = [trace_prec, area_scale](const Vector& x) {
    double lap = trace_prec;
    for (int k = 0; k < x.size(); ++k) lap += area_scale * std::exp(x[k]);
    return lap;
  };
  return t;
}

std::vector<double> simulate_log_gaussian_cox_counts(int grid_n,
                                                     std::uint64_t seed) {
  const int dim = grid_n * grid_n;
  Eigen::LLT<Matrix> llt(cox_prior_covariance(grid_n));
  Rng rng(seed);
  const Vector latent = llt.matrixL() * rng.normal_vector(dim);
  const double area_scale = double(grid_n) * double(grid_n);
  std::vector<double> counts(dim);
  for (int k = 0; k < dim; ++k) {
    const double mean = area_scale * std::exp(latent[k]);
    // Poisson by inversion; means here stay modest so this is exact and fast.
    double u = rng.uniform();
    double p = std::exp(-mean);
    double cum = p;
    long count = 0;
    while (u > cum && count < 100000) {
      ++count;
      p *= mean / double(count);
      cum += p;
    }
    counts[k] = double(count);
  }
  return counts;
}

}  // namespace restore
