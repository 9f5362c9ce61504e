#pragma once

#include <functional>

#include "restore/types.hpp"

namespace restore {

/// An unnormalized target distribution on R^d, described through its energy
/// U = -log pi. All built-in targets have full support and hand-coded
/// derivatives; grad_energy and hessian_energy refer to U, not log pi.
struct TargetModel {
  int dim = 0;
  std::function<double(const Vector&)> log_density_unnorm;  // log pi~
  std::function<Vector(const Vector&)> grad_energy;         // grad U
  std::function<Matrix(const Vector&)> hessian_energy;      // hess U
  /// Optional shortcut for trace(hessian_energy); targets with structure
  /// (logistic, Cox, pump) supply an O(d) or O(nd) version. When unset the
  /// trace of the full Hessian is taken.
  std::function<double(const Vector&)> laplacian_energy;
};

struct EnergyEval {
  double log_density = 0.0;  // log pi~(x)
  Vector grad;               // grad U(x)
  double laplacian = 0.0;    // Delta U(x)
};

/// Laplacian of the energy, via the shortcut when available.
double laplacian_energy(const TargetModel& target, const Vector& x);

/// Evaluates (log pi~, grad U, Delta U) at x. Throws on dimension mismatch or
/// non-finite input.
EnergyEval evaluate(const TargetModel& target, const Vector& x);

/// Throws std::invalid_argument unless x is finite and of the target's
/// dimension.
void check_state(const TargetModel& target, const Vector& x);

}  // namespace restore
