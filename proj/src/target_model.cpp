#include "restore/target_model.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace restore {

void check_state(const TargetModel& target, const Vector& x) {
  if (x.size() != target.dim) {
    throw std::invalid_argument(
        "state has dimension " + std::to_string(x.size()) +
        ", target expects " + std::to_string(target.dim));
  }
  if (!x.allFinite()) {
    throw std::invalid_argument("state has non-finite components");
  }
}

double laplacian_energy(const TargetModel& target, const Vector& x) {
  if (target.laplacian_energy) return target.laplacian_energy(x);
  return target.hessian_energy(x).trace();
}

EnergyEval evaluate(const TargetModel& target, const Vector& x) {
  check_state(target, x);
  EnergyEval out;
  out.log_density = target.log_density_unnorm(x);
  out.grad = target.grad_energy(x);
  out.laplacian = laplacian_energy(target, x);
  return out;
}

}  // namespace restore
