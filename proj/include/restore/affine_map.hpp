#pragma once

#include <string>

#include "restore/target_model.hpp"

#include "json.hpp"

namespace restore {

/// Affine change of variables x = L x' + m built from a Laplace
/// approximation: m is the mode of the target, L = Sigma^{1/2} with
/// Sigma = hessian_energy(m)^{-1}.
struct AffineMap {
  Vector mode;            // m
  Matrix factor;          // L = V Lambda^{1/2}
  Matrix inverse_factor;  // L^{-1}
  double log_abs_det = 0.0;

  int dim() const { return static_cast<int>(mode.size()); }
  Vector to_original(const Vector& transformed) const {
    return factor * transformed + mode;
  }
  Vector to_transformed(const Vector& original) const {
    return inverse_factor * (original - mode);
  }
};

AffineMap identity_map(int dim);

/// Finds the mode of the target by damped Newton iteration from `init`
/// (falling back to gradient steps when the Hessian is indefinite at an
/// iterate) and factors the Hessian there. Throws when the optimizer fails to
/// reach |grad U| < 1e-6 within max_iter iterations or when the Hessian at
/// the located mode is not positive definite.
AffineMap laplace_approximate(const TargetModel& target, const Vector& init,
                              int max_iter = 200);

/// Rewrites the target in transformed coordinates:
///   U'(x') = U(L x' + m) - log|det L|,
///   grad U'(x') = L^T grad U(L x' + m),
///   hess U'(x') = L^T H(L x' + m) L.
TargetModel transform_target(const TargetModel& target, const AffineMap& map);

nlohmann::json affine_map_to_json(const AffineMap& map);
AffineMap affine_map_from_json(const nlohmann::json& j);

void save_affine_map(const AffineMap& map, const std::string& path);
AffineMap load_affine_map(const std::string& path);

}  // namespace restore
