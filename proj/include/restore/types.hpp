#pragma once

#include <Eigen/Dense>

namespace restore {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;

}  // namespace restore
