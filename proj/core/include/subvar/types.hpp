#pragma once

#include <Eigen/Dense>

namespace subvar {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;
using Index = Eigen::Index;

}  // namespace subvar
