#include "subvar/linalg.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "subvar/errors.hpp"

namespace subvar {

Matrix cholesky_lower(const Matrix& a, std::string_view what) {
  const Matrix sym = symmetrized(a);
  Eigen::LLT<Matrix> llt(sym);
  if (llt.info() != Eigen::Success || !llt.matrixL().toDenseMatrix().allFinite()) {
    std::ostringstream msg;
    msg << what << " is not positive definite";
    if (sym.allFinite()) {
      Eigen::SelfAdjointEigenSolver<Matrix> eig(sym, Eigen::EigenvaluesOnly);
      msg << " (smallest eigenvalue " << eig.eigenvalues().minCoeff() << ")";
    } else {
      msg << " (contains non-finite entries)";
    }
    throw NumericalError(msg.str());
  }
  return llt.matrixL();
}

double logdet_from_cholesky(const Matrix& lower) {
  return 2.0 * lower.diagonal().array().log().sum();
}

double logdet_spd(const Matrix& a, std::string_view what) {
  return logdet_from_cholesky(cholesky_lower(a, what));
}

Matrix cholesky_solve(const Matrix& lower, const Matrix& rhs) {
  const auto l = lower.triangularView<Eigen::Lower>();
  Matrix z = l.solve(rhs);
  l.transpose().solveInPlace(z);
  return z;
}

double log_multivariate_gamma(double a, int dim) {
  double out = 0.25 * dim * (dim - 1) * std::log(std::numbers::pi);
  for (int j = 0; j < dim; ++j) out += std::lgamma(a - 0.5 * j);
  return out;
}

double log_sum_exp(const Vector& values) {
  const double top = values.maxCoeff();
  if (!std::isfinite(top)) return top;
  return top + std::log((values.array() - top).exp().sum());
}

double max_abs(const Matrix& a) {
  return a.size() == 0 ? 0.0 : a.cwiseAbs().maxCoeff();
}

}  // namespace subvar
