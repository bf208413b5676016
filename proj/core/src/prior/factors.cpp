#include "subvar/prior/factors.hpp"

#include <algorithm>
#include <sstream>

#include "subvar/errors.hpp"
#include "subvar/linalg.hpp"

namespace subvar::prior {

FactorBasis principal_components(const Matrix& X, int q) {
  const Index bound = std::min(X.rows(), X.cols());
  if (q < 1 || q > bound) {
    throw ArgumentError("number of factors " + std::to_string(q) + " outside [1, " +
                        std::to_string(bound) + "]");
  }
  if (!X.allFinite()) throw ArgumentError("principal_components: non-finite input");
  Eigen::BDCSVD<Matrix> svd(X, Eigen::ComputeThinU | Eigen::ComputeThinV);
  FactorBasis basis;
  basis.q = q;
  basis.singular_values = svd.singularValues();
  basis.F = svd.matrixU().leftCols(q);
  basis.L = svd.matrixV().leftCols(q) * svd.singularValues().head(q).asDiagonal();
  return basis;
}

Projection projection_matrix(const Matrix& F) {
  if (F.cols() == 0 || F.cols() > F.rows()) {
    throw NumericalError("projection basis must have between 1 and rows columns");
  }
  Eigen::JacobiSVD<Matrix> svd(F, Eigen::ComputeThinU);
  const Vector& s = svd.singularValues();
  if (!(s(0) > 0.0) || s(s.size() - 1) <= 1e-10 * s(0)) {
    std::ostringstream msg;
    msg << "projection basis is numerically rank deficient (singular values "
        << s(s.size() - 1) << " / " << s(0) << ")";
    throw NumericalError(msg.str());
  }
  Projection out;
  out.rank = static_cast<int>(F.cols());
  out.P = svd.matrixU() * svd.matrixU().transpose();
  return out;
}

double shrinkage_ratio(double omega) {
  if (!(omega >= 0.0) || omega > 0.99) {
    throw ArgumentError("subspace weight ω = " + std::to_string(omega) +
                        " outside [0, 0.99]");
  }
  return omega / (1.0 - omega);
}

Matrix subspace_precision(const Matrix& X, const Projection& phi0, double omega) {
  const double c = shrinkage_ratio(omega);
  if (phi0.P.rows() != X.rows()) {
    throw ArgumentError("projection dimension does not match rows of X");
  }
  if (c == 0.0) return Matrix::Zero(X.cols(), X.cols());
  const Matrix residual = X - phi0.P * X;
  return symmetrized(c * (X.transpose() * residual));
}

SubspaceCache::SubspaceCache(const data::RegressionData& data, int max_q) {
  const Matrix lags = data.lag_block();
  xtx_ = symmetrized(data.X.transpose() * data.X);
  Eigen::BDCSVD<Matrix> svd(lags, Eigen::ComputeThinU);
  singular_values_ = svd.singularValues();
  const int cap = std::clamp(max_q, 0, static_cast<int>(singular_values_.size()));
  left_ = svd.matrixU().leftCols(cap);
  const Matrix xtf = data.X.transpose() * left_;
  grams_.reserve(static_cast<std::size_t>(cap) + 1);
  grams_.push_back(xtx_);
  for (int q = 1; q <= cap; ++q) {
    const auto block = xtf.leftCols(q);
    grams_.push_back(symmetrized(xtx_ - block * block.transpose()));
  }
}

const Matrix& SubspaceCache::residual_gram(int q) const {
  if (q < 0 || q > max_q()) {
    throw ArgumentError("number of factors " + std::to_string(q) + " outside cached range [0, " +
                        std::to_string(max_q()) + "]");
  }
  return grams_[static_cast<std::size_t>(q)];
}

}  // namespace subvar::prior
