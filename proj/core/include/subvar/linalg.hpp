#pragma once

#include <string_view>

#include "subvar/types.hpp"

namespace subvar {

/// Lower Cholesky factor of a symmetric positive definite matrix.
///
/// Symmetrizes the input first. Throws NumericalError naming `what` and
/// reporting the smallest eigenvalue when the factorization fails.
Matrix cholesky_lower(const Matrix& a, std::string_view what);

/// log|A| from a lower Cholesky factor.
double logdet_from_cholesky(const Matrix& lower);

/// log|A| of a symmetric positive definite matrix.
double logdet_spd(const Matrix& a, std::string_view what);

inline Matrix symmetrized(const Matrix& a) { return 0.5 * (a + a.transpose()); }

/// Solves (L L') X = B for a lower Cholesky factor L.
Matrix cholesky_solve(const Matrix& lower, const Matrix& rhs);

/// log Γ_M(a), the multivariate gamma function.
double log_multivariate_gamma(double a, int dim);

/// Numerically stable log(sum(exp(values))).
double log_sum_exp(const Vector& values);

double max_abs(const Matrix& a);

}  // namespace subvar
