#pragma once

#include "subvar/data/regression.hpp"

namespace subvar::engine {

/// Max-abs gap between the flat subspace posterior fit X Ā and
/// ω Φ₀ Y + (1 - ω) Φ Y, with Φ₀ the projection on the first q principal
/// components of the lag block and Φ the projection on col(X).
///
/// The right-hand side is built independently of the posterior (QR of X,
/// SVD of the lag block). Test-only; throws InapplicableIdentityError if X
/// is not of full column rank or K > T.
double convex_combination_check(const data::RegressionData& data, double omega, int q);

}  // namespace subvar::engine
