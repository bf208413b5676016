#pragma once

#include <cstdint>

#include "subvar/types.hpp"

namespace subvar::sim {

struct DgpSpec {
  int M = 10;
  int q_true = 3;
  int T = 500;
  std::uint64_t seed = 0;
  double loading_sd = 0.1;
  double chol_offdiag_sd = 0.1;
  double chol_diag = 0.1;
};

/// Throws ArgumentError unless 1 <= q_true <= M and T >= 10.
void validate(const DgpSpec& spec);

struct SyntheticPanel {
  Matrix data;      // T x M
  Matrix loadings;  // M x q_true, unit diagonal
  Matrix factors;   // T x q_true, row t is the factor loaded into data row t; row 0 is f_0 = 0
  Matrix A0_inv;    // M x M lower Cholesky factor of the error covariance
  Matrix omega;     // q_true x q_true factor innovation covariance
};

/// y_t = Λ f_{t-1} + A0⁻¹ z_t with random-walk factors f_t = f_{t-1} + η_t,
/// η_t ~ N(0, Ω) and Ω = GG'/q + 0.1·I for a standard normal q x q matrix G.
/// Everything is drawn from the "dgp" substream of spec.seed.
SyntheticPanel simulate_dgp(const DgpSpec& spec);

}  // namespace subvar::sim
