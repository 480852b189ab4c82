#pragma once

#include <cstdint>

#include "fidlab/fidelity.hpp"
#include "fidlab/linalg.hpp"

namespace fidlab {

struct Certificate {
  Kind kind;
  double primal_value;
  double dual_value;
  bool primal_feasible;
  bool dual_feasible;
  double gap;

  bool valid() const;
};

/// [[X, C], [C†, Y]] ≥ 0, decided through the generalized Schur complement.
bool block_psd(const HermitianMatrix& x, const Matrix& c, const HermitianMatrix& y);

/// [[2 L0, −I], [−I, 2 L1]] ≥ 0 by a direct eigenvalue check.
bool mfmax_membership(const HermitianMatrix& l0, const HermitianMatrix& l1);

/// Sampled check that tr L0 X' + tr L1 Y' ≥ F(X', Y') on `samples` random PSD
/// pairs plus rank-one probes along the eigenvectors of L0 and the standard basis.
bool holder_feasible(Kind kind, const HermitianMatrix& l0, const HermitianMatrix& l1,
                     int samples = 100, std::uint64_t seed = 0, double tol = 1e-7);

/// Analytic primal optimizer paired with the analytic dual optimizer.
Certificate duality_certificate(Kind kind, const HermitianMatrix& x, const HermitianMatrix& y,
                                std::uint64_t seed = 0);

/// Primal variable of the SDP for each kind (for kind half it acts on dim² space).
Matrix primal_optimizer(Kind kind, const HermitianMatrix& x, const HermitianMatrix& y);

}  // namespace fidlab
