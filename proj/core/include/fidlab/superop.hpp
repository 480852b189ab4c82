#pragma once

#include <utility>

#include "fidlab/linalg.hpp"

namespace fidlab {

/// Linear map on dim×dim operators as a dim²×dim² matrix acting on
/// column-stacked vec(H) (vec index i + dim·j holds H(i, j)).
struct SuperOperator {
  int dim;
  Matrix matrix;

  Matrix apply(const Matrix& h) const;
  HermitianMatrix apply(const HermitianMatrix& h) const;
};

Vector vec(const Matrix& h);
Matrix unvec(const Vector& v, int dim);

/// S with S Z + Z S = X, for PSD Z.
HermitianMatrix lyapunov_solve(const HermitianMatrix& z, const HermitianMatrix& x);

SuperOperator lyapunov_superop(const HermitianMatrix& z);

/// Eigenvalues (ascending) and eigenvectors of S_{L1}^{1/2} S_{L0} S_{L1}^{1/2},
/// which is similar to S_{L0} ∘ S_{L1}.
Spectrum composed_lyapunov_spectrum(const HermitianMatrix& l0, const HermitianMatrix& l1);

struct FixedPoint {
  HermitianMatrix state;  // unit trace PSD
  double eigenvalue;
  int iterations;
  double residual;
};

/// Power iteration of S_{L0} ∘ S_{L1} inside the PSD cone, started at I/dim.
FixedPoint positive_fixed_point(const HermitianMatrix& l0, const HermitianMatrix& l1,
                                int max_iter = 10000, double tol = 1e-10);

/// Dimension of the unital algebra generated by a and b.
int generated_algebra_dimension(const HermitianMatrix& a, const HermitianMatrix& b);

/// True when a and b have no common nontrivial invariant subspace.
bool is_irreducible_pair(const HermitianMatrix& a, const HermitianMatrix& b);

}  // namespace fidlab
