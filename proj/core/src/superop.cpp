#include "fidlab/superop.hpp"

#include <cmath>
#include <string>
#include <vector>

#include <unsupported/Eigen/KroneckerProduct>

#include "fidlab/error.hpp"
#include "fidlab/tolerances.hpp"

namespace fidlab {

Vector vec(const Matrix& h) { return Eigen::Map<const Vector>(h.data(), h.size()); }

Matrix unvec(const Vector& v, int dim) { return Eigen::Map<const Matrix>(v.data(), dim, dim); }

Matrix SuperOperator::apply(const Matrix& h) const {
  if (h.rows() != dim || h.cols() != dim) {
    throw Error(ErrorCode::DimensionMismatch, "superoperator applied to wrong dimension");
  }
  return unvec(matrix * vec(h), dim);
}

HermitianMatrix SuperOperator::apply(const HermitianMatrix& h) const {
  return HermitianMatrix(apply(h.matrix()));
}

HermitianMatrix lyapunov_solve(const HermitianMatrix& z, const HermitianMatrix& x) {
  require_same_dim(z, x);
  require_psd(z, "lyapunov_solve Z");
  const Spectrum s = eigh(z);
  const int d = z.dim();
  const double zcut = tol::rank(s.values.cwiseAbs().maxCoeff());
  const double xcut = tol::rank(x.max_abs());
  Matrix xt = s.vectors.adjoint() * x.matrix() * s.vectors;
  for (int j = 0; j < d; ++j) {
    for (int i = 0; i < d; ++i) {
      const double den = s.values(i) + s.values(j);
      if (den > zcut) {
        xt(i, j) /= den;
      } else if (std::abs(xt(i, j)) > xcut) {
        throw Error(ErrorCode::SingularPair, "no solution: λ_" + std::to_string(i) + " + λ_" +
                                                 std::to_string(j) + " vanishes");
      } else {
        xt(i, j) = 0.0;
      }
    }
  }
  return HermitianMatrix(s.vectors * xt * s.vectors.adjoint());
}

namespace {

// Eigenbasis data of S_Z: S_Z = W diag(1/(λi+λj)) W†, with W = conj(V) ⊗ V.
struct LyapunovBasis {
  Matrix w;
  RealVector inv_sums;
};

LyapunovBasis lyapunov_basis(const HermitianMatrix& z) {
  require_positive_definite(z, "Lyapunov operator argument");
  const Spectrum s = eigh(z);
  const int d = z.dim();
  LyapunovBasis b;
  b.w = Eigen::kroneckerProduct(s.vectors.conjugate(), s.vectors).eval();
  b.inv_sums.resize(d * d);
  for (int j = 0; j < d; ++j)
    for (int i = 0; i < d; ++i) b.inv_sums(i + d * j) = 1.0 / (s.values(i) + s.values(j));
  return b;
}

Matrix assemble(const LyapunovBasis& b, const RealVector& diag) {
  return b.w * diag.cast<Complex>().asDiagonal() * b.w.adjoint();
}

}  // namespace

SuperOperator lyapunov_superop(const HermitianMatrix& z) {
  const LyapunovBasis b = lyapunov_basis(z);
  Matrix m = assemble(b, b.inv_sums);
  m = 0.5 * (m + m.adjoint());
  return {z.dim(), m};
}

Spectrum composed_lyapunov_spectrum(const HermitianMatrix& l0, const HermitianMatrix& l1) {
  require_same_dim(l0, l1);
  const LyapunovBasis b0 = lyapunov_basis(l0);
  const LyapunovBasis b1 = lyapunov_basis(l1);
  const Matrix s0 = assemble(b0, b0.inv_sums);
  const Matrix s1_half = assemble(b1, b1.inv_sums.cwiseSqrt());
  const HermitianMatrix h(s1_half * s0 * s1_half);
  return eigh(h);
}

FixedPoint positive_fixed_point(const HermitianMatrix& l0, const HermitianMatrix& l1, int max_iter,
                                double tol) {
  require_same_dim(l0, l1);
  require_positive_definite(l0, "L0");
  require_positive_definite(l1, "L1");
  const int d = l0.dim();
  HermitianMatrix a = HermitianMatrix::identity(d) * (1.0 / d);
  double alpha = 0.0, residual = 0.0;
  for (int it = 1; it <= max_iter; ++it) {
    const HermitianMatrix next = lyapunov_solve(l0, lyapunov_solve(l1, a));
    alpha = next.trace();
    residual = (next.matrix() - alpha * a.matrix()).norm();
    a = next * (1.0 / alpha);
    if (residual < tol) return {a, alpha, it, residual};
  }
  throw Error(ErrorCode::NoConvergence,
              "power iteration stalled at residual " + std::to_string(residual));
}

int generated_algebra_dimension(const HermitianMatrix& a, const HermitianMatrix& b) {
  require_same_dim(a, b);
  const int d = a.dim();
  const double cut = 1e-9;
  std::vector<Matrix> basis;   // orthonormal in Hilbert–Schmidt
  std::vector<Matrix> frontier;

  auto try_add = [&](Matrix m) {
    for (const auto& q : basis) m -= (q.adjoint() * m).trace() * q;
    const double n = m.norm();
    if (n <= cut) return false;
    basis.push_back(m / n);
    return true;
  };

  // Generators are rescaled so the cutoff is scale-free.
  const Matrix ga = a.matrix() / std::max(a.max_abs(), 1e-300);
  const Matrix gb = b.matrix() / std::max(b.max_abs(), 1e-300);
  Matrix id = Matrix::Identity(d, d);
  if (try_add(id)) frontier.push_back(basis.back());
  while (!frontier.empty() && static_cast<int>(basis.size()) < d * d) {
    std::vector<Matrix> next;
    for (const auto& w : frontier) {
      for (const Matrix* g : {&ga, &gb}) {
        if (try_add(*g * w)) next.push_back(basis.back());
      }
    }
    frontier = std::move(next);
  }
  return static_cast<int>(basis.size());
}

bool is_irreducible_pair(const HermitianMatrix& a, const HermitianMatrix& b) {
  return generated_algebra_dimension(a, b) == a.dim() * a.dim();
}

}  // namespace fidlab
