#pragma once

// Independent reference computations used only by tests. Each one avoids the
// code path it is meant to check (Kronecker linear solves instead of eigenbasis
// formulas, singular values instead of nested square roots, grids and bisection
// instead of closed forms).

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>
#include <unsupported/Eigen/KroneckerProduct>

#include "fidlab/linalg.hpp"

namespace oracle {

using fidlab::Complex;
using fidlab::HermitianMatrix;
using fidlab::Matrix;
using fidlab::Vector;

inline Matrix herm_sqrt(const Matrix& h) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(0.5 * (h + h.adjoint()));
  const double cut = 1e-11 * (1.0 + es.eigenvalues().cwiseAbs().maxCoeff());
  Eigen::VectorXd ev = es.eigenvalues().unaryExpr([cut](double v) { return v > cut ? std::sqrt(v) : 0.0; });
  return es.eigenvectors() * ev.cast<Complex>().asDiagonal() * es.eigenvectors().adjoint();
}

/// F_max as the trace norm of √X √Y.
inline double fidelity_max(const HermitianMatrix& x, const HermitianMatrix& y) {
  Eigen::JacobiSVD<Matrix> svd(herm_sqrt(x.matrix()) * herm_sqrt(y.matrix()));
  return svd.singularValues().sum();
}

/// F_min = tr(Y # X) for PD inputs, computed with the roles of X and Y swapped
/// (X # Y = Y # X).
inline double fidelity_min_pd(const HermitianMatrix& x, const HermitianMatrix& y) {
  const Matrix sx = herm_sqrt(x.matrix());
  const Matrix sxi = sx.inverse();
  const Matrix g = sx * herm_sqrt(sxi * y.matrix() * sxi) * sx;
  return g.trace().real();
}

/// Solves S Z + Z S = X through the Kronecker linear system.
inline Matrix lyapunov_kron(const Matrix& z, const Matrix& x) {
  const int d = static_cast<int>(z.rows());
  const Matrix id = Matrix::Identity(d, d);
  const Matrix op = Eigen::kroneckerProduct(id, z).eval() + Eigen::kroneckerProduct(z.transpose(), id).eval();
  const Vector v = Eigen::Map<const Vector>(x.data(), d * d);
  const Vector s = op.fullPivLu().solve(v);
  return Eigen::Map<const Matrix>(s.data(), d, d);
}

/// Eigenvalues of the non-Hermitian product S_{L0} S_{L1} built from Kronecker inverses.
inline Eigen::VectorXd composed_spectrum(const Matrix& l0, const Matrix& l1) {
  const int d = static_cast<int>(l0.rows());
  const Matrix id = Matrix::Identity(d, d);
  auto sop = [&](const Matrix& z) {
    Matrix op = Eigen::kroneckerProduct(id, z).eval() + Eigen::kroneckerProduct(z.transpose(), id).eval();
    return Matrix(op.inverse());
  };
  Eigen::ComplexEigenSolver<Matrix> es(sop(l0) * sop(l1));
  Eigen::VectorXd ev = es.eigenvalues().real();
  std::sort(ev.data(), ev.data() + ev.size());
  return ev;
}

/// Largest s with [[2L0/s, −I], [−I, 2L1/s]] ≥ 0, by bisection on the block eigenvalue.
inline double polar_max_bisection(const Matrix& l0, const Matrix& l1) {
  const int d = static_cast<int>(l0.rows());
  auto member = [&](double s) {
    Matrix block(2 * d, 2 * d);
    block << 2.0 * l0 / s, -Matrix::Identity(d, d), -Matrix::Identity(d, d), 2.0 * l1 / s;
    Eigen::SelfAdjointEigenSolver<Matrix> es(block, Eigen::EigenvaluesOnly);
    return es.eigenvalues()(0) >= 0.0;
  };
  double lo = 0.0, hi = 1.0;
  while (member(hi)) hi *= 2.0;
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (member(mid)) lo = mid;
    else hi = mid;
  }
  return 0.5 * (lo + hi);
}

/// Qubit polar_min by a Bloch-sphere grid with local refinement.
inline double polar_min_bloch(const Matrix& l0, const Matrix& l1, int grid = 400) {
  auto value = [&](double th, double ph) {
    Vector psi(2);
    psi << std::cos(th / 2), std::polar(std::sin(th / 2), ph);
    const double a = (psi.adjoint() * l0 * psi)(0, 0).real();
    const double b = (psi.adjoint() * l1 * psi)(0, 0).real();
    return 2.0 * std::sqrt(std::max(a * b, 0.0));
  };
  const double pi = std::numbers::pi;
  double best = 1e300, bt = 0, bp = 0;
  for (int i = 0; i <= grid; ++i)
    for (int j = 0; j < 2 * grid; ++j) {
      const double th = pi * i / grid, ph = pi * j / grid;
      const double v = value(th, ph);
      if (v < best) best = v, bt = th, bp = ph;
    }
  double h = pi / grid;
  for (int round = 0; round < 60; ++round) {
    bool improved = false;
    for (int a = -1; a <= 1; ++a)
      for (int b = -1; b <= 1; ++b) {
        const double v = value(bt + a * h, bp + b * h);
        if (v < best) best = v, bt += a * h, bp += b * h, improved = true;
      }
    if (!improved) h *= 0.5;
  }
  return best;
}

/// min_t λ_min(t L0 + L1 / t) on a dense log grid with golden refinement.
inline double polar_min_tscan(const HermitianMatrix& l0, const HermitianMatrix& l1) {
  auto g = [&](double logt) {
    const double t = std::exp(logt);
    Eigen::SelfAdjointEigenSolver<Matrix> es(t * l0.matrix() + l1.matrix() / t, Eigen::EigenvaluesOnly);
    return es.eigenvalues()(0);
  };
  const int n = 4000;
  const double lo = -8, hi = 8;
  double best = 1e300, bx = 0;
  for (int i = 0; i <= n; ++i) {
    const double x = lo + (hi - lo) * i / n;
    const double v = g(x);
    if (v < best) best = v, bx = x;
  }
  double a = bx - (hi - lo) / n, b = bx + (hi - lo) / n;
  const double r = (std::sqrt(5.0) - 1) / 2;
  for (int it = 0; it < 200; ++it) {
    const double c = b - r * (b - a), d = a + r * (b - a);
    if (g(c) < g(d)) b = d;
    else a = c;
  }
  return std::min(best, g(0.5 * (a + b)));
}

/// Central finite-difference directional derivative.
inline double directional_derivative(const std::function<double(double)>& f, double h = 1e-5) {
  return (f(h) - f(-h)) / (2 * h);
}

}  // namespace oracle
