#include "fidlab/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include <Eigen/Eigenvalues>

#include "fidlab/error.hpp"
#include "fidlab/tolerances.hpp"

namespace fidlab {

HermitianMatrix::HermitianMatrix(const Matrix& m) {
  if (m.rows() != m.cols() || m.rows() == 0) {
    throw Error(ErrorCode::DimensionMismatch,
                "expected a non-empty square matrix, got " + std::to_string(m.rows()) + "x" +
                    std::to_string(m.cols()));
  }
  m_ = 0.5 * (m + m.adjoint());
}

HermitianMatrix HermitianMatrix::identity(int dim) {
  return HermitianMatrix(Matrix::Identity(dim, dim));
}

HermitianMatrix HermitianMatrix::zero(int dim) { return HermitianMatrix(Matrix::Zero(dim, dim)); }

HermitianMatrix HermitianMatrix::diagonal(std::span<const double> entries) {
  const int n = static_cast<int>(entries.size());
  Matrix m = Matrix::Zero(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = entries[i];
  return HermitianMatrix(m);
}

HermitianMatrix HermitianMatrix::diagonal(std::initializer_list<double> entries) {
  return diagonal(std::span<const double>(entries.begin(), entries.size()));
}

HermitianMatrix HermitianMatrix::projector(const Vector& v) {
  return HermitianMatrix(v * v.adjoint());
}

double HermitianMatrix::norm() const {
  Eigen::SelfAdjointEigenSolver<Matrix> es(m_, Eigen::EigenvaluesOnly);
  return es.eigenvalues().cwiseAbs().maxCoeff();
}

HermitianMatrix HermitianMatrix::operator+(const HermitianMatrix& o) const {
  require_same_dim(*this, o);
  return HermitianMatrix(m_ + o.m_);
}

HermitianMatrix HermitianMatrix::operator-(const HermitianMatrix& o) const {
  require_same_dim(*this, o);
  return HermitianMatrix(m_ - o.m_);
}

HermitianMatrix HermitianMatrix::operator-() const { return HermitianMatrix(-m_); }

HermitianMatrix HermitianMatrix::operator*(double s) const { return HermitianMatrix(s * m_); }

OperatorPair::OperatorPair(HermitianMatrix a, HermitianMatrix b)
    : first(std::move(a)), second(std::move(b)) {
  require_same_dim(first, second);
  require_psd(first, "first");
  require_psd(second, "second");
}

Spectrum eigh(const HermitianMatrix& h) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(h.matrix());
  if (es.info() != Eigen::Success) {
    throw Error(ErrorCode::NoConvergence, "Hermitian eigensolver failed");
  }
  return Spectrum{es.eigenvalues(), es.eigenvectors()};
}

HermitianMatrix apply_function(const Spectrum& s, const std::function<double(double)>& f) {
  RealVector fv(s.size());
  for (int i = 0; i < s.size(); ++i) fv(i) = f(s.values(i));
  return HermitianMatrix(s.vectors * fv.cast<Complex>().asDiagonal() * s.vectors.adjoint());
}

double min_eigenvalue(const HermitianMatrix& h) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(h.matrix(), Eigen::EigenvaluesOnly);
  return es.eigenvalues()(0);
}

double max_eigenvalue(const HermitianMatrix& h) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(h.matrix(), Eigen::EigenvaluesOnly);
  return es.eigenvalues()(h.dim() - 1);
}

namespace {

struct EigSummary {
  double lo;
  double norm;
};

EigSummary summarize(const HermitianMatrix& h) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(h.matrix(), Eigen::EigenvaluesOnly);
  const auto& ev = es.eigenvalues();
  return {ev(0), std::max(std::abs(ev(0)), std::abs(ev(ev.size() - 1)))};
}

}  // namespace

bool is_psd(const HermitianMatrix& h) {
  auto s = summarize(h);
  return s.lo >= -tol::psd(s.norm);
}

bool is_positive_definite(const HermitianMatrix& h) {
  auto s = summarize(h);
  return s.lo > tol::rank(s.norm);
}

void require_psd(const HermitianMatrix& h, const char* what) {
  auto s = summarize(h);
  if (s.lo < -tol::psd(s.norm)) {
    throw Error(ErrorCode::NotPsd,
                std::string(what) + " has eigenvalue " + std::to_string(s.lo));
  }
}

void require_positive_definite(const HermitianMatrix& h, const char* what) {
  auto s = summarize(h);
  if (!(s.lo > tol::rank(s.norm))) {
    throw Error(ErrorCode::NotPositiveDefinite,
                std::string(what) + " has smallest eigenvalue " + std::to_string(s.lo));
  }
}

void require_same_dim(const HermitianMatrix& a, const HermitianMatrix& b) {
  if (a.dim() != b.dim()) {
    throw Error(ErrorCode::DimensionMismatch,
                std::to_string(a.dim()) + " vs " + std::to_string(b.dim()));
  }
}

HermitianMatrix psd_sqrt(const HermitianMatrix& h) {
  Spectrum s = eigh(h);
  const double norm = s.values.cwiseAbs().maxCoeff();
  if (s.values(0) < -tol::psd(norm)) {
    throw Error(ErrorCode::NotPsd, "psd_sqrt: eigenvalue " + std::to_string(s.values(0)));
  }
  // Eigenvalues within the rank tolerance are treated as exact zeros; the square
  // root would otherwise turn O(eps) noise into O(sqrt eps) errors.
  const double cut = tol::rank(norm);
  return apply_function(s, [cut](double x) { return x > cut ? std::sqrt(x) : 0.0; });
}

HermitianMatrix pinv(const HermitianMatrix& h) {
  Spectrum s = eigh(h);
  const double cut = tol::rank(s.values.cwiseAbs().maxCoeff());
  return apply_function(s, [cut](double x) { return std::abs(x) > cut ? 1.0 / x : 0.0; });
}

HermitianMatrix psd_inv_sqrt(const HermitianMatrix& h) {
  Spectrum s = eigh(h);
  const double norm = s.values.cwiseAbs().maxCoeff();
  if (s.values(0) < -tol::psd(norm)) {
    throw Error(ErrorCode::NotPsd, "psd_inv_sqrt: eigenvalue " + std::to_string(s.values(0)));
  }
  const double cut = tol::rank(norm);
  return apply_function(s, [cut](double x) { return x > cut ? 1.0 / std::sqrt(x) : 0.0; });
}

HermitianMatrix support_projector(const HermitianMatrix& h) {
  Spectrum s = eigh(h);
  const double norm = s.values.cwiseAbs().maxCoeff();
  if (s.values(0) < -tol::psd(norm)) {
    throw Error(ErrorCode::NotPsd, "support_projector: eigenvalue " + std::to_string(s.values(0)));
  }
  const double cut = tol::rank(norm);
  return apply_function(s, [cut](double x) { return x > cut ? 1.0 : 0.0; });
}

bool support_contained(const HermitianMatrix& x, const HermitianMatrix& y) {
  require_same_dim(x, y);
  const Matrix q = Matrix::Identity(x.dim(), x.dim()) - support_projector(y).matrix();
  const HermitianMatrix outside(q * x.matrix() * q);
  return outside.norm() <= tol::rank(x.norm());
}

HermitianMatrix schur_reduce(const HermitianMatrix& x, const HermitianMatrix& y) {
  require_same_dim(x, y);
  require_psd(x, "schur_reduce X");
  require_psd(y, "schur_reduce Y");
  if (support_contained(x, y)) return x;
  const int d = x.dim();
  const Matrix p = support_projector(y).matrix();
  const Matrix q = Matrix::Identity(d, d) - p;
  const Matrix& xm = x.matrix();
  const Matrix x11 = p * xm * p;
  const Matrix x12 = p * xm * q;
  const HermitianMatrix x22(q * xm * q);
  const Matrix reduced = x11 - x12 * pinv(x22).matrix() * x12.adjoint();
  return HermitianMatrix(p * reduced * p);
}

HermitianMatrix pinch(const HermitianMatrix& h) {
  return HermitianMatrix(Matrix(h.matrix().diagonal().asDiagonal()));
}

HermitianMatrix congruence(const Matrix& a, const HermitianMatrix& h) {
  if (a.cols() != h.dim()) {
    throw Error(ErrorCode::DimensionMismatch, "congruence: incompatible shapes");
  }
  return HermitianMatrix(a * h.matrix() * a.adjoint());
}

double trace_product(const HermitianMatrix& a, const HermitianMatrix& b) {
  require_same_dim(a, b);
  // tr(AB) = Σ_ij A_ij B_ji = Σ_ij A_ij conj(B_ij) for Hermitian B.
  return (a.matrix().array() * b.matrix().conjugate().array()).sum().real();
}

HermitianMatrix direct_sum(const HermitianMatrix& a, const HermitianMatrix& b) {
  const int n = a.dim(), m = b.dim();
  Matrix out = Matrix::Zero(n + m, n + m);
  out.topLeftCorner(n, n) = a.matrix();
  out.bottomRightCorner(m, m) = b.matrix();
  return HermitianMatrix(out);
}

}  // namespace fidlab
