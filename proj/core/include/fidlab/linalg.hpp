#pragma once

#include <complex>
#include <functional>
#include <initializer_list>
#include <span>

#include <Eigen/Dense>

namespace fidlab {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

/// Dense Hermitian operator on C^dim.
///
/// Construction always symmetrizes the input as (M + M†)/2, so the stored
/// entries are exactly Hermitian. Instances are immutable values.
class HermitianMatrix {
 public:
  /// Throws DimensionMismatch for non-square or empty input.
  explicit HermitianMatrix(const Matrix& m);

  static HermitianMatrix identity(int dim);
  static HermitianMatrix zero(int dim);
  static HermitianMatrix diagonal(std::span<const double> entries);
  static HermitianMatrix diagonal(std::initializer_list<double> entries);
  /// |v><v|
  static HermitianMatrix projector(const Vector& v);

  int dim() const { return static_cast<int>(m_.rows()); }
  const Matrix& matrix() const { return m_; }
  Complex operator()(int i, int j) const { return m_(i, j); }

  double trace() const { return m_.trace().real(); }
  double max_abs() const { return m_.cwiseAbs().maxCoeff(); }
  /// Spectral norm (largest |eigenvalue|).
  double norm() const;
  /// Frobenius norm.
  double frobenius() const { return m_.norm(); }

  HermitianMatrix operator+(const HermitianMatrix& o) const;
  HermitianMatrix operator-(const HermitianMatrix& o) const;
  HermitianMatrix operator-() const;
  HermitianMatrix operator*(double s) const;
  friend HermitianMatrix operator*(double s, const HermitianMatrix& h) { return h * s; }

 private:
  Matrix m_;
};

/// Eigendecomposition H = V diag(values) V†, values ascending.
struct Spectrum {
  RealVector values;
  Matrix vectors;

  int size() const { return static_cast<int>(values.size()); }
};

/// An ordered pair of PSD operators of equal dimension.
struct OperatorPair {
  HermitianMatrix first;
  HermitianMatrix second;

  /// Throws DimensionMismatch or NotPsd when the invariants fail.
  OperatorPair(HermitianMatrix a, HermitianMatrix b);

  int dim() const { return first.dim(); }
};

Spectrum eigh(const HermitianMatrix& h);

/// f applied to each eigenvalue: V f(Λ) V†.
HermitianMatrix apply_function(const Spectrum& s, const std::function<double(double)>& f);

double min_eigenvalue(const HermitianMatrix& h);
double max_eigenvalue(const HermitianMatrix& h);

/// Smallest eigenvalue ≥ −PSD_TOL.
bool is_psd(const HermitianMatrix& h);
/// Smallest eigenvalue > RANK_TOL.
bool is_positive_definite(const HermitianMatrix& h);
void require_psd(const HermitianMatrix& h, const char* what);
void require_positive_definite(const HermitianMatrix& h, const char* what);
void require_same_dim(const HermitianMatrix& a, const HermitianMatrix& b);

/// Square root of a PSD operator; eigenvalues at or below RANK_TOL map to zero.
HermitianMatrix psd_sqrt(const HermitianMatrix& h);
/// Moore–Penrose inverse. Eigenvalues with |λ| ≤ RANK_TOL map to zero.
HermitianMatrix pinv(const HermitianMatrix& h);
/// pinv(psd_sqrt(h)).
HermitianMatrix psd_inv_sqrt(const HermitianMatrix& h);
/// Orthogonal projector onto the span of eigenvectors with λ > RANK_TOL.
HermitianMatrix support_projector(const HermitianMatrix& h);
/// Schur complement of x relative to the support of y, living on supp y.
HermitianMatrix schur_reduce(const HermitianMatrix& x, const HermitianMatrix& y);
/// Drops off-diagonal entries in the standard basis.
HermitianMatrix pinch(const HermitianMatrix& h);

/// True when ‖(I − π_y) x (I − π_y)‖ ≤ RANK_TOL.
bool support_contained(const HermitianMatrix& x, const HermitianMatrix& y);

/// a · h · a†, for any conformable (possibly rectangular) a.
HermitianMatrix congruence(const Matrix& a, const HermitianMatrix& h);
/// Re tr(a b).
double trace_product(const HermitianMatrix& a, const HermitianMatrix& b);
/// Block diagonal a ⊕ b.
HermitianMatrix direct_sum(const HermitianMatrix& a, const HermitianMatrix& b);

}  // namespace fidlab
