#include "fidlab/certify.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/SVD>
#include <unsupported/Eigen/KroneckerProduct>

#include "fidlab/error.hpp"
#include "fidlab/polar.hpp"
#include "fidlab/random.hpp"
#include "fidlab/tolerances.hpp"

namespace fidlab {

bool Certificate::valid() const {
  return primal_feasible && dual_feasible && gap <= 1e-7 * (1.0 + std::abs(primal_value));
}

bool block_psd(const HermitianMatrix& x, const Matrix& c, const HermitianMatrix& y) {
  if (c.rows() != x.dim() || c.cols() != y.dim()) {
    throw Error(ErrorCode::DimensionMismatch, "block_psd: C must be dim(X) x dim(Y)");
  }
  const double cnorm = c.size() ? c.cwiseAbs().maxCoeff() : 0.0;
  const Matrix px = support_projector(x).matrix();
  const Matrix py = support_projector(y).matrix();
  const double range_tol = 1e-9 * (1.0 + cnorm);
  if ((c - px * c).norm() > range_tol) return false;
  if ((c - c * py).norm() > range_tol) return false;
  const HermitianMatrix schur(x.matrix() - c * pinv(y).matrix() * c.adjoint());
  return is_psd(schur);
}

bool mfmax_membership(const HermitianMatrix& l0, const HermitianMatrix& l1) {
  require_same_dim(l0, l1);
  const int d = l0.dim();
  Matrix block(2 * d, 2 * d);
  block << 2.0 * l0.matrix(), -Matrix::Identity(d, d), -Matrix::Identity(d, d), 2.0 * l1.matrix();
  return is_psd(HermitianMatrix(block));
}

bool holder_feasible(Kind kind, const HermitianMatrix& l0, const HermitianMatrix& l1, int samples,
                     std::uint64_t seed, double tol) {
  require_same_dim(l0, l1);
  const int d = l0.dim();
  auto violated = [&](const HermitianMatrix& xp, const HermitianMatrix& yp) {
    const double lhs = trace_product(l0, xp) + trace_product(l1, yp);
    const double f = fidelity(kind, xp, yp);
    return lhs < f - tol * (1.0 + std::abs(f));
  };

  // Rank-one probes ψ with the tightest scaling: t ⟨L0⟩ + ⟨L1⟩ / t ≥ 1.
  auto probe = [&](const Vector& psi) {
    const HermitianMatrix p = HermitianMatrix::projector(psi.normalized());
    const double a = trace_product(l0, p), b = trace_product(l1, p);
    if (a <= 0.0 || b <= 0.0) return a + b < 1.0;  // some scaling drives lhs to 0
    const double t = std::sqrt(b / a);
    return violated(p * t, p * (1.0 / t));
  };
  const Matrix v0 = eigh(l0).vectors;
  for (int i = 0; i < d; ++i) {
    if (probe(v0.col(i))) return false;
    if (probe(Vector::Unit(d, i))) return false;
  }

  for (int k = 0; k < samples; ++k) {
    Rng rng(derive_seed(seed, k));
    const int rx = 1 + static_cast<int>(rng.uniform(0.0, d - 1e-9));
    const int ry = 1 + static_cast<int>(rng.uniform(0.0, d - 1e-9));
    const HermitianMatrix xp = random_density(d, rng, rx) * std::exp(rng.normal());
    const HermitianMatrix yp = random_density(d, rng, ry) * std::exp(rng.normal());
    if (violated(xp, yp)) return false;
  }
  return true;
}

Matrix primal_optimizer(Kind kind, const HermitianMatrix& x, const HermitianMatrix& y) {
  require_same_dim(x, y);
  require_positive_definite(x, "X");
  require_positive_definite(y, "Y");
  const HermitianMatrix sx = psd_sqrt(x), sy = psd_sqrt(y);
  switch (kind) {
    case Kind::Max: {
      Eigen::JacobiSVD<Matrix> svd(sy.matrix() * sx.matrix(), Eigen::ComputeFullU | Eigen::ComputeFullV);
      return sx.matrix() * svd.matrixV() * svd.matrixU().adjoint() * sy.matrix();
    }
    case Kind::Min: {
      const HermitianMatrix yis = pinv(sy);
      return congruence(sy.matrix(), psd_sqrt(congruence(yis.matrix(), x))).matrix();
    }
    case Kind::Half:
      return Eigen::kroneckerProduct(sy.matrix().transpose(), sx.matrix()).eval();
  }
  throw Error(ErrorCode::InvalidArgument, "unknown kind");
}

Certificate duality_certificate(Kind kind, const HermitianMatrix& x, const HermitianMatrix& y,
                                std::uint64_t seed) {
  require_same_dim(x, y);
  require_positive_definite(x, "X");
  require_positive_definite(y, "Y");
  const int d = x.dim();
  const Matrix c = primal_optimizer(kind, x, y);

  Certificate cert{kind, 0.0, 0.0, false, false, 0.0};
  switch (kind) {
    case Kind::Max:
      cert.primal_value = c.trace().real();
      cert.primal_feasible = block_psd(x, c, y);
      break;
    case Kind::Min:
      cert.primal_value = c.trace().real();
      cert.primal_feasible = block_psd(x, c, y);
      break;
    case Kind::Half: {
      const Matrix id = Matrix::Identity(d, d);
      const HermitianMatrix left(Eigen::kroneckerProduct(id, x.matrix()).eval());
      const HermitianMatrix right(Eigen::kroneckerProduct(y.matrix().transpose(), id).eval());
      const Eigen::Map<const Vector> vid(id.data(), d * d);
      cert.primal_value = vid.dot(c * vid).real();
      cert.primal_feasible = block_psd(left, c, right);
      break;
    }
  }

  const OperatorPair dual = dual_optimizers(kind, x, y);
  cert.dual_value = trace_product(dual.first, x) + trace_product(dual.second, y);
  bool body = true;
  switch (kind) {
    case Kind::Max: body = mfmax_membership(dual.first, dual.second); break;
    case Kind::Min: body = polar_min(dual.first, dual.second, 20, seed) >= 1.0 - 1e-6; break;
    case Kind::Half: body = polar_half(dual.first, dual.second) >= 1.0 - 1e-7; break;
  }
  cert.dual_feasible = body && holder_feasible(kind, dual.first, dual.second, 100, seed);
  cert.gap = std::abs(cert.primal_value - cert.dual_value);
  return cert;
}

}  // namespace fidlab
