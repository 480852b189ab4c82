#include "fidlab/qubit_geom.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include <unsupported/Eigen/Polynomials>

#include "fidlab/error.hpp"
#include "fidlab/optim.hpp"
#include "fidlab/polar.hpp"
#include "fidlab/tolerances.hpp"

namespace fidlab {

namespace {

constexpr double kFrameTol = 1e-10;
constexpr double kZTol = 1e-12;
constexpr double kRootTol = 1e-9;

void require_qubit(const HermitianMatrix& h) {
  if (h.dim() != 2) {
    throw Error(ErrorCode::DimensionMismatch, "expected a qubit operator, got dim " +
                                                  std::to_string(h.dim()));
  }
}

double det2(const HermitianMatrix& h) {
  return (h(0, 0) * h(1, 1) - h(0, 1) * h(1, 0)).real();
}

}  // namespace

double QubitDualPoint::x_prime() const { return std::hypot(x, y); }

QubitDualPoint pauli_coordinates(const HermitianMatrix& h) {
  require_qubit(h);
  return {h(0, 1).real(), -h(0, 1).imag(), 0.5 * (h(0, 0) - h(1, 1)).real(),
          0.5 * (h(0, 0) + h(1, 1)).real()};
}

HermitianMatrix from_pauli(const QubitDualPoint& p) {
  Matrix m(2, 2);
  m << Complex(p.w + p.z, 0.0), Complex(p.x, -p.y), Complex(p.x, p.y), Complex(p.w - p.z, 0.0);
  return HermitianMatrix(m);
}

M0Frame M0Frame::canonical(double l, double m) {
  if (!(std::abs(l) > kFrameTol)) {
    throw Error(ErrorCode::DegenerateFrame, "|l| = " + std::to_string(std::abs(l)));
  }
  return {l, m, Matrix::Identity(2, 2)};
}

M0Frame M0Frame::from_operator(const HermitianMatrix& m) {
  require_qubit(m);
  const Spectrum s = eigh(m);
  const double l = 0.5 * (s.values(1) - s.values(0));
  if (!(l > kFrameTol)) {
    throw Error(ErrorCode::DegenerateFrame, "operator is proportional to the identity");
  }
  Matrix rot(2, 2);
  rot.col(0) = s.vectors.col(1);
  rot.col(1) = s.vectors.col(0);
  return {l, 0.5 * (s.values(1) + s.values(0)), rot};
}

QubitDualPoint M0Frame::coordinates(const HermitianMatrix& h) const {
  return pauli_coordinates(congruence(rotation.adjoint(), h));
}

HermitianMatrix M0Frame::operator_of(const QubitDualPoint& p) const {
  return congruence(rotation, from_pauli(p));
}

HermitianMatrix M0Frame::reference() const { return operator_of({0.0, 0.0, l, m}); }

double f1(double x) {
  const double a = std::abs(x);
  return a >= 2.0 ? a - 1.0 : 0.25 * x * x;
}

double f2(double x, double z) { return f1(std::hypot(x, z)); }

double discriminant_D(double x, double z, double w) {
  const double x2 = x * x, z2 = z * z;
  const double x4 = x2 * x2, z4 = z2 * z2;
  const double c3 = -8 * x2 + 8 * z2 + 32;
  const double c2 = x4 + 2 * x2 * z2 - 32 * x2 + z4 - 8 * z2 + 16;
  const double c1 = 10 * x4 + 2 * x2 * z2 - 8 * x2 - 8 * z4 - 32 * z2;
  const double c0 = x4 - 3 * x4 * z2 - x4 * x2 - 3 * x2 * z4 + 20 * x2 * z2 - z4 * z2 - 8 * z4 - 16 * z2;
  return (((16 * w + c3) * w + c2) * w + c1) * w + c0;
}

double unique_root_w(double x, double z) {
  if (!(std::abs(z) > kZTol)) {
    throw Error(ErrorCode::DegenerateZ, "z = " + std::to_string(z) + "; use f1 instead");
  }
  const double x2 = x * x, z2 = z * z;
  const double x4 = x2 * x2, z4 = z2 * z2;
  Eigen::Matrix<double, 5, 1> coeffs;
  coeffs << x4 - 3 * x4 * z2 - x4 * x2 - 3 * x2 * z4 + 20 * x2 * z2 - z4 * z2 - 8 * z4 - 16 * z2,
      10 * x4 + 2 * x2 * z2 - 8 * x2 - 8 * z4 - 32 * z2,
      x4 + 2 * x2 * z2 - 32 * x2 + z4 - 8 * z2 + 16, -8 * x2 + 8 * z2 + 32, 16.0;
  Eigen::PolynomialSolver<double, 4> solver(coeffs);

  auto dval = [&](double w) { return discriminant_D(x, z, w); };
  auto dprime = [&](double w) {
    return ((64 * w + 3 * coeffs(3)) * w + 2 * coeffs(2)) * w + coeffs(1);
  };

  const double floor = f2(x, z);
  std::vector<double> kept;
  for (const auto& r : solver.roots()) {
    if (std::abs(r.imag()) > 1e-6 * (1.0 + std::abs(r.real()))) continue;
    double w = r.real();
    for (int it = 0; it < 8; ++it) {
      const double dp = dprime(w);
      if (dp == 0.0) break;
      const double step = dval(w) / dp;
      if (!std::isfinite(step)) break;
      w -= step;
      if (std::abs(step) <= 1e-15 * (1.0 + std::abs(w))) break;
    }
    if (w < floor - kRootTol) continue;
    bool duplicate = false;
    for (double k : kept)
      if (std::abs(k - w) <= 1e-7 * (1.0 + std::abs(w))) duplicate = true;
    if (!duplicate) kept.push_back(w);
  }
  if (kept.size() != 1) {
    throw Error(ErrorCode::RootAmbiguity, std::to_string(kept.size()) +
                                              " admissible roots at (x, z) = (" +
                                              std::to_string(x) + ", " + std::to_string(z) + ")");
  }
  return kept.front();
}

double w2_min_oracle(double x_prime, double z) {
  auto w2 = [&](double s) { return 0.25 * s * s + std::hypot(x_prime - s, z); };
  const double bound = std::abs(x_prime) + 4.0;
  const double h = 1e-4;
  const long n = static_cast<long>(std::ceil(2.0 * bound / h));
  double best_s = -bound, best = w2(-bound);
  for (long i = 1; i <= n; ++i) {
    const double s = -bound + i * h;
    const double v = w2(s);
    if (v < best) {
      best = v;
      best_s = s;
    }
  }
  // w2 is convex, so ternary search on the neighbouring cells is exact up to rounding.
  double lo = best_s - h, hi = best_s + h;
  for (int it = 0; it < 100; ++it) {
    const double m1 = lo + (hi - lo) / 3.0, m2 = hi - (hi - lo) / 3.0;
    if (w2(m1) < w2(m2)) hi = m2;
    else lo = m1;
  }
  return std::min(best, w2(0.5 * (lo + hi)));
}

bool m0_membership(const M0Frame& frame, const QubitDualPoint& p) {
  const double l2 = frame.l * frame.l;
  const double x = p.x_prime() / l2, z = p.z / l2, w = p.w / l2;
  if (std::abs(z) <= kZTol) return w >= f1(x) - 1e-9;
  return w >= f2(x, z) - 1e-9 && discriminant_D(x, z, w) >= -1e-7;
}

QubitDualPoint m0_extreme_points(const M0Frame& frame, double s, double alpha) {
  if (!(std::abs(s) <= 2.0 + 1e-12)) {
    throw Error(ErrorCode::SOutOfRange, "s = " + std::to_string(s) + " outside [-2, 2]");
  }
  const double l2 = frame.l * frame.l;
  return {l2 * s * std::cos(alpha), l2 * s * std::sin(alpha), 0.0, l2 * s * s / 4.0};
}

QubitDualPoint m0_point_from_b(const M0Frame& frame, const HermitianMatrix& b) {
  require_qubit(b);
  const Matrix m = frame.reference().matrix();
  const Matrix& bm = b.matrix();
  const Complex i1(0.0, 1.0);
  return frame.coordinates(HermitianMatrix(i1 * (bm * m - m * bm) + bm * bm));
}

bool mfmin_qubit_membership(const HermitianMatrix& l0, const HermitianMatrix& l1) {
  require_qubit(l0);
  require_qubit(l1);
  require_positive_definite(l0, "L0");
  const HermitianMatrix l0_inv = pinv(l0);
  const Spectrum s = eigh(l0_inv);
  const double l = 0.5 * (s.values(1) - s.values(0));
  if (l <= kFrameTol * (1.0 + s.values(1))) {
    // L0 ∝ I: the body reduces to L1 ≥ L0^{-1} / 4.
    return is_psd(l1 - l0_inv * 0.25);
  }
  const M0Frame frame = M0Frame::from_operator(l0_inv);
  const HermitianMatrix l0_is = psd_inv_sqrt(l0);
  const HermitianMatrix k = congruence(l0_is.matrix(), l1) * 4.0 - congruence(l0_inv.matrix(),
                                                                               HermitianMatrix::identity(2));
  return m0_membership(frame, frame.coordinates(k));
}

double polar_max_qubit(const HermitianMatrix& l0, const HermitianMatrix& l1) {
  require_qubit(l0);
  require_qubit(l1);
  OperatorPair pair(l0, l1);
  const double t = trace_product(l0, l1);
  const double p = det2(l0) * det2(l1);
  if (!(p > 0.0) || !(t > 0.0)) return 0.0;
  const double disc = std::sqrt(std::max(t * t - 4.0 * p, 0.0));
  const double lam = 2.0 * p / (t + disc);
  return 2.0 * std::sqrt(lam);
}

namespace {

// min over unit n of (1 + u·n)(1 + v·n) for Bloch vectors |u|, |v| ≤ 1.
double bloch_product_min(const Eigen::Vector3d& u, const Eigen::Vector3d& v) {
  auto g = [&](const Eigen::Vector3d& n) { return (1.0 + u.dot(n)) * (1.0 + v.dot(n)); };
  const double nu = u.norm(), nv = v.norm();
  if (nu == 0.0 && nv == 0.0) return 1.0;
  const Eigen::Vector3d e1 = nu >= nv ? Eigen::Vector3d(u / nu) : Eigen::Vector3d(v / nv);
  Eigen::Vector3d other = (nu >= nv ? v : u);
  other -= other.dot(e1) * e1;
  if (other.norm() <= 1e-14 * (1.0 + std::max(nu, nv))) {
    // Collinear: the concave objective is minimized at an endpoint of the segment.
    return std::min(g(e1), g(-e1));
  }
  const Eigen::Vector3d e2 = other.normalized();
  auto on_circle = [&](double th) { return g(std::cos(th) * e1 + std::sin(th) * e2); };
  const double pi = std::numbers::pi;
  const auto a = optim::minimize_on_interval(on_circle, 0.0, 2.0 * pi, 721, 1e-13);
  const auto b = optim::minimize_on_interval(on_circle, -pi, pi, 721, 1e-13);
  return std::max(0.0, std::min(a.value, b.value));
}

}  // namespace

double polar_min_qubit(const HermitianMatrix& l0, const HermitianMatrix& l1) {
  require_qubit(l0);
  require_qubit(l1);
  OperatorPair pair(l0, l1);
  if (!is_positive_definite(l0) || !is_positive_definite(l1)) return 0.0;
  const QubitDualPoint p0 = pauli_coordinates(l0), p1 = pauli_coordinates(l1);
  const Eigen::Vector3d u(p0.x / p0.w, p0.y / p0.w, p0.z / p0.w);
  const Eigen::Vector3d v(p1.x / p1.w, p1.y / p1.w, p1.z / p1.w);
  const double scale = 2.0 * std::sqrt(p0.w * p1.w);

  const double nu = u.norm(), nv = v.norm();
  if (std::abs(nu - nv) <= 1e-12) {
    // Rotate so that u = (a, 0, b), v = (a, 0, −b).
    const double a = 0.5 * (u + v).norm();
    const double b = 0.5 * (u - v).norm();
    const double r2 = a * a + b * b;
    if (r2 == 0.0) return scale;
    if (r2 >= a) return scale * std::sqrt(std::max((1.0 - r2) * (1.0 - a * a / r2), 0.0));
    return scale * (1.0 - a);
  }
  return scale * std::sqrt(bloch_product_min(u, v));
}

bool convertibility_necessary(const HermitianMatrix& l0, const HermitianMatrix& l1,
                              const HermitianMatrix& l0p, const HermitianMatrix& l1p) {
  for (const auto* h : {&l0, &l1, &l0p, &l1p}) require_qubit(*h);
  constexpr double eps = 1e-9;
  if (std::abs(l0.trace() - l0p.trace()) > eps || std::abs(l1.trace() - l1p.trace()) > eps) {
    return false;
  }
  if (polar_max(l0, l1) > polar_max(l0p, l1p) + eps) return false;
  if (polar_min(l0, l1) > polar_min(l0p, l1p) + eps) return false;
  if ((l0 - l1).norm() < (l0p - l1p).norm() - eps) return false;
  auto rank_one = [](const HermitianMatrix& a, const HermitianMatrix& b) {
    return !is_positive_definite(a) || !is_positive_definite(b);
  };
  if (rank_one(l0, l1) && !rank_one(l0p, l1p)) return false;
  return true;
}

}  // namespace fidlab
