#include "fidlab/polar.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "fidlab/channels.hpp"
#include "fidlab/error.hpp"
#include "fidlab/optim.hpp"
#include "fidlab/qubit_geom.hpp"
#include "fidlab/random.hpp"
#include "fidlab/superop.hpp"
#include "fidlab/tolerances.hpp"

namespace fidlab {

double polar_classical(const WeightVector& l0, const WeightVector& l1) {
  if (l0.size() != l1.size()) {
    throw Error(ErrorCode::LengthMismatch,
                std::to_string(l0.size()) + " vs " + std::to_string(l1.size()));
  }
  double best = std::numeric_limits<double>::infinity();
  for (int i = 0; i < l0.size(); ++i) best = std::min(best, 2.0 * std::sqrt(l0[i] * l1[i]));
  return l0.size() == 0 ? 0.0 : best;
}

double polar_max(const HermitianMatrix& l0, const HermitianMatrix& l1) {
  OperatorPair pair(l0, l1);
  if (!is_positive_definite(l0) || !is_positive_definite(l1)) return 0.0;
  const double lam = min_eigenvalue(congruence(psd_sqrt(l1).matrix(), l0));
  return 2.0 * std::sqrt(std::max(lam, 0.0));
}

double polar_half(const HermitianMatrix& l0, const HermitianMatrix& l1) {
  OperatorPair pair(l0, l1);
  if (!is_positive_definite(l0) || !is_positive_definite(l1)) return 0.0;
  const Spectrum s = composed_lyapunov_spectrum(l0, l1);
  return 1.0 / std::sqrt(s.values(s.size() - 1));
}

namespace {

struct SphereProblem {
  const Matrix& a;
  const Matrix& b;

  double expect(const Matrix& m, const Vector& v) const { return (v.adjoint() * m * v)(0, 0).real(); }
  double value(const Vector& v) const { return expect(a, v) * expect(b, v); }
};

// Riemannian descent of ⟨A⟩⟨B⟩ on the unit sphere with Armijo step halving.
double sphere_descent(const SphereProblem& pb, Vector v, int max_iter = 3000) {
  v.normalize();
  double f = pb.value(v);
  double step = 1.0;
  for (int it = 0; it < max_iter; ++it) {
    const Vector av = pb.a * v, bv = pb.b * v;
    const double ea = v.dot(av).real(), eb = v.dot(bv).real();
    Vector g = 2.0 * (eb * av + ea * bv);
    g -= v.dot(g).real() * v;
    const double gn = g.norm();
    if (gn < 1e-10) break;
    step = std::min(step * 2.0, 1.0);
    bool moved = false;
    while (step > 1e-16) {
      Vector trial = v - step * g;
      trial.normalize();
      const double ft = pb.value(trial);
      if (ft <= f - 1e-4 * step * gn * gn) {
        v = trial;
        f = ft;
        moved = true;
        break;
      }
      step *= 0.5;
    }
    if (!moved) break;
  }
  return f;
}

}  // namespace

double polar_min_search(const HermitianMatrix& l0, const HermitianMatrix& l1, int restarts,
                        std::uint64_t seed) {
  OperatorPair pair(l0, l1);
  if (!is_positive_definite(l0) || !is_positive_definite(l1)) return 0.0;
  const int d = l0.dim();
  const SphereProblem pb{l0.matrix(), l1.matrix()};

  // min_ψ 2√(ab) = min_t min_ψ (t a + b / t); scan log t for a warm start.
  const double lo = 0.5 * std::log(min_eigenvalue(l1) / max_eigenvalue(l0));
  const double hi = 0.5 * std::log(max_eigenvalue(l1) / min_eigenvalue(l0));
  auto lam_min = [&](double logt) {
    const double t = std::exp(logt);
    return min_eigenvalue(l0 * t + l1 * (1.0 / t));
  };
  const auto tm = optim::minimize_on_interval(lam_min, lo - 1e-3, hi + 1e-3, 400, 1e-13);
  const double t = std::exp(tm.x);
  const Vector warm = eigh(l0 * t + l1 * (1.0 / t)).vectors.col(0);

  double best = std::min(pb.value(warm), sphere_descent(pb, warm));
  for (int r = 1; r < restarts; ++r) {
    Rng rng(derive_seed(seed, r));
    Vector v(d);
    for (int i = 0; i < d; ++i) v(i) = rng.complex_normal();
    best = std::min(best, sphere_descent(pb, v));
  }
  return 2.0 * std::sqrt(std::max(best, 0.0));
}

double polar_min(const HermitianMatrix& l0, const HermitianMatrix& l1, int restarts,
                 std::uint64_t seed) {
  OperatorPair pair(l0, l1);
  if (l0.dim() == 1) return 2.0 * std::sqrt(std::max(l0(0, 0).real() * l1(0, 0).real(), 0.0));
  if (l0.dim() == 2) return polar_min_qubit(l0, l1);
  return polar_min_search(l0, l1, restarts, seed);
}

double polar(Kind kind, const HermitianMatrix& l0, const HermitianMatrix& l1) {
  switch (kind) {
    case Kind::Max: return polar_max(l0, l1);
    case Kind::Min: return polar_min(l0, l1);
    case Kind::Half: return polar_half(l0, l1);
  }
  return 0.0;
}

bool polar_membership(Kind kind, const HermitianMatrix& l0, const HermitianMatrix& l1) {
  return polar(kind, l0, l1) >= 1.0 - 1e-9;
}

namespace {

// Real coordinates of a Hermitian matrix in an orthonormal basis of Herm(d).
Eigen::VectorXd herm_coords(const Matrix& h) {
  const int d = static_cast<int>(h.rows());
  Eigen::VectorXd out(d * d);
  int k = 0;
  for (int i = 0; i < d; ++i) out(k++) = h(i, i).real();
  for (int i = 0; i < d; ++i)
    for (int j = i + 1; j < d; ++j) {
      out(k++) = std::sqrt(2.0) * h(i, j).real();
      out(k++) = std::sqrt(2.0) * h(i, j).imag();
    }
  return out;
}

struct Fit {
  double value;    // classical polar of the fitted weights
  double residual; // combined NNLS residual
};

Fit fit_povm(const std::vector<HermitianMatrix>& elems, const Eigen::VectorXd& c0,
             const Eigen::VectorXd& c1) {
  Eigen::MatrixXd a(c0.size(), elems.size());
  for (size_t i = 0; i < elems.size(); ++i) a.col(i) = herm_coords(elems[i].matrix());
  const auto r0 = optim::nnls(a, c0);
  const auto r1 = optim::nnls(a, c1);
  std::vector<double> w0(r0.x.data(), r0.x.data() + r0.x.size());
  std::vector<double> w1(r1.x.data(), r1.x.data() + r1.x.size());
  // NNLS splits mass arbitrarily among parallel elements. Giving every member of
  // a parallel group the same weight keeps the fit and maximizes the minimum.
  const int n = static_cast<int>(elems.size());
  std::vector<bool> done(n, false);
  for (int i = 0; i < n; ++i) {
    if (done[i]) continue;
    const double ni = a.col(i).norm();
    std::vector<int> group{i};
    for (int j = i + 1; j < n; ++j) {
      const double nj = a.col(j).norm();
      if (!done[j] && ni > 0 && nj > 0 && (a.col(i) / ni - a.col(j) / nj).norm() <= 1e-9) group.push_back(j);
    }
    double t0 = 0, t1 = 0, mass = 0;
    for (int k : group) {
      const double nk = a.col(k).norm();
      t0 += w0[k] * nk, t1 += w1[k] * nk, mass += nk;
      done[k] = true;
    }
    if (mass > 0)
      for (int k : group) w0[k] = t0 / mass, w1[k] = t1 / mass;
  }
  return {polar_classical(WeightVector(w0), WeightVector(w1)), r0.residual + r1.residual};
}

// Rank-one POVM from the first `dim` rows of exp(iH), H an n×n Hermitian.
std::vector<HermitianMatrix> rank_one_povm(const std::vector<double>& params, int dim, int n) {
  const Spectrum s = eigh(hermitian_from_params(params, n));
  Vector phases(n);
  for (int i = 0; i < n; ++i) phases(i) = std::polar(1.0, s.values(i));
  const Matrix u = s.vectors * phases.asDiagonal() * s.vectors.adjoint();
  std::vector<HermitianMatrix> elems;
  for (int i = 0; i < n; ++i) elems.push_back(HermitianMatrix::projector(u.col(i).head(dim)));
  return elems;
}

// Eigenprojectors of h, split evenly into n elements in total.
std::vector<HermitianMatrix> split_eigenbasis(const HermitianMatrix& h, int n) {
  const int d = h.dim();
  const Matrix v = eigh(h).vectors;
  std::vector<HermitianMatrix> elems;
  for (int i = 0; i < d; ++i) {
    const int copies = n / d + (i < n % d ? 1 : 0);
    const HermitianMatrix p = HermitianMatrix::projector(v.col(i));
    for (int c = 0; c < copies; ++c) elems.push_back(p * (1.0 / copies));
  }
  return elems;
}

}  // namespace

double povm_lower_bound(const HermitianMatrix& l0, const HermitianMatrix& l1, int n_outcomes,
                        int trials, std::uint64_t seed) {
  OperatorPair pair(l0, l1);
  const int d = l0.dim();
  if (n_outcomes < d * d) {
    throw Error(ErrorCode::InvalidArgument, "povm_lower_bound needs at least dim² outcomes");
  }
  const Eigen::VectorXd c0 = herm_coords(l0.matrix()), c1 = herm_coords(l1.matrix());
  const double accept = 1e-8;
  const double scale = 1.0 + std::max(c0.norm(), c1.norm());
  double best = -1.0;

  auto consider = [&](const Fit& f) {
    if (f.residual <= accept) best = std::max(best, f.value);
  };

  for (int trial = 0; trial < trials; ++trial) {
    if (trial < 2) {
      consider(fit_povm(split_eigenbasis(trial == 0 ? l0 : l1, n_outcomes), c0, c1));
      continue;
    }
    Rng rng(derive_seed(seed, trial));
    std::vector<double> start(n_outcomes * n_outcomes);
    for (auto& v : start) v = rng.normal();
    optim::Objective objective = [&](const std::vector<double>& params) {
      const Fit f = fit_povm(rank_one_povm(params, d, n_outcomes), c0, c1);
      return -f.value + 100.0 * f.residual / scale;
    };
    const auto res = optim::nelder_mead(objective, start, 0.3, 600, 1e-8);
    consider(fit_povm(rank_one_povm(res.x, d, n_outcomes), c0, c1));
    consider(fit_povm(rank_one_povm(start, d, n_outcomes), c0, c1));
  }
  if (best < 0.0) {
    throw Error(ErrorCode::DecompositionInfeasible,
                "no nonnegative decomposition found in " + std::to_string(trials) + " trials");
  }
  return best;
}

}  // namespace fidlab
