#include "fidlab/fidelity.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "fidlab/error.hpp"
#include "fidlab/optim.hpp"
#include "fidlab/random.hpp"
#include "fidlab/superop.hpp"
#include "fidlab/tolerances.hpp"

namespace fidlab {

std::string_view to_string(Kind kind) {
  switch (kind) {
    case Kind::Max: return "max";
    case Kind::Min: return "min";
    case Kind::Half: return "half";
  }
  return "?";
}

Kind parse_kind(std::string_view name) {
  if (name == "max") return Kind::Max;
  if (name == "min") return Kind::Min;
  if (name == "half") return Kind::Half;
  throw Error(ErrorCode::InvalidArgument, "unknown fidelity kind '" + std::string(name) + "'");
}

WeightVector::WeightVector(std::vector<double> entries) : entries_(std::move(entries)) {
  for (auto& e : entries_) {
    if (e < -1e-12 || std::isnan(e)) {
      throw Error(ErrorCode::NegativeEntry, "weight " + std::to_string(e));
    }
    e = std::max(e, 0.0);
  }
}

WeightVector::WeightVector(std::initializer_list<double> entries)
    : WeightVector(std::vector<double>(entries)) {}

double WeightVector::sum() const {
  double s = 0.0;
  for (double e : entries_) s += e;
  return s;
}

double classical_fidelity(const WeightVector& p, const WeightVector& q) {
  if (p.size() != q.size()) {
    throw Error(ErrorCode::LengthMismatch,
                std::to_string(p.size()) + " vs " + std::to_string(q.size()));
  }
  double f = 0.0;
  for (int i = 0; i < p.size(); ++i) f += std::sqrt(p[i] * q[i]);
  return f;
}

double fidelity_max(const HermitianMatrix& x, const HermitianMatrix& y) {
  OperatorPair pair(x, y);
  return psd_sqrt(congruence(psd_sqrt(y).matrix(), x)).trace();
}

double fidelity_min(const HermitianMatrix& x, const HermitianMatrix& y) {
  OperatorPair pair(x, y);
  const HermitianMatrix xr = support_contained(x, y) ? x : schur_reduce(x, y);
  const HermitianMatrix t = psd_sqrt(congruence(psd_inv_sqrt(y).matrix(), xr));
  return trace_product(y, t);
}

double fidelity_half(const HermitianMatrix& x, const HermitianMatrix& y) {
  OperatorPair pair(x, y);
  return trace_product(psd_sqrt(x), psd_sqrt(y));
}

double fidelity(Kind kind, const HermitianMatrix& x, const HermitianMatrix& y) {
  switch (kind) {
    case Kind::Max: return fidelity_max(x, y);
    case Kind::Min: return fidelity_min(x, y);
    case Kind::Half: return fidelity_half(x, y);
  }
  return 0.0;
}

namespace {

// ½ √B (√B A √B)^{-1/2} √B, the X-gradient of F_max with A = X, B = Y.
HermitianMatrix max_gradient(const HermitianMatrix& a, const HermitianMatrix& b) {
  const HermitianMatrix sb = psd_sqrt(b);
  const HermitianMatrix inner = psd_inv_sqrt(congruence(sb.matrix(), a));
  return congruence(sb.matrix(), inner) * 0.5;
}

// B^{-1/2} S_T(B) B^{-1/2} with T = √(B^{-1/2} A B^{-1/2}).
HermitianMatrix min_gradient(const HermitianMatrix& a, const HermitianMatrix& b) {
  const HermitianMatrix bis = psd_inv_sqrt(b);
  const HermitianMatrix t = psd_sqrt(congruence(bis.matrix(), a));
  return congruence(bis.matrix(), lyapunov_solve(t, b));
}

}  // namespace

OperatorPair dual_optimizers(Kind kind, const HermitianMatrix& x, const HermitianMatrix& y) {
  require_same_dim(x, y);
  require_positive_definite(x, "X");
  require_positive_definite(y, "Y");
  switch (kind) {
    case Kind::Max: return OperatorPair(max_gradient(x, y), max_gradient(y, x));
    case Kind::Min: return OperatorPair(min_gradient(x, y), min_gradient(y, x));
    case Kind::Half: {
      const HermitianMatrix sx = psd_sqrt(x), sy = psd_sqrt(y);
      return OperatorPair(lyapunov_solve(sx, sy), lyapunov_solve(sy, sx));
    }
  }
  throw Error(ErrorCode::InvalidArgument, "unknown kind");
}

Povm optimal_measurement(const HermitianMatrix& x, const HermitianMatrix& y) {
  require_same_dim(x, y);
  require_positive_definite(x, "X");
  require_positive_definite(y, "Y");
  const HermitianMatrix sy = psd_sqrt(y);
  const HermitianMatrix yis = pinv(sy);
  const HermitianMatrix m = congruence(yis.matrix(), psd_sqrt(congruence(sy.matrix(), x)));
  return basis_povm(eigh(m).vectors);
}

ReverseTest optimal_reverse_test(const HermitianMatrix& x, const HermitianMatrix& y) {
  require_same_dim(x, y);
  require_positive_definite(x, "X");
  require_positive_definite(y, "Y");
  const int d = x.dim();
  const HermitianMatrix sy = psd_sqrt(y);
  const HermitianMatrix t = psd_sqrt(congruence(pinv(sy).matrix(), x));
  const Spectrum s = eigh(t);
  const double cut = tol::rank(s.values.cwiseAbs().maxCoeff());

  ReverseTest rt{{}, {}, {}, x, y};
  std::vector<double> p, q;
  int start = 0;
  while (start < d) {
    int end = start + 1;
    while (end < d && s.values(end) - s.values(start) <= cut) ++end;
    const Matrix v = s.vectors.middleCols(start, end - start);
    const double tval = s.values.segment(start, end - start).mean();
    const HermitianMatrix proj(v * v.adjoint());
    const double qi = trace_product(y, proj);
    rt.states.push_back(congruence(sy.matrix(), proj) * (1.0 / qi));
    q.push_back(qi);
    p.push_back(tval * tval * qi);
    start = end;
  }
  rt.p = WeightVector(std::move(p));
  rt.q = WeightVector(std::move(q));
  return rt;
}

HermitianMatrix hermitian_from_params(const std::vector<double>& params, int dim) {
  Matrix a = Matrix::Zero(dim, dim);
  size_t k = 0;
  for (int i = 0; i < dim; ++i) a(i, i) = params[k++];
  for (int i = 0; i < dim; ++i)
    for (int j = i + 1; j < dim; ++j) {
      a(i, j) = Complex(params[k], params[k + 1]);
      a(j, i) = std::conj(a(i, j));
      k += 2;
    }
  return HermitianMatrix(a);
}

double fidelity_min_via_twist(const HermitianMatrix& x, const HermitianMatrix& y, int restarts,
                              std::uint64_t seed) {
  require_same_dim(x, y);
  require_positive_definite(x, "X");
  require_positive_definite(y, "Y");
  const int d = x.dim();
  const Matrix id = Matrix::Identity(d, d);
  const Complex i1(0.0, 1.0);

  optim::Objective objective = [&](const std::vector<double>& params) {
    const Matrix a = hermitian_from_params(params, d).matrix();
    return fidelity_max(x, congruence(id - i1 * a, y));
  };

  double best = objective(std::vector<double>(d * d, 0.0));
  for (int r = 0; r < std::max(restarts, 1); ++r) {
    std::vector<double> start(d * d, 0.0);
    if (r > 0) {
      Rng rng(derive_seed(seed, r));
      for (auto& v : start) v = 0.5 * rng.normal();
    }
    // A second simplex from the first result escapes most premature collapses.
    auto res = optim::nelder_mead(objective, start, 0.2, 4000, 1e-10);
    res = optim::nelder_mead(objective, res.x, 0.05, 4000, 1e-11);
    best = std::min(best, res.value);
  }
  return best;
}

}  // namespace fidlab
