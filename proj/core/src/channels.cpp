#include "fidlab/channels.hpp"

#include <cmath>
#include <string>

#include "fidlab/error.hpp"
#include "fidlab/random.hpp"
#include "fidlab/tolerances.hpp"

namespace fidlab {

namespace {
constexpr double kCompleteTol = 1e-9;
}

KrausChannel::KrausChannel(std::vector<Matrix> kraus_ops) : ops_(std::move(kraus_ops)) {
  if (ops_.empty()) throw Error(ErrorCode::DimensionMismatch, "empty Kraus list");
  dim_out_ = static_cast<int>(ops_.front().rows());
  dim_in_ = static_cast<int>(ops_.front().cols());
  Matrix kk = Matrix::Zero(dim_in_, dim_in_);
  Matrix kkd = Matrix::Zero(dim_out_, dim_out_);
  for (const auto& k : ops_) {
    if (k.rows() != dim_out_ || k.cols() != dim_in_) {
      throw Error(ErrorCode::DimensionMismatch, "Kraus operators of unequal shape");
    }
    kk += k.adjoint() * k;
    kkd += k * k.adjoint();
  }
  trace_preserving_ = (kk - Matrix::Identity(dim_in_, dim_in_)).norm() <= kCompleteTol;
  unital_ = (kkd - Matrix::Identity(dim_out_, dim_out_)).norm() <= kCompleteTol;
}

Povm::Povm(std::vector<HermitianMatrix> elements) : elements_(std::move(elements)) {
  if (elements_.empty()) throw Error(ErrorCode::InvalidPovm, "no elements");
  const int d = elements_.front().dim();
  Matrix sum = Matrix::Zero(d, d);
  for (const auto& e : elements_) {
    if (e.dim() != d) throw Error(ErrorCode::InvalidPovm, "elements of unequal dimension");
    if (!is_psd(e)) throw Error(ErrorCode::InvalidPovm, "element not PSD");
    sum += e.matrix();
  }
  const double dev = (sum - Matrix::Identity(d, d)).norm();
  if (dev > kCompleteTol) {
    throw Error(ErrorCode::InvalidPovm, "elements sum to I only within " + std::to_string(dev));
  }
}

std::vector<double> Povm::probabilities(const HermitianMatrix& x) const {
  std::vector<double> p;
  p.reserve(elements_.size());
  for (const auto& e : elements_) p.push_back(trace_product(x, e));
  return p;
}

HermitianMatrix apply(const KrausChannel& channel, const HermitianMatrix& x) {
  if (x.dim() != channel.dim_in()) {
    throw Error(ErrorCode::DimensionMismatch, "channel input dimension " +
                                                  std::to_string(channel.dim_in()) + ", got " +
                                                  std::to_string(x.dim()));
  }
  Matrix out = Matrix::Zero(channel.dim_out(), channel.dim_out());
  for (const auto& k : channel.kraus_ops()) out += k * x.matrix() * k.adjoint();
  return HermitianMatrix(out);
}

KrausChannel adjoint(const KrausChannel& channel) {
  std::vector<Matrix> ops;
  ops.reserve(channel.kraus_ops().size());
  for (const auto& k : channel.kraus_ops()) ops.push_back(k.adjoint());
  return KrausChannel(std::move(ops));
}

KrausChannel identity_channel(int dim) { return KrausChannel({Matrix::Identity(dim, dim)}); }

KrausChannel unitary_channel(const Matrix& u) { return KrausChannel({u}); }

KrausChannel pinching_channel(int dim) {
  std::vector<Matrix> ops;
  for (int i = 0; i < dim; ++i) {
    Matrix p = Matrix::Zero(dim, dim);
    p(i, i) = 1.0;
    ops.push_back(p);
  }
  return KrausChannel(std::move(ops));
}

KrausChannel random_cptp(int dim_in, int dim_out, int env_dim, std::uint64_t seed) {
  if (env_dim < 1 || dim_in < 1 || dim_out < 1) {
    throw Error(ErrorCode::InvalidArgument, "random_cptp dimensions must be positive");
  }
  if (dim_out * env_dim < dim_in) {
    throw Error(ErrorCode::InvalidArgument, "dim_out * env_dim must be at least dim_in");
  }
  Rng rng(seed);
  const Matrix v = haar_isometry(dim_out * env_dim, dim_in, rng);
  std::vector<Matrix> ops;
  ops.reserve(env_dim);
  for (int e = 0; e < env_dim; ++e) ops.push_back(v.middleRows(e * dim_out, dim_out));
  return KrausChannel(std::move(ops));
}

KrausChannel measurement_channel(const Povm& m) {
  const int d = m.dim(), n = m.size();
  std::vector<Matrix> ops;
  for (int i = 0; i < n; ++i) {
    const Spectrum s = eigh(m[i]);
    for (int r = 0; r < d; ++r) {
      const double lam = s.values(r);
      if (lam <= 0.0) continue;
      Matrix k = Matrix::Zero(n, d);
      k.row(i) = std::sqrt(lam) * s.vectors.col(r).adjoint();
      ops.push_back(std::move(k));
    }
  }
  return KrausChannel(std::move(ops));
}

KrausChannel preparation_channel(const std::vector<HermitianMatrix>& states) {
  if (states.empty()) throw Error(ErrorCode::InvalidState, "no states");
  const int n = static_cast<int>(states.size());
  const int k = states.front().dim();
  std::vector<Matrix> ops;
  for (int i = 0; i < n; ++i) {
    const auto& rho = states[i];
    if (rho.dim() != k) throw Error(ErrorCode::InvalidState, "states of unequal dimension");
    if (!is_psd(rho)) throw Error(ErrorCode::InvalidState, "state " + std::to_string(i) + " not PSD");
    if (std::abs(rho.trace() - 1.0) > 1e-9) {
      throw Error(ErrorCode::InvalidState, "state " + std::to_string(i) + " not unit trace");
    }
    const Spectrum s = eigh(rho);
    for (int r = 0; r < k; ++r) {
      const double lam = s.values(r);
      if (lam <= 0.0) continue;
      Matrix op = Matrix::Zero(k, n);
      op.col(i) = std::sqrt(lam) * s.vectors.col(r);
      ops.push_back(std::move(op));
    }
  }
  return KrausChannel(std::move(ops));
}

Povm random_povm(int dim, int n, std::uint64_t seed) {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "random_povm needs n >= 1");
  if (n == 1) return Povm({HermitianMatrix::identity(dim)});
  Rng rng(seed);
  std::vector<HermitianMatrix> g;
  Matrix total = Matrix::Zero(dim, dim);
  for (int i = 0; i < n; ++i) {
    g.push_back(random_psd(dim, rng));
    total += g.back().matrix();
  }
  const Matrix t = psd_inv_sqrt(HermitianMatrix(total)).matrix();
  std::vector<HermitianMatrix> elems;
  for (const auto& gi : g) elems.push_back(congruence(t, gi));
  return Povm(std::move(elems));
}

Povm basis_povm(const Matrix& unitary) {
  std::vector<HermitianMatrix> elems;
  for (int i = 0; i < unitary.cols(); ++i) elems.push_back(HermitianMatrix::projector(unitary.col(i)));
  return Povm(std::move(elems));
}

}  // namespace fidlab
