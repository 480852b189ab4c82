#pragma once

#include <cstdint>
#include <initializer_list>
#include <string_view>
#include <vector>

#include "fidlab/channels.hpp"
#include "fidlab/linalg.hpp"

namespace fidlab {

enum class Kind { Max, Min, Half };

std::string_view to_string(Kind kind);
/// Accepts "max", "min", "half". Throws InvalidArgument otherwise.
Kind parse_kind(std::string_view name);

/// Nonnegative vector, not necessarily normalized. Entries in [−1e-12, 0) are
/// treated as round-off and set to zero; anything more negative throws NegativeEntry.
class WeightVector {
 public:
  WeightVector() = default;
  WeightVector(std::vector<double> entries);
  WeightVector(std::initializer_list<double> entries);

  int size() const { return static_cast<int>(entries_.size()); }
  double operator[](int i) const { return entries_[i]; }
  const std::vector<double>& entries() const { return entries_; }
  double sum() const;

 private:
  std::vector<double> entries_;
};

struct ReverseTest {
  std::vector<HermitianMatrix> states;
  WeightVector p;
  WeightVector q;
  // The pair this test reproduces: Σ p_i states_i = x, Σ q_i states_i = y.
  HermitianMatrix x;
  HermitianMatrix y;
};

double classical_fidelity(const WeightVector& p, const WeightVector& q);

double fidelity_max(const HermitianMatrix& x, const HermitianMatrix& y);
double fidelity_min(const HermitianMatrix& x, const HermitianMatrix& y);
double fidelity_half(const HermitianMatrix& x, const HermitianMatrix& y);
double fidelity(Kind kind, const HermitianMatrix& x, const HermitianMatrix& y);

/// Gradient (∂F/∂X, ∂F/∂Y) at a PD pair; by homogeneity tr L0 X + tr L1 Y = F.
OperatorPair dual_optimizers(Kind kind, const HermitianMatrix& x, const HermitianMatrix& y);

/// Projective measurement attaining F_max as a classical fidelity.
Povm optimal_measurement(const HermitianMatrix& x, const HermitianMatrix& y);
/// Preparation attaining F_min as a classical fidelity.
ReverseTest optimal_reverse_test(const HermitianMatrix& x, const HermitianMatrix& y);

/// min over Hermitian A of F_max(X, (I − iA) Y (I + iA)) by multistart simplex search.
double fidelity_min_via_twist(const HermitianMatrix& x, const HermitianMatrix& y, int restarts = 20,
                              std::uint64_t seed = 0);

/// Hermitian matrix from d² real parameters: d diagonal entries, then (re, im)
/// of each strictly upper entry in row-major order.
HermitianMatrix hermitian_from_params(const std::vector<double>& params, int dim);

}  // namespace fidlab
