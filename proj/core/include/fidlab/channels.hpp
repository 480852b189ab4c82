#pragma once

#include <cstdint>
#include <vector>

#include "fidlab/linalg.hpp"

namespace fidlab {

/// CP map X ↦ Σ K X K†. Kraus operators are dim_out × dim_in.
class KrausChannel {
 public:
  /// Throws DimensionMismatch if the operators disagree in shape or the list is empty.
  explicit KrausChannel(std::vector<Matrix> kraus_ops);

  int dim_in() const { return dim_in_; }
  int dim_out() const { return dim_out_; }
  const std::vector<Matrix>& kraus_ops() const { return ops_; }
  bool trace_preserving() const { return trace_preserving_; }
  bool unital() const { return unital_; }

 private:
  std::vector<Matrix> ops_;
  int dim_in_;
  int dim_out_;
  bool trace_preserving_;
  bool unital_;
};

class Povm {
 public:
  /// Throws InvalidPovm unless every element is PSD and they sum to I within 1e-9.
  explicit Povm(std::vector<HermitianMatrix> elements);

  int dim() const { return elements_.front().dim(); }
  int size() const { return static_cast<int>(elements_.size()); }
  const std::vector<HermitianMatrix>& elements() const { return elements_; }
  const HermitianMatrix& operator[](int i) const { return elements_[i]; }

  /// Outcome weights tr(X M_i).
  std::vector<double> probabilities(const HermitianMatrix& x) const;

 private:
  std::vector<HermitianMatrix> elements_;
};

HermitianMatrix apply(const KrausChannel& channel, const HermitianMatrix& x);
KrausChannel adjoint(const KrausChannel& channel);

KrausChannel identity_channel(int dim);
KrausChannel unitary_channel(const Matrix& u);
/// Dephasing in the standard basis.
KrausChannel pinching_channel(int dim);

/// Stinespring dilation of a Haar-random isometry C^dim_in → C^dim_out ⊗ C^env_dim.
KrausChannel random_cptp(int dim_in, int dim_out, int env_dim, std::uint64_t seed);

/// L ↦ Σ tr(L M_i) |i⟩⟨i|.
KrausChannel measurement_channel(const Povm& m);
/// |i⟩⟨j| ↦ δ_ij ρ_i.
KrausChannel preparation_channel(const std::vector<HermitianMatrix>& states);

Povm random_povm(int dim, int n, std::uint64_t seed);
/// Rank-one projectors onto the columns of a unitary.
Povm basis_povm(const Matrix& unitary);

}  // namespace fidlab
