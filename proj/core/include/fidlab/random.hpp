#pragma once

#include <cstdint>
#include <random>

#include "fidlab/linalg.hpp"

namespace fidlab {

/// splitmix64 mix of (seed, index). Used to give each trial or restart its own
/// stream so serial and parallel schedules produce the same numbers.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index);

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  double normal() { return normal_(engine_); }
  double uniform(double lo = 0.0, double hi = 1.0) {
    return lo + (hi - lo) * std::uniform_real_distribution<double>(0.0, 1.0)(engine_);
  }
  Complex complex_normal() { return {normal(), normal()}; }
  std::mt19937_64& engine() { return engine_; }

 private:
  std::mt19937_64 engine_;
  std::normal_distribution<double> normal_{0.0, 1.0};
};

/// Matrix with iid standard complex Gaussian entries.
Matrix random_gaussian(int rows, int cols, Rng& rng);
/// GUE-like Hermitian matrix.
HermitianMatrix random_hermitian(int dim, Rng& rng);
/// G G† with G of shape dim×rank (rank ≤ dim); rank 0 means full.
HermitianMatrix random_psd(int dim, Rng& rng, int rank = 0);
/// Unit-trace PSD.
HermitianMatrix random_density(int dim, Rng& rng, int rank = 0);
/// Unit-trace PD with smallest eigenvalue at least floor/dim.
HermitianMatrix random_pd_density(int dim, Rng& rng, double floor = 0.05);
/// Haar-distributed isometry (rows ≥ cols), via QR with phase correction.
Matrix haar_isometry(int rows, int cols, Rng& rng);
Matrix haar_unitary(int dim, Rng& rng);

}  // namespace fidlab
