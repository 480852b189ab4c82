#include "fidlab/random.hpp"

#include <cmath>

#include <Eigen/QR>

#include "fidlab/error.hpp"

namespace fidlab {

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t z = seed ^ (0x9E3779B97F4A7C15ULL * (index + 1));
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

Matrix random_gaussian(int rows, int cols, Rng& rng) {
  Matrix g(rows, cols);
  for (int j = 0; j < cols; ++j)
    for (int i = 0; i < rows; ++i) g(i, j) = rng.complex_normal();
  return g;
}

HermitianMatrix random_hermitian(int dim, Rng& rng) {
  return HermitianMatrix(random_gaussian(dim, dim, rng));
}

HermitianMatrix random_psd(int dim, Rng& rng, int rank) {
  if (rank <= 0 || rank > dim) rank = dim;
  const Matrix g = random_gaussian(dim, rank, rng);
  return HermitianMatrix(g * g.adjoint());
}

HermitianMatrix random_density(int dim, Rng& rng, int rank) {
  HermitianMatrix p = random_psd(dim, rng, rank);
  return p * (1.0 / p.trace());
}

HermitianMatrix random_pd_density(int dim, Rng& rng, double floor) {
  HermitianMatrix rho = random_density(dim, rng);
  return rho * (1.0 - floor) + HermitianMatrix::identity(dim) * (floor / dim);
}

Matrix haar_isometry(int rows, int cols, Rng& rng) {
  if (rows < cols) throw Error(ErrorCode::InvalidArgument, "isometry needs rows >= cols");
  const Matrix g = random_gaussian(rows, cols, rng);
  Eigen::HouseholderQR<Matrix> qr(g);
  Matrix q = qr.householderQ() * Matrix::Identity(rows, cols);
  const Matrix r = qr.matrixQR();
  for (int j = 0; j < cols; ++j) {
    const Complex d = r(j, j);
    const double a = std::abs(d);
    if (a > 0) q.col(j) *= d / a;
  }
  return q;
}

Matrix haar_unitary(int dim, Rng& rng) { return haar_isometry(dim, dim, rng); }

}  // namespace fidlab
