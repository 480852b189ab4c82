#include <gtest/gtest.h>

#include "fidlab/error.hpp"
#include "fidlab/random.hpp"
#include "fidlab/superop.hpp"
#include "oracles.hpp"

using namespace fidlab;

namespace {

HermitianMatrix random_pd(int d, Rng& rng) {
  return random_psd(d, rng) + HermitianMatrix::identity(d) * 0.1;
}

}  // namespace

TEST(LyapunovSolve, IdentityHalves) {
  Rng rng(1);
  HermitianMatrix x = random_hermitian(3, rng);
  EXPECT_LE((lyapunov_solve(HermitianMatrix::identity(3), x).matrix() - 0.5 * x.matrix()).norm(),
            1e-14);
}

TEST(LyapunovSolve, DiagonalExample) {
  Matrix ones = Matrix::Ones(2, 2);
  HermitianMatrix s = lyapunov_solve(HermitianMatrix::diagonal({1, 3}), HermitianMatrix(ones));
  Matrix expected(2, 2);
  expected << 0.5, 0.25, 0.25, 1.0 / 6.0;
  EXPECT_LE((s.matrix() - expected).cwiseAbs().maxCoeff(), 1e-14);
}

TEST(LyapunovSolve, ResidualAndKroneckerOracle) {
  Rng rng(5);
  for (int t = 0; t < 50; ++t) {
    const int d = 2 + t % 4;
    HermitianMatrix z = random_pd(d, rng), x = random_hermitian(d, rng);
    const Matrix s = lyapunov_solve(z, x).matrix();
    EXPECT_LE((s * z.matrix() + z.matrix() * s - x.matrix()).norm(), 1e-10 * (1 + x.norm()));
    EXPECT_LE((s - oracle::lyapunov_kron(z.matrix(), x.matrix())).norm(), 1e-9 * (1 + s.norm()));
  }
}

TEST(LyapunovSolve, SingularZ) {
  HermitianMatrix z = HermitianMatrix::diagonal({1, 0});
  // Consistent right-hand side living on supp Z ⊕ off-diagonal blocks.
  Matrix x(2, 2);
  x << 1, 1, 1, 0;
  EXPECT_NO_THROW(lyapunov_solve(z, HermitianMatrix(x)));
  try {
    lyapunov_solve(z, HermitianMatrix::identity(2));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::SingularPair);
  }
}

TEST(LyapunovSolve, PositiveMap) {
  Rng rng(21);
  for (int t = 0; t < 200; ++t) {
    const int d = 2 + t % 4;
    EXPECT_TRUE(is_psd(lyapunov_solve(random_pd(d, rng), random_psd(d, rng, 1 + t % d))));
  }
}

TEST(LyapunovSolve, SelfDual) {
  Rng rng(22);
  for (int t = 0; t < 50; ++t) {
    const int d = 2 + t % 4;
    HermitianMatrix z = random_pd(d, rng), x = random_hermitian(d, rng), y = random_hermitian(d, rng);
    EXPECT_NEAR(trace_product(lyapunov_solve(z, x), y), trace_product(x, lyapunov_solve(z, y)), 1e-9);
  }
}

TEST(LyapunovSuperop, Examples) {
  SuperOperator s = lyapunov_superop(HermitianMatrix::identity(2));
  EXPECT_LE((s.matrix - 0.5 * Matrix::Identity(4, 4)).norm(), 1e-14);
  SuperOperator sd = lyapunov_superop(HermitianMatrix::diagonal({1, 3}));
  Eigen::VectorXd expected(4);
  expected << 0.5, 0.25, 0.25, 1.0 / 6.0;
  EXPECT_LE((sd.matrix - Matrix(expected.cast<Complex>().asDiagonal())).norm(), 1e-14);
  EXPECT_THROW(lyapunov_superop(HermitianMatrix::diagonal({1, 0})), Error);
}

TEST(LyapunovSuperop, HermitianAndAgreesWithSolve) {
  Rng rng(9);
  for (int t = 0; t < 30; ++t) {
    const int d = 2 + t % 3;
    HermitianMatrix z = random_pd(d, rng), x = random_hermitian(d, rng);
    SuperOperator s = lyapunov_superop(z);
    EXPECT_LE((s.matrix - s.matrix.adjoint()).norm(), 1e-10);
    EXPECT_LE((s.apply(x).matrix() - lyapunov_solve(z, x).matrix()).norm(), 1e-9);
  }
}

TEST(ComposedSpectrum, Examples) {
  Spectrum s1 = composed_lyapunov_spectrum(HermitianMatrix::identity(1), HermitianMatrix::identity(1));
  ASSERT_EQ(s1.size(), 1);
  EXPECT_NEAR(s1.values(0), 0.25, 1e-15);

  Spectrum s = composed_lyapunov_spectrum(HermitianMatrix::diagonal({1, 4}), HermitianMatrix::diagonal({4, 1}));
  EXPECT_NEAR(s.values(0), 1.0 / 25, 1e-14);
  EXPECT_NEAR(s.values(1), 1.0 / 25, 1e-14);
  EXPECT_NEAR(s.values(2), 1.0 / 16, 1e-14);
  EXPECT_NEAR(s.values(3), 1.0 / 16, 1e-14);

  Rng rng(9);
  EXPECT_GT(composed_lyapunov_spectrum(random_pd(3, rng), random_pd(3, rng)).values(0), 0.0);
}

TEST(ComposedSpectrum, MatchesNonHermitianProduct) {
  Rng rng(10);
  for (int t = 0; t < 30; ++t) {
    const int d = 2 + t % 3;
    HermitianMatrix l0 = random_pd(d, rng), l1 = random_pd(d, rng);
    Eigen::VectorXd ours = composed_lyapunov_spectrum(l0, l1).values;
    Eigen::VectorXd ref = oracle::composed_spectrum(l0.matrix(), l1.matrix());
    EXPECT_LE((ours - ref).cwiseAbs().maxCoeff(), 1e-9 * (1 + ref.cwiseAbs().maxCoeff()));
  }
}

TEST(ComposedSpectrum, UnitaryInvariance) {
  Rng rng(11);
  for (int t = 0; t < 30; ++t) {
    const int d = 2 + t % 3;
    HermitianMatrix l0 = random_pd(d, rng), l1 = random_pd(d, rng);
    Matrix u = haar_unitary(d, rng);
    Eigen::VectorXd a = composed_lyapunov_spectrum(l0, l1).values;
    Eigen::VectorXd b = composed_lyapunov_spectrum(congruence(u, l0), congruence(u, l1)).values;
    EXPECT_LE((a - b).cwiseAbs().maxCoeff(), 1e-8);
  }
}

TEST(ComposedSpectrum, RejectsSingular) {
  EXPECT_THROW(composed_lyapunov_spectrum(HermitianMatrix::diagonal({1, 0}), HermitianMatrix::identity(2)),
               Error);
}

TEST(PositiveFixedPoint, Examples) {
  FixedPoint fp = positive_fixed_point(HermitianMatrix::identity(2), HermitianMatrix::identity(2));
  EXPECT_NEAR(fp.eigenvalue, 0.25, 1e-14);
  EXPECT_LE((fp.state.matrix() - 0.5 * Matrix::Identity(2, 2)).norm(), 1e-14);

  FixedPoint fd = positive_fixed_point(HermitianMatrix::diagonal({1, 4}), HermitianMatrix::diagonal({4, 1}));
  EXPECT_NEAR(fd.eigenvalue, 1.0 / 16, 1e-12);
  EXPECT_LE(std::abs(fd.state(0, 1)), 1e-12);
}

TEST(PositiveFixedPoint, IrreduciblePairsGivePerronVector) {
  Rng rng(13);
  int checked = 0;
  for (int t = 0; t < 40; ++t) {
    const int d = 2 + t % 3;
    HermitianMatrix l0 = random_pd(d, rng), l1 = random_pd(d, rng);
    ASSERT_TRUE(is_irreducible_pair(l0, l1));
    FixedPoint fp = positive_fixed_point(l0, l1, 100000, 1e-12);
    EXPECT_GT(min_eigenvalue(fp.state), 1e-8);
    EXPECT_NEAR(fp.state.trace(), 1.0, 1e-12);
    const double top = composed_lyapunov_spectrum(l0, l1).values.maxCoeff();
    EXPECT_NEAR(fp.eigenvalue, top, 1e-7 * top);
    ++checked;
  }
  EXPECT_EQ(checked, 40);
}

TEST(PositiveFixedPoint, NoConvergenceReported) {
  Rng rng(14);
  HermitianMatrix l0 = random_pd(3, rng), l1 = random_pd(3, rng);
  try {
    positive_fixed_point(l0, l1, 1, 1e-300);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NoConvergence);
  }
}

TEST(AlgebraDimension, DetectsCommonInvariantSubspace) {
  EXPECT_EQ(generated_algebra_dimension(HermitianMatrix::diagonal({1, 2, 3}),
                                        HermitianMatrix::diagonal({3, 1, 2})),
            3);
  Rng rng(15);
  HermitianMatrix a = direct_sum(random_pd(2, rng), HermitianMatrix::identity(1));
  HermitianMatrix b = direct_sum(random_pd(2, rng), HermitianMatrix::identity(1) * 2.0);
  EXPECT_FALSE(is_irreducible_pair(a, b));
  EXPECT_TRUE(is_irreducible_pair(random_pd(3, rng), random_pd(3, rng)));
}
