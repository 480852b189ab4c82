#include <gtest/gtest.h>

#include "fidlab/channels.hpp"
#include "fidlab/error.hpp"
#include "fidlab/fidelity.hpp"
#include "fidlab/polar.hpp"
#include "fidlab/random.hpp"

using namespace fidlab;

namespace {

HermitianMatrix plus_state() {
  Matrix m(2, 2);
  m << 0.5, 0.5, 0.5, 0.5;
  return HermitianMatrix(m);
}

double dist(const HermitianMatrix& a, const HermitianMatrix& b) {
  return (a.matrix() - b.matrix()).cwiseAbs().maxCoeff();
}

}  // namespace

TEST(KrausChannel, Flags) {
  EXPECT_TRUE(identity_channel(3).trace_preserving());
  EXPECT_TRUE(identity_channel(3).unital());
  KrausChannel c = random_cptp(2, 3, 2, 5);
  EXPECT_TRUE(c.trace_preserving());
  EXPECT_EQ(c.dim_in(), 2);
  EXPECT_EQ(c.dim_out(), 3);
  EXPECT_TRUE(adjoint(c).unital());
  EXPECT_THROW(KrausChannel({Matrix::Identity(2, 2), Matrix::Identity(3, 3)}), Error);
}

TEST(Apply, Examples) {
  Rng rng(1);
  HermitianMatrix x = random_hermitian(3, rng);
  EXPECT_EQ(dist(apply(identity_channel(3), x), x), 0.0);
  EXPECT_LE(dist(apply(pinching_channel(2), plus_state()), pinch(plus_state())), 1e-15);
  for (int t = 0; t < 20; ++t) {
    KrausChannel c = random_cptp(3, 2 + t % 3, 2 + t % 3, 100 + t);
    HermitianMatrix rho = random_density(3, rng);
    HermitianMatrix out = apply(c, rho);
    EXPECT_NEAR(out.trace(), 1.0, 1e-10);
    EXPECT_TRUE(is_psd(out));
  }
  EXPECT_THROW(apply(identity_channel(2), x), Error);
}

TEST(Adjoint, Examples) {
  EXPECT_EQ(adjoint(identity_channel(2)).kraus_ops().front(), Matrix::Identity(2, 2));
  Rng rng(2);
  HermitianMatrix x = random_hermitian(3, rng);
  EXPECT_LE(dist(apply(adjoint(pinching_channel(3)), x), apply(pinching_channel(3), x)), 1e-15);

  KrausChannel c = random_cptp(3, 4, 2, 13);
  KrausChannel ca = adjoint(c);
  for (int t = 0; t < 10; ++t) {
    HermitianMatrix l = random_hermitian(4, rng), xin = random_hermitian(3, rng);
    EXPECT_NEAR(trace_product(apply(ca, l), xin), trace_product(l, apply(c, xin)), 1e-10);
  }
}

TEST(RandomCptp, Examples) {
  KrausChannel u = random_cptp(3, 3, 1, 4);
  ASSERT_EQ(u.kraus_ops().size(), 1u);
  const Matrix& k = u.kraus_ops().front();
  EXPECT_LE((k.adjoint() * k - Matrix::Identity(3, 3)).norm(), 1e-10);

  KrausChannel c = random_cptp(2, 3, 3, 9);
  Matrix sum = Matrix::Zero(2, 2);
  for (const auto& op : c.kraus_ops()) sum += op.adjoint() * op;
  EXPECT_LE((sum - Matrix::Identity(2, 2)).norm(), 1e-10);

  KrausChannel a = random_cptp(3, 2, 2, 77), b = random_cptp(3, 2, 2, 77);
  for (size_t i = 0; i < a.kraus_ops().size(); ++i) EXPECT_EQ(a.kraus_ops()[i], b.kraus_ops()[i]);
}

TEST(Povm, Validation) {
  EXPECT_THROW(Povm({HermitianMatrix::diagonal({1, 0})}), Error);
  EXPECT_THROW(Povm({HermitianMatrix::diagonal({1.5, 1}), HermitianMatrix::diagonal({-0.5, 0})}), Error);
  EXPECT_NO_THROW(Povm({HermitianMatrix::diagonal({1, 0}), HermitianMatrix::diagonal({0, 1})}));
}

TEST(MeasurementChannel, Examples) {
  Rng rng(3);
  HermitianMatrix rho = random_density(3, rng);
  Povm standard = basis_povm(Matrix::Identity(3, 3));
  EXPECT_LE(dist(apply(measurement_channel(standard), rho), pinch(rho)), 1e-14);

  HermitianMatrix out = apply(measurement_channel(Povm({HermitianMatrix::identity(3)})), rho);
  EXPECT_EQ(out.dim(), 1);
  EXPECT_NEAR(out(0, 0).real(), rho.trace(), 1e-14);

  Povm m = random_povm(3, 5, 17);
  HermitianMatrix probs = apply(measurement_channel(m), rho);
  EXPECT_TRUE(measurement_channel(m).trace_preserving());
  for (int i = 0; i < 5; ++i) {
    EXPECT_NEAR(probs(i, i).real(), trace_product(rho, m[i]), 1e-10);
    for (int j = 0; j < 5; ++j)
      if (i != j) EXPECT_LE(std::abs(probs(i, j)), 1e-14);
  }
}

TEST(PreparationChannel, Examples) {
  std::vector<HermitianMatrix> basis = {HermitianMatrix::diagonal({1, 0}), HermitianMatrix::diagonal({0, 1})};
  HermitianMatrix l = HermitianMatrix::diagonal({0.3, 0.7});
  EXPECT_LE(dist(apply(preparation_channel(basis), l), l), 1e-15);

  Rng rng(4);
  HermitianMatrix rho = random_density(3, rng);
  EXPECT_LE(dist(apply(preparation_channel({rho}), HermitianMatrix::diagonal({2.5})), rho * 2.5), 1e-14);

  std::vector<HermitianMatrix> states;
  for (int i = 0; i < 4; ++i) states.push_back(random_density(3, rng));
  KrausChannel prep = preparation_channel(states);
  EXPECT_TRUE(prep.trace_preserving());
  std::vector<double> p = {0.1, 0.2, 0.3, 0.4};
  HermitianMatrix expected = HermitianMatrix::zero(3);
  for (int i = 0; i < 4; ++i) expected = expected + states[i] * p[i];
  EXPECT_LE(dist(apply(prep, HermitianMatrix::diagonal({0.1, 0.2, 0.3, 0.4})), expected), 1e-12);

  EXPECT_THROW(preparation_channel({HermitianMatrix::diagonal({0.5, 0.2})}), Error);
}

TEST(RandomPovm, Examples) {
  Povm one = random_povm(3, 1, 5);
  ASSERT_EQ(one.size(), 1);
  EXPECT_LE((one[0].matrix() - Matrix::Identity(3, 3)).norm(), 1e-15);

  Povm m = random_povm(4, 6, 8);
  Matrix sum = Matrix::Zero(4, 4);
  for (const auto& e : m.elements()) sum += e.matrix();
  EXPECT_LE((sum - Matrix::Identity(4, 4)).norm(), 1e-10);

  Povm a = random_povm(3, 4, 99), b = random_povm(3, 4, 99);
  for (int i = 0; i < 4; ++i) EXPECT_EQ(a[i].matrix(), b[i].matrix());
}

TEST(ChannelComposition, MeasureAfterPrepareIsStochastic) {
  Rng rng(6);
  for (int t = 0; t < 20; ++t) {
    const int n = 2 + t % 3, k = 2 + t % 2, m = 2 + t % 4;
    std::vector<HermitianMatrix> states;
    for (int i = 0; i < n; ++i) states.push_back(random_density(k, rng));
    KrausChannel prep = preparation_channel(states);
    KrausChannel meas = measurement_channel(random_povm(k, m, 200 + t));
    for (int j = 0; j < n; ++j) {
      std::vector<double> e(n, 0.0);
      e[j] = 1.0;
      HermitianMatrix col = apply(meas, apply(prep, HermitianMatrix::diagonal(e)));
      double total = 0.0;
      for (int i = 0; i < m; ++i) {
        EXPECT_GE(col(i, i).real(), -1e-14);
        total += col(i, i).real();
      }
      EXPECT_NEAR(total, 1.0, 1e-10);
    }
  }
}

TEST(Monotonicity, FidelitiesUnderCptp) {
  Rng rng(7);
  for (int t = 0; t < 60; ++t) {
    const int d = 2 + t % 3;
    HermitianMatrix x = random_density(d, rng), y = random_density(d, rng);
    KrausChannel c = random_cptp(d, 2 + t % 3, 1 + t % 3, 300 + t);
    HermitianMatrix cx = apply(c, x), cy = apply(c, y);
    EXPECT_GE(fidelity_max(cx, cy), fidelity_max(x, y) - 1e-8);
    EXPECT_GE(fidelity_min(cx, cy), fidelity_min(x, y) - 1e-8);
    EXPECT_GE(fidelity_half(cx, cy), fidelity_half(x, y) - 1e-8);
  }
}

TEST(Monotonicity, PolarsUnderUnitalAdjoint) {
  Rng rng(8);
  for (int t = 0; t < 40; ++t) {
    const int d = 2 + t % 2, dout = 2 + (t / 2) % 2;
    HermitianMatrix l0 = random_psd(dout, rng) + HermitianMatrix::identity(dout) * 0.2;
    HermitianMatrix l1 = random_psd(dout, rng) + HermitianMatrix::identity(dout) * 0.2;
    KrausChannel ca = adjoint(random_cptp(d, dout, 2, 400 + t));
    HermitianMatrix m0 = apply(ca, l0), m1 = apply(ca, l1);
    EXPECT_GE(polar_max(m0, m1), polar_max(l0, l1) - 1e-8);
    EXPECT_GE(polar_half(m0, m1), polar_half(l0, l1) - 1e-8);
    EXPECT_GE(polar_min(m0, m1), polar_min(l0, l1) - 1e-8);
  }
}
