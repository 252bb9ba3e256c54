#include <gtest/gtest.h>

#include "movmed/tensor.hpp"
#include "support/test_support.hpp"

using namespace movmed;
using movmed::testing::Sampler;

TEST(FourVector, RaiseLowerRoundTripIsExact) {
  Sampler s(11);
  for (int i = 0; i < 100; ++i) {
    const auto u = s.four_vector(10.0);
    const auto back = u.lowered().raised();
    for (std::size_t k = 0; k < 4; ++k) EXPECT_EQ(back[k], u[k]);
  }
}

TEST(FourVector, DotExamples) {
  const auto t = RealFourVector::upper(1, 0, 0, 0);
  EXPECT_EQ(dot(t, t), 1.0);
  const auto null = RealFourVector::upper(1, 1, 0, 0);
  EXPECT_EQ(dot(null, null), 0.0);
  const auto u = four_velocity({0.6, 0.0, 0.0});
  EXPECT_NEAR(dot(u, u), 1.0, 1e-12);
  // variance of the operands does not matter
  EXPECT_NEAR(dot(u.lowered(), u), 1.0, 1e-12);
  EXPECT_NEAR(dot(u.lowered(), u.lowered()), 1.0, 1e-12);
}

TEST(FourVector, DotIsBilinearAndSymmetric) {
  Sampler s(12);
  for (int i = 0; i < 200; ++i) {
    const auto u = s.four_vector(), v = s.four_vector(), w = s.four_vector();
    const double a = s.normal(), b = s.normal();
    const double scale = 1.0 + euclidean_norm(u) * (euclidean_norm(v) + euclidean_norm(w));
    EXPECT_NEAR(dot(u, v), dot(v, u), 1e-12 * scale);
    EXPECT_NEAR(dot(u, a * v + b * w), a * dot(u, v) + b * dot(u, w), 1e-12 * scale * (1 + std::abs(a) + std::abs(b)));
  }
}

TEST(FourVelocity, Examples) {
  const auto rest = four_velocity({0, 0, 0});
  EXPECT_EQ(rest[0], 1.0);
  EXPECT_EQ(rest[1], 0.0);
  const auto V = four_velocity({0.6, 0, 0});
  EXPECT_NEAR(V[0], 1.25, 1e-15);
  EXPECT_NEAR(V[1], 0.75, 1e-15);
  EXPECT_EQ(V.variance, Index::upper);
  EXPECT_THROW(four_velocity({1.0, 0, 0}), domain_error);
  EXPECT_THROW(four_velocity({0.8, 0.8, 0}), domain_error);
}

TEST(FourVelocity, NormalizedUpToPoint99) {
  Sampler s(13);
  for (int i = 0; i < 1000; ++i) {
    const auto V = four_velocity(s.velocity(0.99));
    EXPECT_NEAR(dot(V, V), 1.0, 1e-12 * V[0] * V[0]);
  }
}

TEST(Tensor2, MetricVariants) {
  const auto g = metric();
  EXPECT_EQ(g(0, 0), 1.0);
  EXPECT_EQ(g(2, 2), -1.0);
  const auto mixed = metric(Index::upper, Index::lower);
  for (std::size_t i = 0; i < 4; ++i) EXPECT_EQ(mixed(i, i), 1.0);
  // lowering both indices of g^{mu nu} gives g_{mu nu}
  EXPECT_EQ(max_abs_diff(metric(Index::upper, Index::upper).lower(), g), 0.0);
}

TEST(Tensor2, ContractionAgreesWithBruteForce) {
  Sampler s(14);
  for (int i = 0; i < 100; ++i) {
    const auto A = s.antisymmetric();
    RealTensor2 B(Index::lower, Index::upper);
    for (auto& row : B.c)
      for (auto& x : row) x = s.normal();
    const double lib = contract(A, B);
    const double oracle = movmed::testing::brute_double_contraction(A.lower().c, B.lower().c);
    EXPECT_NEAR(lib, oracle, 1e-12);
  }
}

TEST(Tensor2, ComposeWithMetricIsAssociative) {
  Sampler s(15);
  for (int i = 0; i < 50; ++i) {
    RealTensor2 A(Index::lower, Index::lower), B(Index::upper, Index::lower);
    for (std::size_t a = 0; a < 4; ++a)
      for (std::size_t b = 0; b < 4; ++b) {
        A.c[a][b] = s.normal();
        B.c[a][b] = s.normal();
      }
    const auto g = metric(Index::upper, Index::upper);
    const auto left = compose(compose(A, g), B.lower());
    const auto right = compose(A, compose(g, B.lower()));
    EXPECT_LT(max_abs_diff(left, right), 1e-13);
    // contracting with g^{..} is the same as raising the index
    EXPECT_LT(max_abs_diff(compose(A, g), A.as(Index::lower, Index::upper)), 1e-15);
  }
}

TEST(Tensor2, SymmetryPredicates) {
  Sampler s(16);
  const auto F = s.antisymmetric();
  EXPECT_TRUE(is_antisymmetric(F));
  EXPECT_TRUE(is_antisymmetric(F.as(Index::lower, Index::lower)));
  EXPECT_FALSE(is_symmetric(F));
  const auto V = four_velocity({0.3, 0.1, 0});
  EXPECT_TRUE(is_symmetric(outer(V, V)));
  EXPECT_FALSE(is_antisymmetric(outer(V, V)));
}

TEST(Boost, IdentityAtRest) {
  const auto L = boost_matrix({0, 0, 0});
  EXPECT_EQ(max_abs_diff(L, metric(Index::upper, Index::lower)), 0.0);
}

TEST(Boost, Examples) {
  const auto L = boost_matrix({0.6, 0, 0});
  EXPECT_NEAR(L(0, 0), 1.25, 1e-15);
  EXPECT_NEAR(L(0, 1), 0.75, 1e-15);
  const auto V = lorentz_transform(L, RealFourVector::upper(1, 0, 0, 0));
  EXPECT_LT(max_abs_diff(V, four_velocity({0.6, 0, 0})), 1e-15);
  const auto back = compose(L, boost_matrix({-0.6, 0, 0}));
  EXPECT_LT(max_abs_diff(back, metric(Index::upper, Index::lower)), 1e-12);
}

TEST(Boost, PreservesMetricForRandomVelocities) {
  Sampler s(17);
  for (int i = 0; i < 500; ++i) {
    const Vec3 v = s.velocity(0.99);
    const auto L = boost_matrix(v);
    const auto LtgL = compose(compose(transpose(L), metric()), L);
    EXPECT_LT(max_abs_diff(LtgL, metric()), 1e-10) << "v=" << norm3(v);
    const auto inv = compose(L, boost_matrix({-v[0], -v[1], -v[2]}));
    EXPECT_LT(max_abs_diff(inv, metric(Index::upper, Index::lower)), 1e-10);
  }
}

TEST(Boost, TransformPreservesVarianceAndDot) {
  Sampler s(18);
  for (int i = 0; i < 100; ++i) {
    const auto L = boost_matrix(s.velocity(0.9));
    const auto u = s.four_vector(), w = s.four_vector().lowered();
    const auto u2 = lorentz_transform(L, u), w2 = lorentz_transform(L, w);
    EXPECT_EQ(w2.variance, Index::lower);
    EXPECT_NEAR(dot(u2, w2), dot(u, w), 1e-11 * (1 + euclidean_norm(u2) * euclidean_norm(w2)));
  }
}

TEST(Tensor2, ComplexPromotion) {
  const auto k = RealFourVector::upper(1, 0, 0, 1);
  const auto e = ComplexFourVector::upper(0, complex(0, 1), 1, 0);
  const auto t = outer(k, e);
  static_assert(std::is_same_v<decltype(t), const ComplexTensor2>);
  EXPECT_EQ(t(3, 1), complex(0, 1));
  EXPECT_EQ(dot(e, conj(e)), complex(-2, 0));
}
