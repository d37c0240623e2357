#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include <Eigen/Geometry>

#include "ggr/similarity.hpp"

using namespace ggr;

namespace {

constexpr double pi = std::numbers::pi;
const double golden = (1 + std::sqrt(5.0)) / 2;

Vec2d random_vec2(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-10, 10);
  Vec2d v;
  do v = Vec2d(u(rng), u(rng));
  while (v.norm() < 1e-3);
  return v;
}

Vec3d random_vec3(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-10, 10);
  Vec3d v;
  do v = Vec3d(u(rng), u(rng), u(rng));
  while (v.norm() < 1e-3);
  return v;
}

double rel_residual(const auto& a, const auto& s) { return golden_pair_residual(a, s) / s.squaredNorm(); }

}  // namespace

TEST(Proportion, Examples) {
  EXPECT_DOUBLE_EQ(proportion(Vec2d(3, 4), Vec2d(0, 5)), 1.0);
  EXPECT_DOUBLE_EQ(proportion(Vec2d(1, 0), Vec2d(2, 0)), 0.5);
  EXPECT_DOUBLE_EQ(proportion(-2.0, 4.0), 0.5);
  EXPECT_THROW(proportion(Vec2d(1, 0), Vec2d(0, 0)), DivisionDomainError);
  EXPECT_THROW(proportion(1.0, 0.0), DivisionDomainError);
}

TEST(Proportion, ScaleInvariance) {
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> k(0.01, 100);
  for (int i = 0; i < 500; ++i) {
    const Vec3d a = random_vec3(rng), b = random_vec3(rng);
    const double t = k(rng);
    EXPECT_NEAR(proportion(Vec3d(t * a), Vec3d(t * b)), proportion(a, b), 1e-12 * proportion(a, b));
    EXPECT_NEAR(proportion(a, b) * proportion(b, a), 1.0, 1e-12);
  }
}

TEST(IsGoldenPair, Examples) {
  EXPECT_TRUE(is_golden_pair(1.0, phi1(Angled(0)), 1e-12));
  EXPECT_TRUE(is_golden_pair(Vec2d(1, 0), Vec2d(std::cos(2 * pi / 3), std::sin(2 * pi / 3)), 1e-12));
  EXPECT_FALSE(is_golden_pair(Vec2d(1, 0), Vec2d(1, 0), 1e-9));
  EXPECT_DOUBLE_EQ(golden_pair_residual(Vec2d(1, 0), Vec2d(1, 0)), 1.0);
  EXPECT_THROW(is_golden_pair(Vec2d(0, 0), Vec2d(1, 0), 1e-9), InvalidInput);
  EXPECT_THROW(is_golden_pair(1.0, 0.0, 1e-9), InvalidInput);
}

TEST(GoldenPartners1D, Examples) {
  auto p = golden_partners_1d(1.0);
  EXPECT_NEAR(p[0], 1.6180339887, 1e-9);
  EXPECT_NEAR(p[1], -0.6180339887, 1e-9);
  p = golden_partners_1d(2.0);
  EXPECT_NEAR(p[0], 3.2360679775, 1e-9);
  EXPECT_NEAR(p[1], -1.2360679775, 1e-9);
  p = golden_partners_1d(-1.0);
  EXPECT_NEAR(p[0], 0.6180339887, 1e-9);
  EXPECT_NEAR(p[1], -1.6180339887, 1e-9);
  EXPECT_THROW(golden_partners_1d(0.0), InvalidInput);
}

TEST(GoldenPartners1D, EveryPartnerIsGolden) {
  std::mt19937_64 rng(2);
  std::uniform_real_distribution<double> u(-100, 100);
  for (int i = 0; i < 500; ++i) {
    const double a = u(rng);
    for (double b : golden_partners_1d(a)) EXPECT_TRUE(is_golden_pair(a, b, 1e-12)) << a << " " << b;
  }
}

TEST(SimilarVector2D, Examples) {
  auto s = similar_vector_2d(Vec2d(1, 0), Angled(0));
  EXPECT_NEAR(s.vector.x(), 1.6180339887, 1e-9);
  EXPECT_NEAR(s.vector.y(), 0, 1e-15);
  s = similar_vector_2d(Vec2d(1, 0), Angled(pi / 2));
  EXPECT_NEAR(s.vector.x(), 0, 1e-15);
  EXPECT_NEAR(s.vector.y(), 1.2720196495, 1e-9);
  const double t = std::atan(2.0);
  s = similar_vector_2d(Vec2d(1, 2), Angled(t));
  EXPECT_NEAR((s.vector - std::sqrt(5.0) * golden * Vec2d(std::cos(t), std::sin(t))).norm(), 0, 1e-12);
  EXPECT_THROW(similar_vector_2d(Vec2d(0, 0), Angled(0)), InvalidInput);
}

TEST(SimilaritySet2D, FourSamples) {
  const auto set = similarity_set_2d(Vec2d(1, 0), 4);
  ASSERT_EQ(set.size(), 4u);
  const double expected[] = {1.6180339887, 1.2720196495, 0.6180339887, 1.2720196495};
  for (int k = 0; k < 4; ++k) EXPECT_NEAR(set[k].vector.norm(), expected[k], 1e-9);
  EXPECT_THROW(similarity_set_2d(Vec2d(1, 0), 0), InvalidInput);
}

TEST(SimilaritySet2D, GoldenPairOracle) {
  for (const Vec2d& a : {Vec2d(1, 2), Vec2d(-1, 3), Vec2d(1, 0)}) {
    const auto set = similarity_set_2d(a, 128);
    ASSERT_EQ(set.size(), 128u);
    for (const auto& s : set) EXPECT_LE(rel_residual(a, s.vector), 1e-9);
  }
}

TEST(SimilaritySet2D, RandomVectorsAreGoldenPairs) {
  std::mt19937_64 rng(4);
  for (int i = 0; i < 200; ++i) {
    const Vec2d a = random_vec2(rng);
    for (const auto& s : similarity_set_2d(a, 37)) ASSERT_LE(rel_residual(a, s.vector), 1e-9);
  }
}

TEST(SimilaritySet2D, ScaleAndRotationCovariance) {
  std::mt19937_64 rng(6);
  std::uniform_real_distribution<double> k(0.1, 10);
  std::uniform_int_distribution<int> shift(0, 63);
  for (int i = 0; i < 100; ++i) {
    const Vec2d a = random_vec2(rng);
    const double t = k(rng);
    const int m = shift(rng);
    const Eigen::Rotation2D<double> rot(2 * pi * m / 64);
    const auto base = similarity_set_2d(a, 64);
    const auto scaled = similarity_set_2d(Vec2d(t * a), 64);
    const auto rotated = similarity_set_2d(Vec2d(rot * a), 64);
    for (int j = 0; j < 64; ++j) {
      const Vec2d s = base[j].vector;
      EXPECT_LE((scaled[j].vector - t * s).norm(), 1e-12 * t * s.norm() + 1e-12);
      EXPECT_LE((rotated[(j + m) % 64].vector - rot * s).norm(), 1e-11 * std::max(1.0, s.norm()));
    }
  }
}

TEST(SumSimilaritySets2D, CoincidesWithSetOfTheSum) {
  const auto reference = similarity_set_2d(Vec2d(1, 1), 128);
  for (const auto& [a1, a2] : {std::pair{Vec2d(0, 1), Vec2d(1, 0)}, std::pair{Vec2d(1, 2), Vec2d(0, -1)},
                               std::pair{Vec2d(2, 3), Vec2d(-1, -2)}}) {
    const auto r = sum_similarity_sets_2d(a1, a2, 128);
    ASSERT_EQ(r.samples.size(), reference.size());
    for (std::size_t k = 0; k < reference.size(); ++k) {
      EXPECT_LE((r.samples[k].vector - reference[k].vector).norm(), 1e-12);
    }
  }
  const auto r = sum_similarity_sets_2d(Vec2d(1, 2), Vec2d(-1, 3), 128);
  const auto s05 = similarity_set_2d(Vec2d(0, 5), 128);
  for (std::size_t k = 0; k < s05.size(); ++k) EXPECT_LE((r.samples[k].vector - s05[k].vector).norm(), 1e-12);
  EXPECT_LE(r.max_angle_wise_residual, 1e-12);
}

TEST(SumSimilaritySets2D, AngleWiseRuleOnRandomPairs) {
  std::mt19937_64 rng(8);
  for (int i = 0; i < 200; ++i) {
    const Vec2d a1 = random_vec2(rng), a2 = random_vec2(rng);
    if ((a1 + a2).norm() < 1e-2) continue;
    const double scale = a1.norm() + a2.norm();
    EXPECT_LE(sum_similarity_sets_2d(a1, a2, 32).max_angle_wise_residual, 1e-12 * scale * golden);
  }
}

TEST(SumSimilaritySets2D, DegenerateSum) {
  EXPECT_THROW(sum_similarity_sets_2d(Vec2d(1, 2), Vec2d(-1, -2), 16), DegenerateSumError);
  EXPECT_THROW(sum_similarity_sets_2d(Vec2d(0, 0), Vec2d(1, 2), 16), InvalidInput);
}

TEST(SimilarVector3D, Examples) {
  const Vec3d e3(0, 0, 1), e1(1, 0, 0);
  std::mt19937_64 rng(9);
  std::uniform_real_distribution<double> uphi(0, pi), upsi(0, 2 * pi);
  for (int i = 0; i < 200; ++i) {
    const Angled phi(uphi(rng)), psi(upsi(rng));
    const auto s3 = similar_vector_3d(e3, phi, psi);
    EXPECT_NEAR(s3.theta, phi.value(), 1e-7);
    EXPECT_LE((s3.vector - phi1(phi) * spherical_direction(phi, psi)).norm(), 1e-7);
    const auto s1 = similar_vector_3d(e1, phi, psi);
    EXPECT_NEAR(s1.theta, std::acos(std::sin(phi.value()) * std::cos(psi.value())), 1e-12);
  }
  const auto s = similar_vector_3d(Vec3d(0, 0, 2), Angled(0), Angled(0));
  EXPECT_NEAR((s.vector - Vec3d(0, 0, 3.2360679775)).norm(), 0, 1e-9);
}

TEST(SimilarVector3D, Errors) {
  EXPECT_THROW(similar_vector_3d(Vec3d(0, 0, 0), Angled(0), Angled(0)), InvalidInput);
  EXPECT_THROW(similar_vector_3d(Vec3d(0, 0, 1), Angled(pi + 1e-9), Angled(0)), InvalidInput);
  EXPECT_THROW(similar_vector_3d(Vec3d(0, 0, 1), Angled(-1e-9), Angled(0)), InvalidInput);
  EXPECT_NO_THROW(similar_vector_3d(Vec3d(0, 0, 1), Angled(pi), Angled(0)));
}

TEST(SimilaritySet3D, GoldenPairOracleAndGrid) {
  for (const Vec3d& a : {Vec3d(0, 0, 1), Vec3d(1, 0, 0)}) {
    const auto set = similarity_set_3d(a, 257, 512);
    ASSERT_EQ(set.size(), 257u * 512u);
    EXPECT_EQ(set.front().polar.value(), 0);
    EXPECT_EQ(set.back().polar.value(), pi);
    EXPECT_LT(set[511].azimuth.value(), 2 * pi);
    for (const auto& s : set) {
      ASSERT_LE(rel_residual(a, s.vector), 1e-9);
      ASSERT_LE(s.clamp_excursion, 1e-12);
    }
  }
}

TEST(SimilaritySet3D, RandomVectorsAreGoldenPairs) {
  std::mt19937_64 rng(10);
  for (int i = 0; i < 50; ++i) {
    const Vec3d a = random_vec3(rng);
    for (const auto& s : similarity_set_3d(a, 17, 32)) ASSERT_LE(rel_residual(a, s.vector), 1e-9);
  }
}

TEST(SimilaritySet3D, UnitNormAtOneThirdTurn) {
  // 7-point closed grid on [0, pi] contains 2pi/3 exactly at index 4.
  const auto set = similarity_set_3d(Vec3d(0, 0, 1), 7, 16);
  for (std::size_t j = 0; j < 16; ++j) EXPECT_NEAR(set[4 * 16 + j].vector.norm(), 1.0, 1e-9);
}

TEST(SimilaritySet3D, AxialSymmetryAboutE1) {
  // Reflecting y -> -y (psi -> 2pi - psi) leaves the angle to e1 unchanged.
  const auto set = similarity_set_3d(Vec3d(1, 0, 0), 33, 64);
  for (std::size_t i = 0; i < 33; ++i) {
    for (std::size_t j = 1; j < 64; ++j) {
      const auto& s = set[i * 64 + j];
      const auto& m = set[i * 64 + (64 - j)];
      EXPECT_NEAR(s.ggr, m.ggr, 1e-12);
      EXPECT_NEAR(s.vector.y(), -m.vector.y(), 1e-12);
    }
  }
}

TEST(Embedding, OneDimensionalPartnersFromTwoSampleSet) {
  for (double a : {0.5, 1.0, 3.0}) {
    const auto p = golden_partners_1d(a);
    const auto set = similarity_set_2d(Vec2d(a, 0), 2);
    EXPECT_NEAR(set[0].vector.x(), p[0], 1e-12);
    EXPECT_NEAR(set[1].vector.x(), p[1], 1e-12);
  }
}
