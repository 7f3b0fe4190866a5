#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "jgap/error.hpp"
#include "jgap/net_approx.hpp"
#include "jgap/simplex_frame.hpp"
#include "oracles.hpp"

using namespace jgap;

namespace {

HPolytope regular_polygon(int sides, double phase = 0.0) {
  Matrix A(sides, 2);
  for (int i = 0; i < sides; ++i) {
    const double t = phase + 2.0 * std::numbers::pi * i / sides;
    A(i, 0) = std::cos(t);
    A(i, 1) = std::sin(t);
  }
  return HPolytope(A, Vector::Ones(sides));
}

}  // namespace

TEST(NetApprox, CircleGridSizes) {
  const SphericalNet net = build_net(2, 0.1, NetStrategy::kGrid);
  EXPECT_EQ(net.points.rows(), 63);
  EXPECT_TRUE(net.certified);
  EXPECT_EQ(build_net(2, 2.0, NetStrategy::kGrid).points.rows(), 4);
  Rng rng = make_stream(1);
  EXPECT_LE(empirical_covering_gap(net, 10000, rng), 0.1);
}

TEST(NetApprox, SphereGridCovers) {
  for (double eps : {0.5, 0.2, 0.08}) {
    const SphericalNet net = build_net(3, eps, NetStrategy::kGrid);
    EXPECT_TRUE(net.certified);
    for (Eigen::Index i = 0; i < net.points.rows(); ++i) EXPECT_NEAR(net.points.row(i).norm(), 1.0, 1e-12);
    Rng rng = make_stream(2);
    EXPECT_LE(empirical_covering_gap(net, 10000, rng), eps);
  }
}

TEST(NetApprox, RandomNetReportsGap) {
  Rng rng = make_stream(3);
  const SphericalNet net = build_net(3, 0.2, NetStrategy::kRandom, &rng);
  EXPECT_FALSE(net.certified);
  EXPECT_EQ(net.test_directions, 10000u);
  EXPECT_LT(net.empirical_gap, 0.2);
}

TEST(NetApprox, GridUnavailableAboveThree) {
  try {
    build_net(4, 0.3, NetStrategy::kGrid);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::kStrategyUnavailable);
  }
  EXPECT_THROW(build_net(3, 0.0, NetStrategy::kGrid), Error);
}

TEST(NetApprox, BallOracleGivesUnitOffsets) {
  const SphericalNet net = build_net(3, 0.3, NetStrategy::kGrid);
  const HPolytope P = approx_polytope(ball_support_oracle(1.0), net);
  EXPECT_TRUE((P.offsets().array() == 1.0).all());
  EXPECT_EQ(P.num_facets(), net.points.rows());
}

TEST(NetApprox, OffsetsAreOracleValuesExactly) {
  const HPolytope K = simplex_hrep(build_simplex(2));
  const SupportOracle h = polytope_support_oracle(K, 2.0);
  const SphericalNet net = build_net(2, 0.3, NetStrategy::kGrid);
  const HPolytope P = approx_polytope(h, net);
  for (Eigen::Index i = 0; i < net.points.rows(); ++i) {
    EXPECT_EQ(P.offset(i), h.h(net.points.row(i).transpose()));
  }
}

TEST(NetApprox, OracleRangeViolation) {
  const SphericalNet net = build_net(2, 0.5, NetStrategy::kGrid);
  SupportOracle bad = ball_support_oracle(1.0);
  bad.h = [](const Vector&) { return 0.5; };
  try {
    approx_polytope(bad, net);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::kOracleRangeViolation);
  }
}

TEST(NetApprox, TriangleSandwich) {
  const HPolytope K = simplex_hrep(build_simplex(2));
  const double R = 2.0, delta = 0.2;
  const SphericalNet net = build_net(2, delta / (2 * R), NetStrategy::kGrid);
  const HPolytope P = approx_polytope(polytope_support_oracle(K, R), net);
  const SandwichReport r = sandwich_check(K, P, delta);
  EXPECT_TRUE(r.outer_ok);
  EXPECT_TRUE(r.inner_ok);
}

TEST(NetApprox, CoarseNetFailsInnerInclusion) {
  const HPolytope K = simplex_hrep(build_simplex(2));
  // Seven directions; a multiple of three would contain the facet normals and give P = K.
  const SphericalNet net = build_net(2, 1.0, NetStrategy::kGrid);
  ASSERT_EQ(net.points.rows(), 7);
  const HPolytope P = approx_polytope(polytope_support_oracle(K, 2.0), net);
  const SandwichReport r = sandwich_check(K, P, 0.01);
  EXPECT_TRUE(r.outer_ok);
  EXPECT_FALSE(r.inner_ok);
}

// Net of N directions over a regular 4N-gon sharing them: (1-δ)P ⊂ K exactly
// when cos(π/N) >= 1-δ.
TEST(NetApprox, PolygonClosedForm) {
  const int N = 10;
  const HPolytope K = regular_polygon(4 * N);
  SphericalNet net;
  net.dim = 2;
  net.points = regular_polygon(N).normals();
  const HPolytope P = approx_polytope(polytope_support_oracle(K, 2.0), net);
  const double threshold = 1.0 - std::cos(std::numbers::pi / N);
  EXPECT_TRUE(sandwich_check(K, P, threshold + 1e-3).inner_ok);
  EXPECT_FALSE(sandwich_check(K, P, threshold - 1e-3).inner_ok);
  EXPECT_TRUE(sandwich_check(K, P, threshold - 1e-3).outer_ok);
}

TEST(NetApprox, LipschitzAudits) {
  Rng rng = make_stream(4);
  EXPECT_EQ(lipschitz_audit(ball_support_oracle(1.0), 3, 500, rng).worst_ratio, 0.0);

  const double R = 3.0;
  // [-a, a] x [-1, 1] with corners on the circle of radius R.
  const HPolytope rect = box((Vector(2) << std::sqrt(R * R - 1.0), 1.0).finished());
  EXPECT_LE(lipschitz_audit(polytope_support_oracle(rect, R), 2, 2000, rng).worst_ratio, R + 1e-6);

  const HPolytope d5 = simplex_hrep(build_simplex(5));
  EXPECT_LE(lipschitz_audit(polytope_support_oracle(d5, 5.0), 5, 500, rng).worst_ratio, 5.0 + 1e-6);
}

TEST(NetApprox, RandomBodyBetweenBalls) {
  Rng rng = make_stream(6);
  for (int n : {2, 3}) {
    for (double R : {1.1, 1.5, 3.0}) {
      const HPolytope K = random_body(n, R, 15, rng);
      for (Eigen::Index i = 0; i < K.num_facets(); ++i) {
        EXPECT_NEAR(K.normal(i).norm(), 1.0, 1e-12);
        EXPECT_GE(K.offset(i), 1.0);
      }
      const auto verts = oracle::enumerate_vertices(K.normals(), K.offsets());
      ASSERT_FALSE(verts.empty());
      for (const auto& v : verts) EXPECT_LE(v.norm(), R + 1e-9);
    }
  }
  EXPECT_THROW(random_body(9, 2.0, 5, rng), Error);
  EXPECT_NO_THROW(random_body(9, 3.0, 5, rng));
}

TEST(NetApprox, BoundExponent) {
  EXPECT_NEAR(bound_exponent(63, 2, 2.0, 0.2), std::log(63.0) / (2.0 * std::log(20.0)), 1e-15);
}
