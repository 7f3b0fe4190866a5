#include <gtest/gtest.h>

#include <cmath>

#include "jgap/error.hpp"
#include "jgap/hard_body.hpp"
#include "jgap/lift.hpp"

using namespace jgap;

TEST(HardBody, DeriveParamsFromRatio) {
  const HardBodyParams p = derive_params(1000000, 1000.0);
  EXPECT_EQ(p.k, 9);
  EXPECT_FALSE(p.admissible.tail_regime);
  EXPECT_DOUBLE_EQ(p.R_requested, 1000.0);
  EXPECT_NEAR(p.R, 1e6 / (6.0 * c0_constant() * 3.0), 1e-9);
}

TEST(HardBody, DemoParameters) {
  const HardBodyParams p = params_from_k(4000, 16, 256, 7);
  EXPECT_NEAR(p.R, 3.003127, 1e-6);
  EXPECT_NEAR(1.0 / (2.0 * p.R), 0.16649, 1e-5);
  EXPECT_NEAR(1.0 / (2.0 * p.R), 3.0 * c0_constant() * 4.0 / 4000.0, 1e-15);
}

TEST(HardBody, UnitSubsetCollapsesExponent) {
  const double n = 1000.0;
  const HardBodyParams p = derive_params(1000, n / (6.0 * c0_constant()));
  EXPECT_EQ(p.k, 1);
  EXPECT_EQ(p.m, static_cast<std::size_t>(std::floor(std::pow(n / 2.0, 1.0 / 20.0))));
}

TEST(HardBody, FacetCountIsCapped) {
  const FacetCount fc = facet_count_for(10000000, 2000, 1000);
  EXPECT_TRUE(fc.capped);
  EXPECT_EQ(fc.m, 1000u);
  const FacetCount small = facet_count_for(4000, 16);
  EXPECT_FALSE(small.capped);
  EXPECT_EQ(small.m, static_cast<std::size_t>(std::floor(std::pow(4000.0 / 32.0, 16.0 / 20.0))));
}

TEST(HardBody, DegenerateAndBadRanges) {
  try {
    derive_params(100, 1e6);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::kDegenerateK);
  }
  EXPECT_THROW(derive_params(100, 1e-3), Error);
  EXPECT_THROW(params_from_k(100, 100, 3, 0), Error);
  EXPECT_THROW(params_from_k(100, 3, 0, 0), Error);
}

TEST(HardBody, DemoInstanceGeometry) {
  const HardBodyInstance inst = build_instance(params_from_k(4000, 16, 256, 7));
  const HPolytope K = inst.body();
  EXPECT_EQ(K.num_facets(), 4257);
  for (std::size_t i = 0; i < inst.subsets.size(); ++i)
    for (std::size_t j = i + 1; j < inst.subsets.size(); ++j)
      ASSERT_LE(intersection_size(inst.subsets[i], inst.subsets[j]), 7);

  const double c0 = c0_constant();
  const Matrix xy = inst.witnesses * inst.facet_dirs.transpose();
  const Matrix xu = inst.witnesses * inst.frame->contacts.transpose();
  double cross = -1e9;
  for (Eigen::Index i = 0; i < xy.rows(); ++i) {
    EXPECT_NEAR(inst.witnesses.row(i).norm(), c0, 1e-10);
    EXPECT_NEAR(xy(i, i), 1.0, 1e-9);
    for (Eigen::Index j = 0; j < xy.cols(); ++j)
      if (i != j) cross = std::max(cross, xy(i, j));
  }
  EXPECT_LE(cross, 1e-10);
  EXPECT_LE(xu.maxCoeff(), 3.0 * c0 * 4.0 / 4000.0 + 1e-9);
}

TEST(HardBody, SingleFacetTouchesWitness) {
  const HardBodyInstance inst = build_instance(params_from_k(300, 5, 1, 3));
  const HPolytope K = inst.body();
  const Vector x = inst.witnesses.row(0).transpose();
  EXPECT_TRUE(contains(K, x, 1e-8));
  EXPECT_NEAR(inst.facet_dirs.row(0).dot(x), 1.0, 1e-9);
}

TEST(HardBody, BuildIsDeterministic) {
  const HardBodyParams p = params_from_k(800, 6, 30, 42);
  const HardBodyInstance a = build_instance(p);
  const HardBodyInstance b = build_instance(p);
  EXPECT_EQ(a.subsets, b.subsets);
  EXPECT_EQ(a.witnesses, b.witnesses);
  const HardBodyInstance c = assemble_instance(p, a.subsets);
  EXPECT_EQ(a.facet_dirs, c.facet_dirs);
}

TEST(HardBody, TheoremBoundRegime) {
  EXPECT_THROW(theorem_bound(1e6, 1000.0), Error);
  const TheoremBound tb = theorem_bound(1e6, 1e3 * std::sqrt(std::exp(1.0)));
  EXPECT_TRUE(std::isfinite(tb.log_facets));
  EXPECT_GT(std::exp(tb.log_facets), 0.0);
  EXPECT_TRUE(std::isfinite(tb.log_simplified));
}

TEST(HardBody, ExponentDerivativeSign) {
  const double n = 1e6;
  const double lo = std::sqrt(std::exp(1.0) * n);
  for (double f : {1.001, 1.5, 3.0, 10.0, 100.0}) EXPECT_LT(theorem_exponent_derivative(n, f * lo), 0.0);
  EXPECT_GT(theorem_exponent_derivative(n, 0.9 * lo), 0.0);
  // Central difference agrees with the closed form.
  const double R = 5.0 * lo, h = 1e-3 * R;
  auto g = [&](double r) { return std::log(r * r / n) * n * n / (r * r); };
  EXPECT_NEAR((g(R + h) - g(R - h)) / (2 * h), theorem_exponent_derivative(n, R),
              1e-5 * std::abs(theorem_exponent_derivative(n, R)));
}

TEST(HardBody, Constants) {
  const double c0 = c0_constant();
  EXPECT_NEAR(c_prime_constant(), 1.0 / (720.0 * c0 * c0), 1e-18);
  EXPECT_NEAR(c1_constant(), std::sqrt(c_prime_constant() / 8.0), 1e-18);
}
