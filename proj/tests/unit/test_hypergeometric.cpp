#include <gtest/gtest.h>

#include <cmath>

#include "jgap/error.hpp"
#include "jgap/hypergeometric.hpp"
#include "oracles.hpp"

using namespace jgap;

TEST(Hypergeometric, PointMassExamples) {
  EXPECT_NEAR(exact_point_mass(6, 2, 2), 1.0 / 15.0, 1e-15);
  EXPECT_NEAR(exact_point_mass(10, 3, 0), 35.0 / 120.0, 1e-15);
  EXPECT_EQ(exact_point_mass(5, 4, 0), 0.0);  // k - l > n - k
}

TEST(Hypergeometric, TailExamples) {
  EXPECT_EQ(exact_tail(50, 7, 0), 1.0);
  EXPECT_EQ(exact_tail(50, 7, 8), 0.0);
  EXPECT_NEAR(exact_tail(6, 2, 1), 0.6, 1e-15);
}

TEST(Hypergeometric, RangeErrors) {
  EXPECT_THROW(exact_point_mass(5, 6, 1), Error);
  EXPECT_THROW(exact_point_mass(5, 0, 0), Error);
  EXPECT_THROW(exact_point_mass(5, 2, 3), Error);
  EXPECT_THROW(exact_tail(5, 2, -1), Error);
}

TEST(Hypergeometric, LogChooseAgreesWithExactIntegers) {
  for (int a : {10, 57, 300, 5000, 100000}) {
    for (int b : {0, 1, 3, a / 3, a / 2, a - 2, a}) {
      const double expected = static_cast<double>(boost::multiprecision::log(oracle::Big(oracle::binomial(a, b))));
      EXPECT_NEAR(log_choose(a, b), expected, 1e-10 * std::max(1.0, std::abs(expected)))
          << a << " choose " << b;
    }
  }
}

TEST(Hypergeometric, EnumerationSmall) {
  for (int n = 1; n <= 12; ++n) {
    for (int k = 1; k <= std::min(n, 6); ++k) {
      const auto counts = oracle::overlap_counts(n, k);
      std::uint64_t total = 0;
      for (auto c : counts) total += c;
      std::uint64_t tail = total;
      for (int t = 0; t <= k + 1; ++t) {
        const double expected = static_cast<double>(tail) / static_cast<double>(total);
        EXPECT_NEAR(exact_tail(n, k, t), expected, 1e-14) << n << "," << k << "," << t;
        if (t <= k) tail -= counts[static_cast<std::size_t>(t)];
      }
    }
  }
}

TEST(Hypergeometric, LogTailMatchesRationalAtScale) {
  for (auto [n, k] : {std::pair{4000, 16}, {100000, 120}, {1000000, 150}}) {
    for (int t : {1, 8, k / 2, k}) {
      const double expected = static_cast<double>(boost::multiprecision::log(oracle::exact_tail_big(n, k, t)));
      EXPECT_NEAR(log_exact_tail(n, k, t), expected, 1e-10 * std::abs(expected));
    }
  }
}

TEST(Hypergeometric, TailBoundExamples) {
  const TailReport r = tail_bound_check(1000000, 120);
  EXPECT_TRUE(r.satisfied);
  EXPECT_EQ(r.t, 60);
  EXPECT_NEAR(r.bound_log, 24.0 * std::log(240.0 / 1e6), 1e-12);
  EXPECT_TRUE(tail_bound_check(1000000, 101).satisfied);
  EXPECT_EQ(tail_bound_check(1000000, 101).t, 51);
  try {
    tail_bound_check(1000, 200);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::kOutOfRegime);
  }
  EXPECT_FALSE(tail_regime(1000000, 100));
  EXPECT_TRUE(tail_regime(1000000, 101));
  EXPECT_NO_THROW(tail_comparison(1000, 200));
}
