#include "hilbert/exact_arith.hpp"

#include <atomic>
#include <thread>
#include <vector>

#include <gtest/gtest.h>

#include "oracles.hpp"

namespace hilbert {
namespace {

TEST(Binomial, SmallValues) {
  EXPECT_EQ(binomial(5, 2), 10);
  EXPECT_EQ(binomial(4, -1), 0);
  EXPECT_EQ(binomial(-3, 2), 6);
  EXPECT_EQ(binomial(3, 5), 0);
  EXPECT_EQ(binomial(0, 0), 1);
  EXPECT_EQ(binomial(-1, 3), -1);
  EXPECT_EQ(binomial(-7, 0), 1);
}

TEST(Binomial, PascalRuleOnAllIntegers) {
  for (int m = -50; m <= 50; ++m) {
    for (int r = 0; r <= 50; ++r) {
      ASSERT_EQ(binomial(m, r), binomial(m - 1, r) + binomial(m - 1, r - 1))
          << "m=" << m << " r=" << r;
    }
  }
}

TEST(Binomial, MatchesFactorialFormula) {
  for (int m = 0; m <= 30; ++m) {
    for (int r = 0; r <= m; ++r) {
      ASSERT_EQ(binomial(m, r), oracle::factorial_binomial(m, r));
    }
  }
}

TEST(Binomial, UpperNegation) {
  for (int m = 1; m <= 30; ++m) {
    for (int r = 0; r <= 30; ++r) {
      const ExactInt sign = (r % 2 == 0) ? 1 : -1;
      ASSERT_EQ(binomial(-m, r), sign * binomial(m + r - 1, r));
    }
  }
}

TEST(Binomial, LargeArgumentsStayExact) {
  // Crosses from the 128-bit path into arbitrary precision.
  EXPECT_EQ(binomial(400, 200), oracle::factorial_binomial(400, 200));
  EXPECT_EQ(binomial(200, 100), oracle::factorial_binomial(200, 100));
  EXPECT_EQ(to_decimal(binomial(100, 50)),
            "100891344545564193334812497256");
  for (int r = 0; r <= 200; r += 7) {
    const ExactInt sign = (r % 2 == 0) ? 1 : -1;
    ASSERT_EQ(binomial(-200, r), sign * oracle::factorial_binomial(200 + r - 1, r));
  }
}

TEST(Binomial, IsThreadSafe) {
  std::vector<std::thread> workers;
  std::atomic<int> mismatches{0};
  for (int t = 0; t < 4; ++t) {
    workers.emplace_back([&] {
      for (int m = 0; m <= 60; ++m) {
        for (int r = 0; r <= m; ++r) {
          if (binomial(m, r) != oracle::factorial_binomial(m, r)) ++mismatches;
        }
      }
    });
  }
  for (auto& w : workers) w.join();
  EXPECT_EQ(mismatches, 0);
}

}  // namespace
}  // namespace hilbert
