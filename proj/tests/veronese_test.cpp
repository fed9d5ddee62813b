#include "hilbert/veronese.hpp"

#include <algorithm>

#include <gtest/gtest.h>

#include "hilbert/errors.hpp"
#include "oracles.hpp"

namespace hilbert {
namespace {

struct TermView {
  ExactInt coeff;
  int t_power;
  int pole_order;
  bool operator==(const TermView&) const = default;
};

std::vector<TermView> terms_of(const ClosedSeries& s) {
  std::vector<TermView> out;
  for (const auto& t : s.terms) out.push_back({t.coeff(), t.t_power(), t.pole_order()});
  return out;
}

TEST(VeroneseParams, Validates) {
  EXPECT_NO_THROW(VeroneseParams(1, 1));
  EXPECT_NO_THROW(VeroneseParams(5, 5));
  EXPECT_THROW(VeroneseParams(2, 3), InvalidParams);
  EXPECT_THROW(VeroneseParams(3, 0), InvalidParams);
  EXPECT_THROW(VeroneseParams(0, 0), InvalidParams);
  EXPECT_THROW(VeroneseParams(-1, -2), InvalidParams);
}

TEST(HilbertSeriesClosed, Examples) {
  EXPECT_EQ(terms_of(hilbert_series_closed({1, 1})),
            (std::vector<TermView>{{1, 1, 1}}));
  // i = 1, 2: C(1,1) T^2 (1-T)^-3 + C(2,1) T^2 (1-T)^-2.
  EXPECT_EQ(terms_of(hilbert_series_closed({3, 2})),
            (std::vector<TermView>{{1, 2, 3}, {2, 2, 2}}));
  for (int d = 1; d <= 8; ++d) {
    EXPECT_EQ(terms_of(hilbert_series_closed({d, d})),
              (std::vector<TermView>{{1, d, d}}));
  }
}

TEST(HilbertSeriesClosed, ShapeOfTermList) {
  for (int n = 1; n <= 12; ++n) {
    for (int d = 1; d <= n; ++d) {
      const auto terms = terms_of(hilbert_series_closed({n, d}));
      ASSERT_EQ(terms.size(), static_cast<std::size_t>(n - d + 1));
      std::vector<int> poles;
      for (const auto& t : terms) {
        EXPECT_EQ(t.t_power, d);
        poles.push_back(t.pole_order);
      }
      std::sort(poles.begin(), poles.end());
      for (int j = 0; j < static_cast<int>(poles.size()); ++j) {
        EXPECT_EQ(poles[j], d + j);
      }
    }
  }
}

TEST(HilbertCoefficient, Examples) {
  EXPECT_EQ(hilbert_coefficient({4, 2}, 2), 6);
  EXPECT_EQ(hilbert_coefficient({4, 2}, 3), 16);
  EXPECT_EQ(hilbert_coefficient({3, 2}, 3), oracle::count_monomials(3, 2, 3));
  EXPECT_EQ(hilbert_coefficient({3, 2}, 3), 7);
  EXPECT_EQ(hilbert_coefficient({5, 1}, 2), 15);
  EXPECT_EQ(hilbert_coefficient({5, 3}, 2), 0);
}

TEST(HilbertCoefficient, DegreeDAndDPlusOne) {
  for (int n = 1; n <= 15; ++n) {
    for (int d = 1; d <= n; ++d) {
      ASSERT_EQ(hilbert_coefficient({n, d}, d), binomial(n, d));
      ASSERT_EQ(hilbert_coefficient({n, d}, d + 1),
                d * binomial(n, d) + binomial(n, d + 1));
    }
  }
}

TEST(HilbertCoefficientRecurrence, Examples) {
  EXPECT_EQ(hilbert_coefficient_recurrence({3, 2}, 3), 7);
  EXPECT_EQ(hilbert_coefficient_recurrence({4, 2}, 2), binomial(4, 2));
  EXPECT_EQ(hilbert_coefficient_recurrence({5, 3}, 3), binomial(5, 3));
  EXPECT_EQ(hilbert_coefficient_recurrence({6, 2}, 2), binomial(6, 2));
  EXPECT_EQ(hilbert_coefficient_recurrence({2, 2}, 1), 0);
  EXPECT_EQ(hilbert_coefficient_recurrence({5, 1}, 2), 15);
  EXPECT_EQ(hilbert_coefficient_recurrence({5, 1}, 0), 0);
  EXPECT_THROW(hilbert_coefficient_recurrence({3, 2}, -1), RangeError);
}

TEST(CountByEnumeration, Examples) {
  EXPECT_EQ(count_by_enumeration({3, 2}, 3), 7);
  EXPECT_EQ(count_by_enumeration({4, 2}, 2), 6);
  for (int n = 1; n <= 6; ++n) {
    for (int d = 1; d <= n; ++d) {
      EXPECT_EQ(count_by_enumeration({n, d}, d - 1), 0);
    }
  }
  EXPECT_EQ(count_by_enumeration({1, 1}, 0), 0);
  EXPECT_EQ(count_by_enumeration({1, 1}, 9), 1);
}

TEST(CountByEnumeration, AgreesWithRecursiveOracle) {
  for (int n = 1; n <= 6; ++n) {
    for (int d = 1; d <= n; ++d) {
      for (int k = 0; k <= 7; ++k) {
        ASSERT_EQ(count_by_enumeration({n, d}, k), oracle::count_monomials(n, d, k));
      }
    }
  }
}

TEST(CountByEnumeration, FeasibilityGuard) {
  // C(20+19, 20) is far beyond 10^7.
  EXPECT_THROW(count_by_enumeration({20, 2}, 20), TooLarge);
  // C(15+9-1, 9) = 817190 is fine.
  EXPECT_NO_THROW(count_by_enumeration({15, 14}, 9));
}

TEST(CountBySupport, Examples) {
  EXPECT_EQ(count_by_support({3, 2}, 3), 7);
  EXPECT_EQ(count_by_support({4, 2}, 2), 6);
  for (int n = 1; n <= 10; ++n) EXPECT_EQ(count_by_support({n, n}, n), 1);
  EXPECT_EQ(count_by_support({3, 1}, 0), 0);
}

TEST(GenfuncTable, Examples) {
  const GenfuncTable table = genfunc_table(3, 3, 5);
  EXPECT_EQ(table.at(1, 1, 1), 1);
  EXPECT_EQ(table.at(3, 2, 3), 7);
  EXPECT_EQ(table.at(2, 3, 5), 0);
  EXPECT_EQ(table.at(0, 0, 0), 0);
  EXPECT_THROW(table.at(4, 1, 1), RangeError);
  EXPECT_THROW(table.at(1, 1, -1), RangeError);
}

TEST(GenfuncTable, Guards) {
  EXPECT_THROW(genfunc_table(0, 1, 1), RangeError);
  EXPECT_THROW(genfunc_table(101, 100, 100), TooLarge);
  EXPECT_NO_THROW(genfunc_table(10, 10, 10));
}

TEST(GenfuncTable, VanishesWhenDExceedsNOrK) {
  const GenfuncTable table = genfunc_table(8, 8, 8);
  for (int n = 0; n <= 8; ++n) {
    for (int d = 0; d <= 8; ++d) {
      for (int k = 0; k <= 8; ++k) {
        if (d > std::min(n, k) || d == 0) {
          ASSERT_EQ(table.at(n, d, k), 0);
        }
      }
    }
  }
}

TEST(HilbertFunction, FourWayAgreement) {
  const GenfuncTable table = genfunc_table(7, 7, 9);
  for (int n = 1; n <= 7; ++n) {
    for (int d = 1; d <= n; ++d) {
      const VeroneseParams p(n, d);
      for (int k = d; k <= 9; ++k) {
        const ExactInt formula = hilbert_coefficient(p, k);
        ASSERT_EQ(formula, hilbert_coefficient_recurrence(p, k));
        ASSERT_EQ(formula, count_by_enumeration(p, k));
        ASSERT_EQ(formula, count_by_support(p, k));
        ASSERT_EQ(formula, table.at(n, d, k));
        ASSERT_EQ(formula, oracle::count_monomials(n, d, k));
      }
    }
  }
}

TEST(HilbertFunction, ClosedSeriesMatchesCoefficientFormula) {
  for (int n = 1; n <= 10; ++n) {
    for (int d = 1; d <= n; ++d) {
      const VeroneseParams p(n, d);
      const CoefficientWindow w = expand(hilbert_series_closed(p), 15);
      for (int k = 0; k <= 15; ++k) ASSERT_EQ(w.at_degree(k), hilbert_coefficient(p, k));
      for (int k = 0; k < d; ++k) ASSERT_EQ(w.at_degree(k), 0);
    }
  }
}

TEST(HilbertFunction, ClassDecompositionByFirstVariable) {
  auto count = [](int n, int d, int k) -> ExactInt {
    if (n < d || k < 0) return 0;
    return count_by_enumeration({n, d}, k);
  };
  for (int n = 2; n <= 7; ++n) {
    for (int d = 2; d <= n; ++d) {
      for (int k = d; k <= 9; ++k) {
        ExactInt classes = count(n - 1, d, k);
        for (int s = 1; s <= k - d + 1; ++s) classes += count(n - 1, d - 1, k - s);
        ASSERT_EQ(count(n, d, k), classes) << n << ' ' << d << ' ' << k;
      }
    }
  }
}

}  // namespace
}  // namespace hilbert
