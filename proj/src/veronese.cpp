#include "hilbert/veronese.hpp"

#include <algorithm>
#include <array>
#include <string>

#include "hilbert/errors.hpp"

namespace hilbert {

VeroneseParams::VeroneseParams(int n, int d) : n_(n), d_(d) {
  if (d < 1 || n < d) {
    throw InvalidParams("I_{n,d} needs n >= d >= 1, got n=" +
                        std::to_string(n) + " d=" + std::to_string(d));
  }
}

ClosedSeries hilbert_series_closed(const VeroneseParams& params) {
  const int n = params.n();
  const int d = params.d();
  ClosedSeries series;
  series.terms.reserve(static_cast<std::size_t>(n - d + 1));
  for (int i = d - 1; i <= n - 1; ++i) {
    series.terms.emplace_back(binomial(i, d - 1), d, n - i + d - 1);
  }
  return series;
}

ExactInt hilbert_coefficient(const VeroneseParams& params, int k) {
  const int n = params.n();
  const int d = params.d();
  if (k < d) return 0;
  ExactInt sum = 0;
  for (int i = d - 1; i <= n - 1; ++i) {
    sum += binomial(i, d - 1) * binomial(n - i + k - 2, k - d);
  }
  return sum;
}

namespace {

// Dense (n, d, k) cube used by the recurrence tables.
class Cube {
 public:
  Cube(int n, int d, int k)
      : dn_(d + 1), dk_(k + 1),
        data_(static_cast<std::size_t>(n + 1) * (d + 1) * (k + 1)) {}

  ExactInt& operator()(int n, int d, int k) {
    return data_[(static_cast<std::size_t>(n) * dn_ + d) * dk_ + k];
  }

  // Boundary convention: zero off the table.
  ExactInt get(int n, int d, int k) {
    if (n < 0 || d < 1 || k < 0) return 0;
    return (*this)(n, d, k);
  }

 private:
  std::size_t dn_;
  std::size_t dk_;
  std::vector<ExactInt> data_;
};

}  // namespace

ExactInt hilbert_coefficient_recurrence(const VeroneseParams& params, int k) {
  if (k < 0) throw RangeError("negative degree");
  const int n = params.n();
  const int d = params.d();
  Cube sums(n, d, k);
  Cube diffs(n, d, k);

  for (int nn = 0; nn <= n; ++nn) {
    for (int dd = 1; dd <= d; ++dd) {
      for (int kk = 0; kk <= k; ++kk) {
        if (nn < dd || kk < dd) continue;  // entries stay zero
        if (dd == 1) {
          sums(nn, dd, kk) = binomial(nn + kk - 1, kk);
          diffs(nn, dd, kk) = sums(nn, dd, kk);
          continue;
        }
        ExactInt s = sums.get(nn - 1, dd, kk);
        for (int step = 1; step <= kk - dd + 1; ++step) {
          s += sums.get(nn - 1, dd - 1, kk - step);
        }
        sums(nn, dd, kk) = std::move(s);

        diffs(nn, dd, kk) = diffs.get(nn - 1, dd, kk) +
                            diffs.get(nn - 1, dd - 1, kk - 1) +
                            diffs.get(nn, dd, kk - 1) -
                            diffs.get(nn - 1, dd, kk - 1);

        if (sums(nn, dd, kk) != diffs(nn, dd, kk)) {
          throw InternalDisagreement(
              "recurrence forms disagree at (n,d,k)=(" + std::to_string(nn) +
              "," + std::to_string(dd) + "," + std::to_string(kk) + "): " +
              to_decimal(sums(nn, dd, kk)) + " vs " +
              to_decimal(diffs(nn, dd, kk)));
        }
      }
    }
  }
  return sums(n, d, k);
}

ExactInt count_by_enumeration(const VeroneseParams& params, int k) {
  if (k < 0) throw RangeError("negative degree");
  const int n = params.n();
  const int d = params.d();
  if (binomial(n + k - 1, k) > kEnumerationLimit) {
    throw TooLarge("enumeration of degree-" + std::to_string(k) +
                   " monomials in " + std::to_string(n) +
                   " variables exceeds the limit of 10^7");
  }

  // Odometer over compositions of k into n parts, descending lexicographic
  // order from (k, 0, ..., 0) to (0, ..., 0, k).
  std::vector<int> exps(static_cast<std::size_t>(n), 0);
  exps[0] = k;
  std::int64_t count = 0;
  while (true) {
    const auto support = std::count_if(exps.begin(), exps.end(),
                                       [](int e) { return e > 0; });
    if (support >= d) ++count;

    int i = n - 2;
    while (i >= 0 && exps[static_cast<std::size_t>(i)] == 0) --i;
    if (i < 0) break;
    const int tail = exps[static_cast<std::size_t>(n - 1)];
    exps[static_cast<std::size_t>(n - 1)] = 0;
    --exps[static_cast<std::size_t>(i)];
    exps[static_cast<std::size_t>(i + 1)] = tail + 1;
  }
  return count;
}

ExactInt count_by_support(const VeroneseParams& params, int k) {
  const int n = params.n();
  ExactInt sum = 0;
  for (int j = params.d(); j <= std::min(n, k); ++j) {
    sum += binomial(n, j) * binomial(k - 1, j - 1);
  }
  return sum;
}

GenfuncTable::GenfuncTable(int n_max, int d_max, int k_max)
    : n_max_(n_max), d_max_(d_max), k_max_(k_max),
      entries_(static_cast<std::size_t>(n_max + 1) * (d_max + 1) *
               (k_max + 1)) {}

std::size_t GenfuncTable::index(int n, int d, int k) const {
  return (static_cast<std::size_t>(n) * (d_max_ + 1) + d) * (k_max_ + 1) + k;
}

const ExactInt& GenfuncTable::at(int n, int d, int k) const {
  if (n < 0 || d < 0 || k < 0 || n > n_max_ || d > d_max_ || k > k_max_) {
    throw RangeError("genfunc entry (" + std::to_string(n) + "," +
                     std::to_string(d) + "," + std::to_string(k) +
                     ") outside table bounds");
  }
  return entries_[index(n, d, k)];
}

namespace {

struct Monomial {
  int x, y, z;
  int c;
};

// (1 - x - xyz - z + xz)(1 - z - x), multiplied out.
constexpr std::array<Monomial, 11> kDenominator{{
    {0, 0, 0, 1}, {1, 0, 0, -2}, {0, 0, 1, -2}, {2, 0, 0, 1},
    {1, 0, 1, 3}, {0, 0, 2, 1},  {1, 1, 1, -1}, {2, 1, 1, 1},
    {1, 1, 2, 1}, {2, 0, 1, -1}, {1, 0, 2, -1},
}};

// xyz(1 - z)
constexpr std::array<Monomial, 2> kNumerator{{{1, 1, 1, 1}, {1, 1, 2, -1}}};

}  // namespace

GenfuncTable genfunc_table(int n_max, int d_max, int k_max) {
  if (n_max < 1 || d_max < 1 || k_max < 1) {
    throw RangeError("genfunc table bounds must be >= 1");
  }
  if (static_cast<std::int64_t>(n_max) * d_max * k_max > kGenfuncLimit) {
    throw TooLarge("genfunc table bounds exceed 10^6 entries");
  }

  GenfuncTable table(n_max, d_max, k_max);
  // Every denominator monomial other than the constant 1 has nonnegative
  // exponents and positive total degree, so lexicographic order visits each
  // dependency before its use.
  for (int n = 0; n <= n_max; ++n) {
    for (int d = 0; d <= d_max; ++d) {
      for (int k = 0; k <= k_max; ++k) {
        ExactInt value = 0;
        for (const auto& m : kNumerator) {
          if (m.x == n && m.y == d && m.z == k) value += m.c;
        }
        for (const auto& m : kDenominator) {
          if (m.x == 0 && m.y == 0 && m.z == 0) continue;
          if (m.x > n || m.y > d || m.z > k) continue;
          value -= m.c * table.slot(n - m.x, d - m.y, k - m.z);
        }
        table.slot(n, d, k) = std::move(value);
      }
    }
  }
  return table;
}

}  // namespace hilbert
