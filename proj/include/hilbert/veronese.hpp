#pragma once

#include <cstddef>
#include <vector>

#include "hilbert/exact_arith.hpp"
#include "hilbert/series.hpp"

namespace hilbert {

/// (n, d) with n >= d >= 1: the squarefree Veronese ideal I_{n,d} of
/// K[x_1..x_n], generated by all products of d distinct variables.
class VeroneseParams {
 public:
  // Throws InvalidParams unless n >= d >= 1.
  VeroneseParams(int n, int d);

  int n() const { return n_; }
  int d() const { return d_; }

  friend bool operator==(const VeroneseParams&, const VeroneseParams&) = default;

 private:
  int n_;
  int d_;
};

// Sum over i = d-1 .. n-1 of C(i, d-1) T^d (1-T)^-(n-i+d-1), in that order.
ClosedSeries hilbert_series_closed(const VeroneseParams& params);

// a_{n,d,k} = sum_{i=d-1}^{n-1} C(i, d-1) C(n-i+k-2, k-d); zero for k < d.
ExactInt hilbert_coefficient(const VeroneseParams& params, int k);

// a_{n,d,k} by bottom-up dynamic programming over both recurrence forms
//   a(n,d,k) = a(n-1,d,k) + sum_{s=1}^{k-d+1} a(n-1,d-1,k-s)
//   a(n,d,k) = a(n-1,d,k) + a(n-1,d-1,k-1) + a(n,d,k-1) - a(n-1,d,k-1)
// from the row a(n,1,k) = C(n+k-1, k), with a = 0 whenever n < d or k < d.
// Throws InternalDisagreement if the two tables differ anywhere.
ExactInt hilbert_coefficient_recurrence(const VeroneseParams& params, int k);

inline constexpr std::int64_t kEnumerationLimit = 10'000'000;

// Number of degree-k monomials in n variables with at least d variables in
// their support, counted one exponent vector at a time. Throws TooLarge when
// C(n+k-1, k) exceeds kEnumerationLimit.
ExactInt count_by_enumeration(const VeroneseParams& params, int k);

// sum_{j=d}^{min(n,k)} C(n, j) C(k-1, j-1): monomials grouped by support size.
ExactInt count_by_support(const VeroneseParams& params, int k);

/// Coefficients of the trivariate series
///   F(x,y,z) = xyz(1-z) / ((1-x-xyz-z+xz)(1-z-x)) = sum a_{n,d,k} x^n y^d z^k
/// for 0 <= n <= n_max, 0 <= d <= d_max, 0 <= k <= k_max.
class GenfuncTable {
 public:
  GenfuncTable(int n_max, int d_max, int k_max);

  int n_max() const { return n_max_; }
  int d_max() const { return d_max_; }
  int k_max() const { return k_max_; }

  // Throws RangeError outside the bounds.
  const ExactInt& at(int n, int d, int k) const;

 private:
  friend GenfuncTable genfunc_table(int, int, int);

  std::size_t index(int n, int d, int k) const;
  ExactInt& slot(int n, int d, int k) { return entries_[index(n, d, k)]; }

  int n_max_;
  int d_max_;
  int k_max_;
  std::vector<ExactInt> entries_;
};

inline constexpr std::int64_t kGenfuncLimit = 1'000'000;

// Solves F * denominator = numerator coefficientwise. Throws RangeError for a
// bound < 1 and TooLarge when n_max * d_max * k_max > kGenfuncLimit.
GenfuncTable genfunc_table(int n_max, int d_max, int k_max);

}  // namespace hilbert
