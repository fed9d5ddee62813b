#pragma once

#include <optional>

#include "hilbert/exact_arith.hpp"
#include "hilbert/series.hpp"
#include "hilbert/veronese.hpp"

namespace hilbert {

// b_{n,d,k,r}: coefficient of T^k in (1-T)^r H_{I_{n,d}}(T),
//   sum_{i=d-1}^{n-1} C(i, d-1) C(n-i+k-r-2, k-d).
ExactInt b_coefficient(const VeroneseParams& params, int k, int r);

/// Verdict of "(1-T)^r H is positive" on the finite window [k_lo, k_hi] =
/// [d, max(r, d)]. Beyond k_hi every b-coefficient is a nonnegative binomial,
/// so the window verdict is the verdict for the whole series.
struct PositivityReport {
  int r = 0;
  bool is_positive = true;
  std::optional<NegativeCoefficient> first_negative;
  int k_lo = 0;
  int k_hi = 0;
};

// Throws RangeError unless 0 <= r <= n.
PositivityReport positivity_report(const VeroneseParams& params, int r);

struct FailingWitness {
  int r = 0;
  int k = 0;
  ExactInt value;
};

/// Outcome of the first-failure search alone, without the formula.
struct DepthSearch {
  int hdepth = 0;
  FailingWitness witness;
};

struct DepthResult {
  int hdepth = 0;
  int by_search = 0;
  int by_formula = 0;
  FailingWitness failing_r_witness;
};

// Largest r with (1-T)^r H positive, found by increasing r from 0 until the
// first failure. The witness is the first negative coefficient at hdepth+1.
DepthSearch search_hdepth(const VeroneseParams& params);

// search_hdepth combined with hdepth_by_formula; throws InternalDisagreement
// when they differ.
DepthResult hdepth_search(const VeroneseParams& params);

// d + floor(C(n,d+1)/C(n,d)), d + floor((n-d)/(d+1)) and
// d - 1 + ceil((n-d+1)/(d+1)), evaluated separately. Throws
// InternalDisagreement if they differ.
int hdepth_by_formula(const VeroneseParams& params);

// (-1)^(k-d) sum_{t=1}^{r-k+1} C(n-(d-1)-t+d-1, d-1) C(r-(d-1)-t, k-d)
//   + C(n+k-r-1, k); the t-sum is empty when r-k+1 < 1.
ExactInt lemma32_part2_rhs(int n, int d, int k, int r);

// b_{n-r+p-1, p, k, p-1} == C(n+k-r-1, k). Requires min(n,k) >= d >= 1,
// 1 <= p <= d and 0 <= r <= n-1 (so that n-r+p-1 >= p); RangeError otherwise.
bool check_lemma32_part1(int n, int d, int k, int r, int p);

// b_{n,d,k,r} == lemma32_part2_rhs(n,d,k,r). Requires min(n,k) >= d >= 1 and
// r >= d-1; the identity is false for smaller r.
bool check_lemma32_part2(int n, int d, int k, int r);

// r = d - 1 + ceil((n-d+1)/(d+1)).
int prop33_r(int n, int d);
ExactInt prop33_lhs(int n, int k, int r);
ExactInt prop33_rhs(int n, int d, int k, int r);

// prop33_lhs >= prop33_rhs for every k in [d+1, prop33_r(n,d)].
bool check_prop33(int n, int d);

}  // namespace hilbert
