#include "hilbert/depth.hpp"

#include <algorithm>
#include <string>

#include "hilbert/errors.hpp"

namespace hilbert {

ExactInt b_coefficient(const VeroneseParams& params, int k, int r) {
  if (k < 0 || r < 0) throw RangeError("b coefficient: negative k or r");
  const int n = params.n();
  const int d = params.d();
  ExactInt sum = 0;
  for (int i = d - 1; i <= n - 1; ++i) {
    sum += binomial(i, d - 1) * binomial(n - i + k - r - 2, k - d);
  }
  return sum;
}

namespace {

PositivityReport scan_window(const VeroneseParams& params, int r) {
  PositivityReport report;
  report.r = r;
  report.k_lo = params.d();
  report.k_hi = std::max(r, params.d());
  for (int k = report.k_lo; k <= report.k_hi; ++k) {
    ExactInt b = b_coefficient(params, k, r);
    if (b < 0) {
      report.is_positive = false;
      report.first_negative = NegativeCoefficient{k, std::move(b)};
      break;
    }
  }
  return report;
}

std::string where(int n, int d) {
  return "(n,d)=(" + std::to_string(n) + "," + std::to_string(d) + ")";
}

}  // namespace

PositivityReport positivity_report(const VeroneseParams& params, int r) {
  if (r < 0 || r > params.n()) {
    throw RangeError("positivity window needs 0 <= r <= n, got r=" +
                     std::to_string(r));
  }
  return scan_window(params, r);
}

DepthSearch search_hdepth(const VeroneseParams& params) {
  const int n = params.n();
  for (int r = 0; r <= n; ++r) {
    PositivityReport report = positivity_report(params, r);
    if (!report.is_positive) {
      return {r - 1, {r, report.first_negative->degree,
                      std::move(report.first_negative->value)}};
    }
  }
  // Depth n (only for d = n). The window is still exact at r = n+1: every
  // b-coefficient past it is C(k-2, k) = 0.
  PositivityReport past = scan_window(params, n + 1);
  if (past.is_positive) {
    throw InternalDisagreement("no failing r found for " +
                               where(n, params.d()));
  }
  return {n, {n + 1, past.first_negative->degree,
              std::move(past.first_negative->value)}};
}

int hdepth_by_formula(const VeroneseParams& params) {
  const int n = params.n();
  const int d = params.d();
  const ExactInt ratio = binomial(n, d + 1) / binomial(n, d);
  const int by_binomials = d + ratio.convert_to<int>();
  const int by_floor = d + (n - d) / (d + 1);
  const int by_ceil = d - 1 + (n - d + 1 + d) / (d + 1);
  if (by_binomials != by_floor || by_floor != by_ceil) {
    throw InternalDisagreement(
        "depth formulas disagree at " + where(n, d) + ": " +
        std::to_string(by_binomials) + ", " + std::to_string(by_floor) +
        ", " + std::to_string(by_ceil));
  }
  return by_floor;
}

DepthResult hdepth_search(const VeroneseParams& params) {
  DepthSearch search = search_hdepth(params);
  const int formula = hdepth_by_formula(params);
  if (search.hdepth != formula) {
    throw InternalDisagreement(
        "depth search gives " + std::to_string(search.hdepth) +
        ", formula gives " + std::to_string(formula) + " at " +
        where(params.n(), params.d()));
  }
  return {search.hdepth, search.hdepth, formula, std::move(search.witness)};
}

ExactInt lemma32_part2_rhs(int n, int d, int k, int r) {
  ExactInt sum = 0;
  for (int t = 1; t <= r - k + 1; ++t) {
    sum += binomial(n - (d - 1) - t + d - 1, d - 1) *
           binomial(r - (d - 1) - t, k - d);
  }
  if ((k - d) % 2 != 0) sum = -sum;
  return sum + binomial(n + k - r - 1, k);
}

bool check_lemma32_part1(int n, int d, int k, int r, int p) {
  if (d < 1 || n < d || k < d) {
    throw RangeError("lemma32 part 1 needs min(n,k) >= d >= 1");
  }
  if (p < 1 || p > d) throw RangeError("lemma32 part 1 needs 1 <= p <= d");
  if (r < 0 || n - r + p - 1 < p) {
    throw RangeError("lemma32 part 1 needs 0 <= r <= n-1");
  }
  const VeroneseParams shifted(n - r + p - 1, p);
  return b_coefficient(shifted, k, p - 1) == binomial(n + k - r - 1, k);
}

bool check_lemma32_part2(int n, int d, int k, int r) {
  if (d < 1 || n < d || k < d) {
    throw RangeError("lemma32 part 2 needs min(n,k) >= d >= 1");
  }
  if (r < d - 1) throw RangeError("lemma32 part 2 needs r >= d-1");
  return b_coefficient(VeroneseParams(n, d), k, r) ==
         lemma32_part2_rhs(n, d, k, r);
}

int prop33_r(int n, int d) {
  if (d < 1 || n < d) throw RangeError("prop33 needs n >= d >= 1");
  return d - 1 + (n - (d - 1) + d) / (d + 1);
}

ExactInt prop33_lhs(int n, int k, int r) { return binomial(n + k - r - 1, k); }

ExactInt prop33_rhs(int n, int d, int k, int r) {
  ExactInt sum = 0;
  for (int t = 1; t <= r - k + 1; ++t) {
    sum += binomial(n - (d - 1) - t + d - 1, d - 1) *
           binomial(r - (d - 1) - t, k - d);
  }
  return sum;
}

bool check_prop33(int n, int d) {
  const int r = prop33_r(n, d);
  for (int k = d + 1; k <= r; ++k) {
    if (prop33_lhs(n, k, r) < prop33_rhs(n, d, k, r)) return false;
  }
  return true;
}

}  // namespace hilbert
