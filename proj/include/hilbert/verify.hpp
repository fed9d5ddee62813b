#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hilbert/depth.hpp"
#include "hilbert/exact_arith.hpp"
#include "hilbert/series.hpp"
#include "hilbert/veronese.hpp"

namespace hilbert {

/// The closed formulas a suite checks. Suites run against
/// reference_formulas(); tests swap single entries to confirm that a corrupted
/// formula is caught.
struct FormulaSet {
  std::function<ClosedSeries(const VeroneseParams&)> closed_series;
  std::function<ExactInt(const VeroneseParams&, int)> coefficient;
  std::function<ExactInt(const VeroneseParams&, int)> recurrence;
  std::function<ExactInt(const VeroneseParams&, int)> enumeration;
  std::function<ExactInt(const VeroneseParams&, int)> support_count;
  std::function<ExactInt(const VeroneseParams&, int, int)> b_coefficient;
  // C(n+k-r-1, k): shared by lemma32 part 1, the tail suite and prop33.
  std::function<ExactInt(int n, int k, int r)> shifted_binomial;
  std::function<ExactInt(int n, int d, int k, int r)> lemma32_rhs;
  std::function<ExactInt(int n, int d, int k, int r)> prop33_rhs;
};

const FormulaSet& reference_formulas();

struct SuiteOptions {
  std::optional<int> n_max;
  std::optional<int> k_max;
  std::optional<int> r_max;
  int threads = 1;
};

struct Counterexample {
  std::string check;
  int n = 0;
  int d = 0;
  std::optional<int> k;
  std::optional<int> r;
  ExactInt lhs;
  ExactInt rhs;
};

struct SuiteReport {
  std::string suite;
  std::uint64_t passed = 0;
  std::uint64_t failed = 0;
  std::uint64_t skipped = 0;  // infeasible enumerations
  std::optional<Counterexample> first_failure;

  bool ok() const { return failed == 0; }
};

// "recurrence", "genfunc", "series", "lemma32", "prop33", "tail".
const std::vector<std::string>& suite_names();

// Runs one suite, or every suite in order for "all". Throws InvalidParams for
// an unknown name or a nonpositive bound.
std::vector<SuiteReport> run_suite(std::string_view name,
                                   const SuiteOptions& options,
                                   const FormulaSet& formulas = reference_formulas());

// "(n, d, k, r, lhs, rhs)" with "-" for absent indices.
std::string format_counterexample(const Counterexample& c);

}  // namespace hilbert
