#include "hilbert/verify.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <sstream>
#include <thread>
#include <utility>

#include "hilbert/errors.hpp"

namespace hilbert {

const FormulaSet& reference_formulas() {
  static const FormulaSet formulas{
      hilbert_series_closed,
      hilbert_coefficient,
      hilbert_coefficient_recurrence,
      count_by_enumeration,
      count_by_support,
      b_coefficient,
      [](int n, int k, int r) { return binomial(n + k - r - 1, k); },
      lemma32_part2_rhs,
      prop33_rhs,
  };
  return formulas;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{
      "recurrence", "genfunc", "series", "lemma32", "prop33", "tail"};
  return names;
}

std::string format_counterexample(const Counterexample& c) {
  auto opt = [](const std::optional<int>& v) {
    return v ? std::to_string(*v) : std::string("-");
  };
  std::ostringstream out;
  out << '(' << c.n << ", " << c.d << ", " << opt(c.k) << ", " << opt(c.r)
      << ", " << to_decimal(c.lhs) << ", " << to_decimal(c.rhs) << ')';
  return out.str();
}

namespace {

struct Tally {
  std::uint64_t passed = 0;
  std::uint64_t failed = 0;
  std::uint64_t skipped = 0;
  std::optional<Counterexample> first_failure;

  void expect_equal(const char* check, int n, int d, std::optional<int> k,
                    std::optional<int> r, const ExactInt& lhs,
                    const ExactInt& rhs) {
    expect(lhs == rhs, check, n, d, k, r, lhs, rhs);
  }

  void expect(bool ok, const char* check, int n, int d, std::optional<int> k,
              std::optional<int> r, const ExactInt& lhs, const ExactInt& rhs) {
    if (ok) {
      ++passed;
      return;
    }
    ++failed;
    if (!first_failure) first_failure = Counterexample{check, n, d, k, r, lhs, rhs};
  }

  void merge(Tally&& other) {
    passed += other.passed;
    failed += other.failed;
    skipped += other.skipped;
    if (!first_failure && other.first_failure) {
      first_failure = std::move(other.first_failure);
    }
  }
};

// Evaluates row(n) for n in [lo, hi] on up to `threads` workers and returns
// the results in n order, so reports do not depend on scheduling.
template <typename Row, typename Fn>
std::vector<Row> run_rows(int lo, int hi, int threads, Fn fn) {
  const int count = std::max(0, hi - lo + 1);
  std::vector<Row> rows(static_cast<std::size_t>(count));
  std::atomic<int> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;

  auto worker = [&] {
    for (int i = next++; i < count; i = next++) {
      try {
        rows[static_cast<std::size_t>(i)] = fn(lo + i);
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
      }
    }
  };

  const int workers = std::clamp(threads, 1, std::max(1, count));
  if (workers == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    for (int w = 0; w < workers; ++w) pool.emplace_back(worker);
  }
  if (error) std::rethrow_exception(error);
  return rows;
}

Tally run_tallies(int lo, int hi, int threads,
                  const std::function<Tally(int)>& fn) {
  Tally total;
  for (auto& row : run_rows<Tally>(lo, hi, threads, fn)) total.merge(std::move(row));
  return total;
}

void require_positive(const std::optional<int>& bound, const char* flag) {
  if (bound && *bound < 1) {
    throw InvalidParams(std::string(flag) + " must be >= 1");
  }
}

// Enumeration counts for every (n, d, k) in the grid; absent when infeasible.
class EnumerationTable {
 public:
  EnumerationTable(int n_max, int k_max, int threads, const FormulaSet& f)
      : n_max_(n_max), k_max_(k_max) {
    using Row = std::vector<std::optional<ExactInt>>;
    rows_ = run_rows<Row>(1, n_max, threads, [&](int n) {
      Row row(static_cast<std::size_t>(n + 1) * (k_max + 1));
      for (int d = 1; d <= n; ++d) {
        for (int k = 0; k <= k_max; ++k) {
          try {
            row[static_cast<std::size_t>(d) * (k_max + 1) + k] =
                f.enumeration(VeroneseParams(n, d), k);
          } catch (const TooLarge&) {
          }
        }
      }
      return row;
    });
  }

  // Boundary convention: zero for n < d or k < 0.
  std::optional<ExactInt> get(int n, int d, int k) const {
    if (n < d || k < 0) return ExactInt(0);
    return rows_[static_cast<std::size_t>(n - 1)]
                [static_cast<std::size_t>(d) * (k_max_ + 1) + k];
  }

 private:
  int n_max_;
  int k_max_;
  std::vector<std::vector<std::optional<ExactInt>>> rows_;
};

SuiteReport recurrence_suite(const SuiteOptions& opts, const FormulaSet& f) {
  const int n_max = opts.n_max.value_or(7);
  const int k_max = opts.k_max.value_or(9);
  const EnumerationTable enumerated(n_max, k_max, opts.threads, f);

  Tally tally = run_tallies(1, n_max, opts.threads, [&](int n) {
    Tally t;
    for (int d = 1; d <= n; ++d) {
      const VeroneseParams p(n, d);
      for (int k = d; k <= k_max; ++k) {
        const ExactInt formula = f.coefficient(p, k);
        try {
          t.expect_equal("formula == recurrence", n, d, k, {}, formula,
                         f.recurrence(p, k));
        } catch (const InternalDisagreement&) {
          t.expect(false, "recurrence forms agree", n, d, k, {}, formula, formula);
        }
        t.expect_equal("formula == support count", n, d, k, {}, formula,
                       f.support_count(p, k));

        const auto count = enumerated.get(n, d, k);
        if (!count) {
          ++t.skipped;
          continue;
        }
        t.expect_equal("formula == enumeration", n, d, k, {}, formula, *count);

        if (n < 2 || d < 2) continue;
        // Split by the exponent s of x_1: s = 0, or 1 <= s <= k-d+1.
        std::optional<ExactInt> classes = enumerated.get(n - 1, d, k);
        for (int s = 1; classes && s <= k - d + 1; ++s) {
          const auto part = enumerated.get(n - 1, d - 1, k - s);
          if (part) {
            *classes += *part;
          } else {
            classes.reset();
          }
        }
        if (!classes) {
          ++t.skipped;
          continue;
        }
        t.expect_equal("class decomposition by x_1 exponent", n, d, k, {},
                       *count, *classes);
      }
    }
    return t;
  });
  return {"recurrence", tally.passed, tally.failed, tally.skipped,
          std::move(tally.first_failure)};
}

SuiteReport genfunc_suite(const SuiteOptions& opts, const FormulaSet& f) {
  const int n_max = opts.n_max.value_or(7);
  const int k_max = opts.k_max.value_or(9);
  const GenfuncTable table = genfunc_table(n_max, n_max, k_max);

  Tally tally = run_tallies(0, n_max, opts.threads, [&](int n) {
    Tally t;
    for (int d = 0; d <= n_max; ++d) {
      for (int k = 0; k <= k_max; ++k) {
        const ExactInt expected =
            (d >= 1 && d <= n) ? f.coefficient(VeroneseParams(n, d), k)
                               : ExactInt(0);
        t.expect_equal("genfunc == formula", n, d, k, {}, table.at(n, d, k),
                       expected);
      }
    }
    return t;
  });
  return {"genfunc", tally.passed, tally.failed, tally.skipped,
          std::move(tally.first_failure)};
}

SuiteReport series_suite(const SuiteOptions& opts, const FormulaSet& f) {
  const int n_max = opts.n_max.value_or(10);
  const int k_max = opts.k_max.value_or(15);

  Tally tally = run_tallies(1, n_max, opts.threads, [&](int n) {
    Tally t;
    for (int d = 1; d <= n; ++d) {
      const VeroneseParams p(n, d);
      const ClosedSeries closed = f.closed_series(p);
      const CoefficientWindow window = expand(closed, k_max);
      for (int k = 0; k <= k_max; ++k) {
        const ExactInt& c = window.at_degree(k);
        t.expect_equal("closed series == coefficient formula", n, d, k, {}, c,
                       f.coefficient(p, k));
        if (k < d) t.expect_equal("vanishes below degree d", n, d, k, {}, c, 0);
      }

      const int r_hi = opts.r_max.value_or(n);
      for (int r = 0; r <= r_hi; ++r) {
        const CoefficientWindow shifted =
            expand(shift_pole_orders(closed, r), k_max);
        for (int k = 0; k <= k_max; ++k) {
          t.expect_equal("b formula == shifted series", n, d, k, r,
                         f.b_coefficient(p, k, r), shifted.at_degree(k));
        }
      }
    }
    return t;
  });
  return {"series", tally.passed, tally.failed, tally.skipped,
          std::move(tally.first_failure)};
}

SuiteReport lemma32_suite(const SuiteOptions& opts, const FormulaSet& f) {
  const int n_max = opts.n_max.value_or(12);
  const int k_max = opts.k_max.value_or(12);

  Tally tally = run_tallies(1, n_max, opts.threads, [&](int n) {
    Tally t;
    const int r_hi = opts.r_max.value_or(n + 2);
    for (int d = 1; d <= n; ++d) {
      const VeroneseParams p(n, d);
      for (int k = d; k <= k_max; ++k) {
        for (int r = 0; r <= r_hi; ++r) {
          if (r >= d - 1) {
            t.expect_equal("lemma32 part 2", n, d, k, r, f.b_coefficient(p, k, r),
                           f.lemma32_rhs(n, d, k, r));
          }
          if (r > n - 1) continue;
          const ExactInt rhs = f.shifted_binomial(n, k, r);
          for (int q = 1; q <= d; ++q) {
            t.expect_equal("lemma32 part 1", n, d, k, r,
                           f.b_coefficient(VeroneseParams(n - r + q - 1, q), k,
                                           q - 1),
                           rhs);
          }
        }
      }
    }
    return t;
  });
  return {"lemma32", tally.passed, tally.failed, tally.skipped,
          std::move(tally.first_failure)};
}

SuiteReport prop33_suite(const SuiteOptions& opts, const FormulaSet& f) {
  const int n_max = opts.n_max.value_or(30);

  Tally tally = run_tallies(1, n_max, opts.threads, [&](int n) {
    Tally t;
    for (int d = 1; d <= n; ++d) {
      const int r = prop33_r(n, d);
      for (int k = d + 1; k <= r; ++k) {
        const ExactInt lhs = f.shifted_binomial(n, k, r);
        const ExactInt rhs = f.prop33_rhs(n, d, k, r);
        t.expect(lhs >= rhs, "prop33 inequality", n, d, k, r, lhs, rhs);
      }
    }
    return t;
  });
  return {"prop33", tally.passed, tally.failed, tally.skipped,
          std::move(tally.first_failure)};
}

SuiteReport tail_suite(const SuiteOptions& opts, const FormulaSet& f) {
  const int n_max = opts.n_max.value_or(12);
  const int length = opts.k_max.value_or(10);

  Tally tally = run_tallies(1, n_max, opts.threads, [&](int n) {
    Tally t;
    const int r_hi = std::min(n, opts.r_max.value_or(n));
    for (int d = 1; d <= n; ++d) {
      const VeroneseParams p(n, d);
      for (int r = 0; r <= r_hi; ++r) {
        for (int k = std::max(r + 1, d); k <= r + length; ++k) {
          const ExactInt b = f.b_coefficient(p, k, r);
          t.expect(b >= 0, "tail coefficient nonnegative", n, d, k, r, b, 0);
          // For r < d-1 every pole order stays positive; the binomial
          // closed form needs r >= d-1.
          if (r >= d - 1) {
            t.expect_equal("tail coefficient == C(n+k-r-1, k)", n, d, k, r, b,
                           f.shifted_binomial(n, k, r));
          }
        }
      }
    }
    return t;
  });
  return {"tail", tally.passed, tally.failed, tally.skipped,
          std::move(tally.first_failure)};
}

}  // namespace

std::vector<SuiteReport> run_suite(std::string_view name,
                                   const SuiteOptions& options,
                                   const FormulaSet& formulas) {
  require_positive(options.n_max, "--n-max");
  require_positive(options.k_max, "--k-max");
  if (options.r_max && *options.r_max < 0) {
    throw InvalidParams("--r-max must be >= 0");
  }

  using Runner = SuiteReport (*)(const SuiteOptions&, const FormulaSet&);
  const std::vector<std::pair<std::string_view, Runner>> runners{
      {"recurrence", recurrence_suite}, {"genfunc", genfunc_suite},
      {"series", series_suite},         {"lemma32", lemma32_suite},
      {"prop33", prop33_suite},         {"tail", tail_suite},
  };

  std::vector<SuiteReport> reports;
  for (const auto& [suite, runner] : runners) {
    if (name == "all" || name == suite) reports.push_back(runner(options, formulas));
  }
  if (reports.empty()) {
    throw InvalidParams("unknown suite '" + std::string(name) + "'");
  }
  return reports;
}

}  // namespace hilbert
