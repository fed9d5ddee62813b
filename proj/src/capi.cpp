#include "hilbert/hilbert.h"

#include <cstdlib>
#include <cstring>
#include <algorithm>
#include <memory>
#include <new>
#include <optional>
#include <string>
#include <vector>

#include "hilbert/depth.hpp"
#include "hilbert/errors.hpp"
#include "hilbert/series.hpp"
#include "hilbert/verify.hpp"
#include "hilbert/veronese.hpp"

struct hilbert_series {
  hilbert::ClosedSeries value;
};

struct hilbert_depth {
  int32_t hdepth = 0;
  int32_t by_search = -1;
  int32_t by_formula = -1;
  bool has_witness = false;
  int32_t witness_r = 0;
  int32_t witness_k = 0;
  std::string witness_coeff;
};

struct hilbert_verify_report {
  std::vector<hilbert::SuiteReport> suites;
  std::vector<std::optional<std::string>> counterexamples;
};

namespace {

thread_local std::string last_error;

hilbert_status fail(hilbert_status status, std::string message) {
  last_error = std::move(message);
  return status;
}

template <typename Fn>
hilbert_status guarded(Fn&& fn) {
  try {
    fn();
    return HILBERT_OK;
  } catch (const hilbert::InvalidParams& e) {
    return fail(HILBERT_ERR_INVALID_ARGUMENT, e.what());
  } catch (const hilbert::RangeError& e) {
    return fail(HILBERT_ERR_RANGE, e.what());
  } catch (const hilbert::TooLarge& e) {
    return fail(HILBERT_ERR_TOO_LARGE, e.what());
  } catch (const hilbert::InternalDisagreement& e) {
    return fail(HILBERT_ERR_INTERNAL_DISAGREEMENT, e.what());
  } catch (const std::bad_alloc&) {
    return fail(HILBERT_ERR_OUT_OF_MEMORY, "out of memory");
  } catch (const std::exception& e) {
    return fail(HILBERT_ERR_UNKNOWN, e.what());
  } catch (...) {
    return fail(HILBERT_ERR_UNKNOWN, "unknown error");
  }
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void require(const void* p, const char* what) {
  if (p == nullptr) throw hilbert::InvalidParams(std::string(what) + " is NULL");
}

}  // namespace

extern "C" {

const char* hilbert_version(void) { return "1.0.0"; }

const char* hilbert_last_error(void) { return last_error.c_str(); }

void hilbert_string_free(char* s) { std::free(s); }

hilbert_status hilbert_binomial(int64_t m, int64_t r, char** out) {
  return guarded([&] {
    require(out, "out");
    *out = dup_string(hilbert::to_decimal(hilbert::binomial(m, r)));
  });
}

hilbert_status hilbert_series_create(int32_t n, int32_t d,
                                     hilbert_series** out) {
  return guarded([&] {
    require(out, "out");
    *out = new hilbert_series{
        hilbert::hilbert_series_closed(hilbert::VeroneseParams(n, d))};
  });
}

void hilbert_series_destroy(hilbert_series* series) { delete series; }

hilbert_status hilbert_series_shift(const hilbert_series* series, int32_t r,
                                    hilbert_series** out) {
  return guarded([&] {
    require(series, "series");
    require(out, "out");
    *out = new hilbert_series{hilbert::shift_pole_orders(series->value, r)};
  });
}

size_t hilbert_series_term_count(const hilbert_series* series) {
  return series == nullptr ? 0 : series->value.terms.size();
}

hilbert_status hilbert_series_term(const hilbert_series* series, size_t index,
                                   char** coeff, int32_t* t_power,
                                   int32_t* pole_order) {
  return guarded([&] {
    require(series, "series");
    if (index >= series->value.terms.size()) {
      throw hilbert::RangeError("term index out of range");
    }
    const auto& term = series->value.terms[index];
    if (coeff != nullptr) *coeff = dup_string(hilbert::to_decimal(term.coeff()));
    if (t_power != nullptr) *t_power = term.t_power();
    if (pole_order != nullptr) *pole_order = term.pole_order();
  });
}

hilbert_status hilbert_series_closed_form(const hilbert_series* series,
                                          char** out) {
  return guarded([&] {
    require(series, "series");
    require(out, "out");
    *out = dup_string(hilbert::to_string(series->value));
  });
}

hilbert_status hilbert_series_coefficient(const hilbert_series* series,
                                          int32_t k, char** out) {
  return guarded([&] {
    require(series, "series");
    require(out, "out");
    if (k < 0) throw hilbert::RangeError("negative degree");
    *out = dup_string(
        hilbert::to_decimal(hilbert::series_coefficient(series->value, k)));
  });
}

hilbert_status hilbert_series_first_negative(const hilbert_series* series,
                                             int32_t k_max, int* found,
                                             int32_t* degree, char** value) {
  return guarded([&] {
    require(series, "series");
    require(found, "found");
    const auto neg = hilbert::first_negative(hilbert::expand(series->value, k_max));
    *found = neg ? 1 : 0;
    if (!neg) return;
    if (degree != nullptr) *degree = neg->degree;
    if (value != nullptr) *value = dup_string(hilbert::to_decimal(neg->value));
  });
}

hilbert_status hilbert_coefficient(int32_t n, int32_t d, int32_t k,
                                   hilbert_method method, char** out) {
  return guarded([&] {
    require(out, "out");
    const hilbert::VeroneseParams params(n, d);
    if (k < 0) throw hilbert::RangeError("negative degree");
    hilbert::ExactInt value;
    switch (static_cast<int>(method)) {
      case HILBERT_METHOD_FORMULA:
        value = hilbert::hilbert_coefficient(params, k);
        break;
      case HILBERT_METHOD_RECURRENCE:
        value = hilbert::hilbert_coefficient_recurrence(params, k);
        break;
      case HILBERT_METHOD_ENUMERATE:
        value = hilbert::count_by_enumeration(params, k);
        break;
      case HILBERT_METHOD_GENFUNC:
        value = hilbert::genfunc_table(n, d, std::max(k, 1)).at(n, d, k);
        break;
      case HILBERT_METHOD_SUPPORT:
        value = hilbert::count_by_support(params, k);
        break;
      default:
        throw hilbert::InvalidParams("unknown method");
    }
    *out = dup_string(hilbert::to_decimal(value));
  });
}

hilbert_status hilbert_b_coefficient(int32_t n, int32_t d, int32_t k,
                                     int32_t r, char** out) {
  return guarded([&] {
    require(out, "out");
    *out = dup_string(hilbert::to_decimal(
        hilbert::b_coefficient(hilbert::VeroneseParams(n, d), k, r)));
  });
}

hilbert_status hilbert_positivity(int32_t n, int32_t d, int32_t r,
                                  int* is_positive, int32_t* negative_degree,
                                  char** negative_value) {
  return guarded([&] {
    require(is_positive, "is_positive");
    const auto report =
        hilbert::positivity_report(hilbert::VeroneseParams(n, d), r);
    *is_positive = report.is_positive ? 1 : 0;
    if (!report.first_negative) return;
    if (negative_degree != nullptr) *negative_degree = report.first_negative->degree;
    if (negative_value != nullptr) {
      *negative_value = dup_string(hilbert::to_decimal(report.first_negative->value));
    }
  });
}

hilbert_status hilbert_depth_formula(int32_t n, int32_t d, int32_t* out) {
  return guarded([&] {
    require(out, "out");
    *out = hilbert::hdepth_by_formula(hilbert::VeroneseParams(n, d));
  });
}

hilbert_status hilbert_depth_compute(int32_t n, int32_t d,
                                     hilbert_depth_method method,
                                     hilbert_depth** out) {
  return guarded([&] {
    require(out, "out");
    const hilbert::VeroneseParams params(n, d);
    auto result = std::make_unique<hilbert_depth>();
    auto take_witness = [&](const hilbert::FailingWitness& w) {
      result->has_witness = true;
      result->witness_r = w.r;
      result->witness_k = w.k;
      result->witness_coeff = hilbert::to_decimal(w.value);
    };
    switch (static_cast<int>(method)) {
      case HILBERT_DEPTH_SEARCH: {
        const auto search = hilbert::search_hdepth(params);
        result->hdepth = result->by_search = search.hdepth;
        take_witness(search.witness);
        break;
      }
      case HILBERT_DEPTH_FORMULA:
        result->hdepth = result->by_formula = hilbert::hdepth_by_formula(params);
        break;
      case HILBERT_DEPTH_BOTH: {
        const auto full = hilbert::hdepth_search(params);
        result->hdepth = full.hdepth;
        result->by_search = full.by_search;
        result->by_formula = full.by_formula;
        take_witness(full.failing_r_witness);
        break;
      }
      default:
        throw hilbert::InvalidParams("unknown depth method");
    }
    *out = result.release();
  });
}

void hilbert_depth_destroy(hilbert_depth* depth) { delete depth; }

int32_t hilbert_depth_value(const hilbert_depth* depth) {
  return depth == nullptr ? -1 : depth->hdepth;
}

int32_t hilbert_depth_by_search(const hilbert_depth* depth) {
  return depth == nullptr ? -1 : depth->by_search;
}

int32_t hilbert_depth_by_formula(const hilbert_depth* depth) {
  return depth == nullptr ? -1 : depth->by_formula;
}

int hilbert_depth_witness(const hilbert_depth* depth, int32_t* r, int32_t* k,
                          const char** coeff) {
  if (depth == nullptr || !depth->has_witness) return 0;
  if (r != nullptr) *r = depth->witness_r;
  if (k != nullptr) *k = depth->witness_k;
  if (coeff != nullptr) *coeff = depth->witness_coeff.c_str();
  return 1;
}

void hilbert_verify_options_init(hilbert_verify_options* options) {
  if (options == nullptr) return;
  options->n_max = 0;
  options->k_max = 0;
  options->r_max = -1;
  options->threads = 1;
}

hilbert_status hilbert_verify_run(const char* suite,
                                  const hilbert_verify_options* options,
                                  hilbert_verify_report** out) {
  return guarded([&] {
    require(suite, "suite");
    require(out, "out");
    hilbert::SuiteOptions opts;
    if (options != nullptr) {
      if (options->n_max > 0) opts.n_max = options->n_max;
      if (options->k_max > 0) opts.k_max = options->k_max;
      if (options->r_max >= 0) opts.r_max = options->r_max;
      opts.threads = std::max<int32_t>(1, options->threads);
    }
    auto report = std::make_unique<hilbert_verify_report>();
    report->suites = hilbert::run_suite(suite, opts);
    for (const auto& s : report->suites) {
      if (s.first_failure) {
        report->counterexamples.emplace_back(
            s.first_failure->check + " " +
            hilbert::format_counterexample(*s.first_failure));
      } else {
        report->counterexamples.emplace_back();
      }
    }
    *out = report.release();
  });
}

void hilbert_verify_report_destroy(hilbert_verify_report* report) {
  delete report;
}

size_t hilbert_verify_suite_count(const hilbert_verify_report* report) {
  return report == nullptr ? 0 : report->suites.size();
}

hilbert_status hilbert_verify_suite_info(const hilbert_verify_report* report,
                                         size_t index, const char** name,
                                         uint64_t* passed, uint64_t* failed,
                                         uint64_t* skipped) {
  return guarded([&] {
    require(report, "report");
    if (index >= report->suites.size()) {
      throw hilbert::RangeError("suite index out of range");
    }
    const auto& s = report->suites[index];
    if (name != nullptr) *name = s.suite.c_str();
    if (passed != nullptr) *passed = s.passed;
    if (failed != nullptr) *failed = s.failed;
    if (skipped != nullptr) *skipped = s.skipped;
  });
}

const char* hilbert_verify_counterexample(const hilbert_verify_report* report,
                                          size_t index) {
  if (report == nullptr || index >= report->counterexamples.size()) return nullptr;
  const auto& c = report->counterexamples[index];
  return c ? c->c_str() : nullptr;
}

int hilbert_verify_all_passed(const hilbert_verify_report* report) {
  if (report == nullptr) return 0;
  for (const auto& s : report->suites) {
    if (!s.ok()) return 0;
  }
  return 1;
}

}  // extern "C"
