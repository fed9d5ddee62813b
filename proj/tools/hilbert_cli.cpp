// hilbert: command-line front end for the squarefree Veronese library.
// Talks to the library exclusively through the C interface in hilbert.h.

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "hilbert/hilbert.h"

namespace {

using json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitDisagreement = 3;

// Library failure carrying the exit code it maps to.
struct CommandError {
  int exit_code;
  std::string message;
};

void check(hilbert_status status) {
  if (status == HILBERT_OK) return;
  int code = kExitVerifyFailed;
  switch (status) {
    case HILBERT_ERR_INVALID_ARGUMENT:
    case HILBERT_ERR_RANGE:
    case HILBERT_ERR_TOO_LARGE:
      code = kExitUsage;
      break;
    case HILBERT_ERR_INTERNAL_DISAGREEMENT:
      code = kExitDisagreement;
      break;
    default:
      break;
  }
  throw CommandError{code, hilbert_last_error()};
}

std::string take(char* s) {
  std::string out(s == nullptr ? "" : s);
  hilbert_string_free(s);
  return out;
}

struct SeriesDeleter {
  void operator()(hilbert_series* s) const { hilbert_series_destroy(s); }
};
struct DepthDeleter {
  void operator()(hilbert_depth* d) const { hilbert_depth_destroy(d); }
};
struct ReportDeleter {
  void operator()(hilbert_verify_report* r) const {
    hilbert_verify_report_destroy(r);
  }
};
using SeriesPtr = std::unique_ptr<hilbert_series, SeriesDeleter>;
using DepthPtr = std::unique_ptr<hilbert_depth, DepthDeleter>;
using ReportPtr = std::unique_ptr<hilbert_verify_report, ReportDeleter>;

std::string join(const std::vector<std::string>& items) {
  std::string out = "[";
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i > 0) out += ", ";
    out += items[i];
  }
  return out + "]";
}

int worker_count() {
  if (const char* env = std::getenv("HILBERT_THREADS")) {
    try {
      const int n = std::stoi(env);
      if (n >= 1) return n;
    } catch (const std::exception&) {
    }
    throw CommandError{kExitUsage, "HILBERT_THREADS must be a positive integer"};
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

// ---------------------------------------------------------------------------

struct SeriesArgs {
  int n = 0;
  int d = 0;
  std::optional<int> terms;
  bool json = false;
};

int run_series(const SeriesArgs& args) {
  if (args.terms && (*args.terms < 0 || *args.terms > 10'001)) {
    throw CommandError{kExitUsage, "--terms must be in [0, 10001]"};
  }
  hilbert_series* raw = nullptr;
  check(hilbert_series_create(args.n, args.d, &raw));
  SeriesPtr series(raw);

  char* form = nullptr;
  check(hilbert_series_closed_form(series.get(), &form));
  const std::string closed_form = take(form);

  // --terms K expands T^0 .. T^(K-1); the listing starts at degree d.
  std::vector<std::string> coefficients;
  if (args.terms) {
    for (int k = args.d; k < *args.terms; ++k) {
      char* c = nullptr;
      check(hilbert_series_coefficient(series.get(), k, &c));
      coefficients.push_back(take(c));
    }
  }

  if (args.json) {
    json out;
    out["command"] = "series";
    out["n"] = args.n;
    out["d"] = args.d;
    out["closed_form"] = closed_form;
    json terms = json::array();
    for (std::size_t i = 0; i < hilbert_series_term_count(series.get()); ++i) {
      char* coeff = nullptr;
      int32_t t_power = 0;
      int32_t pole_order = 0;
      check(hilbert_series_term(series.get(), i, &coeff, &t_power, &pole_order));
      json term;
      term["coeff"] = take(coeff);
      term["t_power"] = t_power;
      term["pole_order"] = pole_order;
      terms.push_back(std::move(term));
    }
    out["terms"] = std::move(terms);
    if (args.terms) {
      out["start_degree"] = args.d;
      out["coefficients"] = coefficients;
    }
    std::cout << out.dump() << '\n';
    return kExitOk;
  }

  std::cout << "H(T) = " << closed_form << '\n';
  if (args.terms) {
    std::cout << "coefficients from degree " << args.d << ": "
              << join(coefficients) << '\n';
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------

struct CoeffArgs {
  int n = 0;
  int d = 0;
  int k = 0;
  std::string method = "formula";
};

int run_coeff(const CoeffArgs& args) {
  const std::vector<std::pair<std::string, hilbert_method>> routes{
      {"formula", HILBERT_METHOD_FORMULA},
      {"recurrence", HILBERT_METHOD_RECURRENCE},
      {"enumerate", HILBERT_METHOD_ENUMERATE},
      {"genfunc", HILBERT_METHOD_GENFUNC},
  };

  auto evaluate = [&](hilbert_method method) {
    char* out = nullptr;
    check(hilbert_coefficient(args.n, args.d, args.k, method, &out));
    return take(out);
  };

  if (args.method != "all") {
    for (const auto& [name, method] : routes) {
      if (name == args.method) {
        std::cout << evaluate(method) << '\n';
        return kExitOk;
      }
    }
    throw CommandError{kExitUsage, "unknown method " + args.method};
  }

  std::vector<std::string> values;
  for (const auto& [name, method] : routes) {
    values.push_back(evaluate(method));
    std::cout << name << ' ' << values.back() << '\n';
  }
  for (const auto& v : values) {
    if (v != values.front()) {
      std::cout << "routes DISAGREE\n";
      return kExitDisagreement;
    }
  }
  std::cout << "all " << values.size() << " routes agree: " << values.front()
            << '\n';
  return kExitOk;
}

// ---------------------------------------------------------------------------

struct DepthArgs {
  int n = 0;
  int d = 0;
  std::string method = "both";
  bool json = false;
};

int run_depth(const DepthArgs& args) {
  hilbert_depth_method method = HILBERT_DEPTH_BOTH;
  if (args.method == "search") method = HILBERT_DEPTH_SEARCH;
  if (args.method == "formula") method = HILBERT_DEPTH_FORMULA;

  hilbert_depth* raw = nullptr;
  check(hilbert_depth_compute(args.n, args.d, method, &raw));
  DepthPtr depth(raw);

  int32_t r = 0;
  int32_t k = 0;
  const char* coeff = nullptr;
  const bool has_witness = hilbert_depth_witness(depth.get(), &r, &k, &coeff) != 0;

  if (args.json) {
    json out;
    out["n"] = args.n;
    out["d"] = args.d;
    out["hdepth"] = hilbert_depth_value(depth.get());
    out["failing_r"] = has_witness ? json(r) : json(nullptr);
    out["failing_k"] = has_witness ? json(k) : json(nullptr);
    out["failing_coeff"] = has_witness ? json(coeff) : json(nullptr);
    std::cout << out.dump() << '\n';
    return kExitOk;
  }

  std::cout << hilbert_depth_value(depth.get()) << '\n';
  if (has_witness) {
    std::cout << "failing r=" << r << " k=" << k << " coeff=" << coeff << '\n';
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------

struct TableArgs {
  int n_max = 0;
  int d_max = 0;
  bool csv = false;
  bool json = false;
};

int run_table(const TableArgs& args) {
  if (args.n_max < 1 || args.d_max < 1) {
    throw CommandError{kExitUsage, "table bounds must be >= 1"};
  }
  struct Row {
    int n, d, formula, search;
    bool agree() const { return formula == search; }
  };
  std::vector<Row> rows;
  for (int n = 1; n <= args.n_max; ++n) {
    for (int d = 1; d <= std::min(n, args.d_max); ++d) {
      int32_t formula = 0;
      check(hilbert_depth_formula(n, d, &formula));
      hilbert_depth* raw = nullptr;
      check(hilbert_depth_compute(n, d, HILBERT_DEPTH_SEARCH, &raw));
      DepthPtr search(raw);
      rows.push_back({n, d, formula, hilbert_depth_value(search.get())});
    }
  }

  bool all_agree = true;
  if (args.json) {
    json out = json::array();
    for (const auto& row : rows) {
      json j;
      j["n"] = row.n;
      j["d"] = row.d;
      j["hdepth_formula"] = row.formula;
      j["hdepth_search"] = row.search;
      j["agree"] = row.agree();
      out.push_back(std::move(j));
      all_agree = all_agree && row.agree();
    }
    std::cout << out.dump() << '\n';
  } else if (args.csv) {
    std::cout << "n,d,hdepth_formula,hdepth_search,agree\n";
    for (const auto& row : rows) {
      std::cout << row.n << ',' << row.d << ',' << row.formula << ','
                << row.search << ',' << (row.agree() ? "true" : "false") << '\n';
      all_agree = all_agree && row.agree();
    }
  } else {
    std::cout << "   n    d  formula   search  agree\n";
    for (const auto& row : rows) {
      std::ostringstream line;
      line << std::setw(4) << row.n << ' ' << std::setw(4) << row.d << ' '
           << std::setw(8) << row.formula << ' ' << std::setw(8) << row.search
           << "  " << (row.agree() ? "true" : "false");
      std::cout << line.str() << '\n';
      all_agree = all_agree && row.agree();
    }
  }
  return all_agree ? kExitOk : kExitDisagreement;
}

// ---------------------------------------------------------------------------

struct VerifyArgs {
  std::string suite;
  std::optional<int> n_max;
  std::optional<int> k_max;
  std::optional<int> r_max;
};

int run_verify(const VerifyArgs& args) {
  hilbert_verify_options options;
  hilbert_verify_options_init(&options);
  if (args.n_max) options.n_max = *args.n_max;
  if (args.k_max) options.k_max = *args.k_max;
  if (args.r_max) options.r_max = *args.r_max;
  options.threads = worker_count();

  hilbert_verify_report* raw = nullptr;
  check(hilbert_verify_run(args.suite.c_str(), &options, &raw));
  ReportPtr report(raw);

  for (std::size_t i = 0; i < hilbert_verify_suite_count(report.get()); ++i) {
    const char* name = nullptr;
    uint64_t passed = 0;
    uint64_t failed = 0;
    uint64_t skipped = 0;
    check(hilbert_verify_suite_info(report.get(), i, &name, &passed, &failed,
                                    &skipped));
    std::cout << name << ": " << passed << " passed, " << failed << " failed";
    if (skipped > 0) std::cout << ", " << skipped << " skipped";
    std::cout << (failed == 0 ? "  PASS" : "  FAIL") << '\n';
    if (const char* c = hilbert_verify_counterexample(report.get(), i)) {
      std::cout << "  first counterexample " << c << '\n';
    }
  }
  const bool ok = hilbert_verify_all_passed(report.get()) != 0;
  std::cout << (ok ? "all suites passed" : "verification FAILED") << '\n';
  return ok ? kExitOk : kExitVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hilbert series and Hilbert depth of squarefree Veronese ideals"};
  app.require_subcommand(1);
  app.set_version_flag("--version", hilbert_version());

  SeriesArgs series;
  auto* series_cmd = app.add_subcommand("series", "closed-form Hilbert series");
  series_cmd->add_option("N", series.n, "number of variables")->required();
  series_cmd->add_option("D", series.d, "generator degree")->required();
  series_cmd->add_option("--terms", series.terms,
                         "expand the coefficients of T^0 .. T^(K-1)");
  series_cmd->add_flag("--json", series.json);

  CoeffArgs coeff;
  auto* coeff_cmd = app.add_subcommand("coeff", "Hilbert function value a_{n,d,k}");
  coeff_cmd->add_option("N", coeff.n)->required();
  coeff_cmd->add_option("D", coeff.d)->required();
  coeff_cmd->add_option("K", coeff.k)->required();
  coeff_cmd->add_option("--method", coeff.method)
      ->check(CLI::IsMember({"formula", "recurrence", "enumerate", "genfunc", "all"}));

  DepthArgs depth;
  auto* depth_cmd = app.add_subcommand("depth", "Hilbert depth of I_{n,d}");
  depth_cmd->add_option("N", depth.n)->required();
  depth_cmd->add_option("D", depth.d)->required();
  depth_cmd->add_option("--method", depth.method)
      ->check(CLI::IsMember({"search", "formula", "both"}));
  depth_cmd->add_flag("--json", depth.json);

  TableArgs table;
  auto* table_cmd = app.add_subcommand("table", "Hilbert depth over a grid of (n, d)");
  table_cmd->add_option("NMAX", table.n_max)->required();
  table_cmd->add_option("DMAX", table.d_max)->required();
  auto* csv_flag = table_cmd->add_flag("--csv", table.csv);
  table_cmd->add_flag("--json", table.json)->excludes(csv_flag);

  VerifyArgs verify;
  auto* verify_cmd = app.add_subcommand("verify", "run identity verification suites");
  verify_cmd->add_option("--suite", verify.suite)
      ->required()
      ->check(CLI::IsMember(
          {"recurrence", "genfunc", "series", "lemma32", "prop33", "tail", "all"}));
  verify_cmd->add_option("--n-max", verify.n_max)->check(CLI::PositiveNumber);
  verify_cmd->add_option("--k-max", verify.k_max)->check(CLI::PositiveNumber);
  verify_cmd->add_option("--r-max", verify.r_max)->check(CLI::NonNegativeNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*series_cmd) return run_series(series);
    if (*coeff_cmd) return run_coeff(coeff);
    if (*depth_cmd) return run_depth(depth);
    if (*table_cmd) return run_table(table);
    if (*verify_cmd) return run_verify(verify);
  } catch (const CommandError& e) {
    std::cerr << "hilbert: " << e.message << '\n';
    return e.exit_code;
  }
  return kExitUsage;
}
