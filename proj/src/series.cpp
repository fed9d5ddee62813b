#include "hilbert/series.hpp"

#include <sstream>
#include <utility>

#include "hilbert/errors.hpp"

namespace hilbert {

ClosedTerm::ClosedTerm(ExactInt coeff, int t_power, int pole_order)
    : coeff_(std::move(coeff)), t_power_(t_power), pole_order_(pole_order) {
  if (t_power_ < 0) throw RangeError("closed term: negative power of T");
}

const ExactInt& CoefficientWindow::at_degree(int k) const {
  if (k < start_degree || k > end_degree()) {
    throw RangeError("degree " + std::to_string(k) + " outside window [" +
                     std::to_string(start_degree) + ", " +
                     std::to_string(end_degree()) + "]");
  }
  return coefficients[static_cast<std::size_t>(k - start_degree)];
}

CoefficientWindow CoefficientWindow::slice(int lo, int hi) const {
  if (lo > hi) throw RangeError("empty window slice");
  at_degree(lo);
  at_degree(hi);
  CoefficientWindow out;
  out.start_degree = lo;
  auto first = coefficients.begin() + (lo - start_degree);
  out.coefficients.assign(first, first + (hi - lo + 1));
  return out;
}

ExactInt term_coefficient(const ClosedTerm& term, int k) {
  const std::int64_t j = static_cast<std::int64_t>(k) - term.t_power();
  if (j < 0) return 0;
  return term.coeff() * binomial(term.pole_order() + j - 1, j);
}

ExactInt series_coefficient(const ClosedSeries& series, int k) {
  ExactInt sum = 0;
  for (const auto& term : series.terms) sum += term_coefficient(term, k);
  return sum;
}

CoefficientWindow expand(const ClosedSeries& series, int k_max) {
  if (k_max < 0) throw RangeError("expand: k_max must be nonnegative");
  CoefficientWindow window;
  window.coefficients.reserve(static_cast<std::size_t>(k_max) + 1);
  for (int k = 0; k <= k_max; ++k) {
    window.coefficients.push_back(series_coefficient(series, k));
  }
  return window;
}

ClosedSeries shift_pole_orders(const ClosedSeries& series, int r) {
  ClosedSeries out;
  out.terms.reserve(series.terms.size());
  for (const auto& term : series.terms) {
    out.terms.emplace_back(term.coeff(), term.t_power(), term.pole_order() - r);
  }
  return out;
}

std::optional<NegativeCoefficient> first_negative(
    const CoefficientWindow& window) {
  for (std::size_t j = 0; j < window.coefficients.size(); ++j) {
    if (window.coefficients[j] < 0) {
      return NegativeCoefficient{window.start_degree + static_cast<int>(j),
                                 window.coefficients[j]};
    }
  }
  return std::nullopt;
}

std::string to_string(const ClosedSeries& series) {
  if (series.terms.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& term : series.terms) {
    ExactInt c = term.coeff();
    if (first) {
      if (c < 0) out << "-";
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    if (c < 0) c = -c;
    first = false;

    const bool has_t = term.t_power() != 0;
    const bool has_pole = term.pole_order() != 0;
    if (c != 1 || (!has_t && !has_pole)) {
      out << c.str();
      if (has_t || has_pole) out << ' ';
    }
    if (term.t_power() == 1) {
      out << 'T';
    } else if (has_t) {
      out << "T^" << term.t_power();
    }
    if (has_pole) out << "(1-T)^" << -term.pole_order();
  }
  return out.str();
}

}  // namespace hilbert
