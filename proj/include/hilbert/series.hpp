#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hilbert/exact_arith.hpp"

namespace hilbert {

/// One summand coeff * T^t_power * (1-T)^(-pole_order). A negative pole order
/// is a polynomial factor (1-T)^|pole_order|.
class ClosedTerm {
 public:
  ClosedTerm(ExactInt coeff, int t_power, int pole_order);

  const ExactInt& coeff() const { return coeff_; }
  int t_power() const { return t_power_; }
  int pole_order() const { return pole_order_; }

 private:
  ExactInt coeff_;
  int t_power_;
  int pole_order_;
};

/// Finite sum of closed terms. The term list is not a normal form: two
/// series are equal when their expansions are.
struct ClosedSeries {
  std::vector<ClosedTerm> terms;
};

/// Coefficients of T^start_degree, T^(start_degree+1), ...
struct CoefficientWindow {
  int start_degree = 0;
  std::vector<ExactInt> coefficients;

  int end_degree() const {
    return start_degree + static_cast<int>(coefficients.size()) - 1;
  }
  // Degree outside the window -> RangeError.
  const ExactInt& at_degree(int k) const;
  CoefficientWindow slice(int lo, int hi) const;
};

struct NegativeCoefficient {
  int degree;
  ExactInt value;
};

// coeff * C(e + j - 1, j) with j = k - t_power; valid for every signed e.
ExactInt term_coefficient(const ClosedTerm& term, int k);

ExactInt series_coefficient(const ClosedSeries& series, int k);

// Window of T^0 .. T^k_max.
CoefficientWindow expand(const ClosedSeries& series, int k_max);

// Multiplication by (1-T)^r.
ClosedSeries shift_pole_orders(const ClosedSeries& series, int r);

std::optional<NegativeCoefficient> first_negative(const CoefficientWindow& window);

// Human-readable closed form, e.g. "T^2(1-T)^-2 + 2 T^2(1-T)^-1".
std::string to_string(const ClosedSeries& series);

}  // namespace hilbert
