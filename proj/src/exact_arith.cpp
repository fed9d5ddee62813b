#include "hilbert/exact_arith.hpp"

#include <limits>

namespace hilbert {

namespace {

using Wide = __int128;

constexpr Wide kWideLimit = std::numeric_limits<Wide>::max() / 2;

Wide wide_abs(Wide v) { return v < 0 ? -v : v; }

}  // namespace

ExactInt binomial(std::int64_t m, std::int64_t r) {
  if (r < 0) return 0;
  if (r == 0) return 1;
  if (m >= 0) {
    if (r > m) return 0;
    if (r > m - r) r = m - r;
  }

  // After step i the running value is C(m, i): the prefix product of i
  // consecutive integers is divisible by i!, so every division is exact.
  Wide acc = 1;
  std::int64_t i = 1;
  for (; i <= r; ++i) {
    const Wide factor = static_cast<Wide>(m) - i + 1;
    if (factor != 0 && wide_abs(acc) > kWideLimit / wide_abs(factor)) break;
    acc = acc * factor / i;
  }
  if (i > r) return ExactInt(acc);

  ExactInt big(acc);
  for (; i <= r; ++i) {
    big *= ExactInt(m - i + 1);
    big /= i;
  }
  return big;
}

std::string to_decimal(const ExactInt& value) { return value.str(); }

}  // namespace hilbert
