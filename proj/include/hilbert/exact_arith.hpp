#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace hilbert {

using ExactInt = boost::multiprecision::cpp_int;

// Generalized binomial coefficient C(m, r) = m(m-1)...(m-r+1) / r! for any
// integer m and r >= 0; zero for r < 0.
ExactInt binomial(std::int64_t m, std::int64_t r);

std::string to_decimal(const ExactInt& value);

}  // namespace hilbert
