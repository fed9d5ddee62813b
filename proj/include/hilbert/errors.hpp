#pragma once

#include <stdexcept>
#include <string>

namespace hilbert {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Parameters outside the domain of the object, e.g. n < d for I_{n,d}.
class InvalidParams : public Error {
 public:
  using Error::Error;
};

class RangeError : public Error {
 public:
  using Error::Error;
};

/// A feasibility guard (enumeration size, table memory) was exceeded.
class TooLarge : public Error {
 public:
  using Error::Error;
};

/// Two routes that must agree did not. Always an implementation bug.
class InternalDisagreement : public Error {
 public:
  using Error::Error;
};

}  // namespace hilbert
