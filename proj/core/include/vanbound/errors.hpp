#pragma once

#include <stdexcept>
#include <string>

namespace vanbound {

// Raised by the adaptive driver when the doubling budget runs out. Carries the
// best estimate so a caller can still inspect (or accept) the partial result.
class ToleranceNotReached : public std::runtime_error {
public:
  ToleranceNotReached(const std::string& what, double value, double est_error)
      : std::runtime_error(what), value(value), est_error(est_error) {}

  double value;
  double est_error;
};

// The tail samples of an integrand are inconsistent with its claimed algebraic
// decay exponent, so no trustworthy truncation bound exists.
class DecayCheckFailed : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// A test function's support exceeds what a theorem hypothesis allows.
class SupportTooWide : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

// A test function's support does not equal the value an operation requires.
class SupportMismatch : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

// The brute-force cubature was asked for more dimensions than it supports.
class DimensionTooLarge : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace vanbound
