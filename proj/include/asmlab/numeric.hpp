#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace asmlab {

using Integer = mpz_class;
using Rational = mpq_class;

// Thrown when a quantity that must be integral (a count, an exact division)
// turns out not to be. Always an implementation fault, never bad input.
class IntegralityError : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

// Thrown when a polynomial construction would exceed the configured term cap.
class ResourceLimitError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

inline std::string to_decimal(const Integer &v) { return v.get_str(10); }

// "p/q", or "p" when q == 1.
inline std::string to_fraction_string(const Rational &v) { return v.get_str(10); }

Rational parse_rational(const std::string &text);
Integer parse_integer(const std::string &text);

Integer require_integer(const Rational &v, const char *what);

// num / den in lowest terms; throws std::domain_error for den = 0.
Rational ratio(const Integer &num, const Integer &den);

Integer factorial(long n);

// Binomial coefficient for an arbitrary integer top and integer bottom,
// C(top, k) = top (top-1) ... (top-k+1) / k!  and 0 for k < 0.
Integer binomial(long top, long k);

inline long sign_power(long exponent) { return (exponent % 2 == 0) ? 1 : -1; }

} // namespace asmlab
