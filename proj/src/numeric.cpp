#include "asmlab/numeric.hpp"

#include <stdexcept>

namespace asmlab {

Rational parse_rational(const std::string &text) {
  Rational r;
  if (r.set_str(text, 10) != 0) {
    throw std::invalid_argument("not a rational number: '" + text + "'");
  }
  if (r.get_den() == 0) {
    throw std::invalid_argument("zero denominator: '" + text + "'");
  }
  r.canonicalize();
  return r;
}

Integer parse_integer(const std::string &text) {
  Integer z;
  if (text.empty() || z.set_str(text, 10) != 0) {
    throw std::invalid_argument("not an integer: '" + text + "'");
  }
  return z;
}

Integer require_integer(const Rational &v, const char *what) {
  if (v.get_den() != 1) {
    throw IntegralityError(std::string(what) + " is not integral: " + v.get_str());
  }
  return v.get_num();
}

Rational ratio(const Integer &num, const Integer &den) {
  if (den == 0) {
    throw std::domain_error("division by zero");
  }
  Rational out(num, den);
  out.canonicalize();
  return out;
}

Integer factorial(long n) {
  if (n < 0) {
    throw std::domain_error("factorial of negative number");
  }
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

Integer binomial(long top, long k) {
  if (k < 0) {
    return 0;
  }
  Integer r;
  // mpz_bin_ui accepts a negative top: C(-n, k) = (-1)^k C(n+k-1, k).
  mpz_bin_ui(r.get_mpz_t(), Integer(top).get_mpz_t(), static_cast<unsigned long>(k));
  return r;
}

} // namespace asmlab
