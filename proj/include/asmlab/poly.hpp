#pragma once

// Sparse multivariate polynomials with exact rational coefficients, and the
// shift / difference calculus on them. Variables are numbered from 0, so
// variable v stands for k_{v+1}.

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "asmlab/numeric.hpp"

namespace asmlab {

using Exponents = std::vector<int>;

class MultiPoly {
public:
  using TermMap = std::map<Exponents, Rational>;

  explicit MultiPoly(int arity = 0) : arity_(arity) {}

  static MultiPoly constant(int arity, const Rational &c);
  static MultiPoly variable(int arity, int var);

  int arity() const { return arity_; }
  // Lexicographic order of exponent vectors; never holds a zero coefficient.
  const TermMap &terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  Rational coefficient(const Exponents &e) const;
  void add_term(const Exponents &e, const Rational &c);

  int degree_in(int var) const;
  int max_degree() const;

  MultiPoly &operator+=(const MultiPoly &o);
  MultiPoly &operator-=(const MultiPoly &o);
  MultiPoly &operator*=(const Rational &c);

  friend MultiPoly operator+(MultiPoly a, const MultiPoly &b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly &b) { return a -= b; }
  friend MultiPoly operator*(MultiPoly a, const Rational &c) { return a *= c; }
  friend MultiPoly operator*(const Rational &c, MultiPoly a) { return a *= c; }
  friend MultiPoly operator*(const MultiPoly &a, const MultiPoly &b);
  MultiPoly operator-() const;

  friend bool operator==(const MultiPoly &a, const MultiPoly &b) {
    return a.arity_ == b.arity_ && a.terms_ == b.terms_;
  }

private:
  void require_same_arity(const MultiPoly &o, const char *op) const;

  int arity_;
  TermMap terms_;
};

// k_var -> k_var + h.
MultiPoly shift(const MultiPoly &p, int var, long h);

// E - id and id - E^{-1}.
MultiPoly forward_difference(const MultiPoly &p, int var);
MultiPoly backward_difference(const MultiPoly &p, int var);
MultiPoly forward_difference(const MultiPoly &p, int var, int times);
MultiPoly backward_difference(const MultiPoly &p, int var, int times);

// F with F(x+1) - F(x) = p(x) in variable `var` and F = 0 at x = 0.
MultiPoly antidifference(const MultiPoly &p, int var);

// sum_{x = lower}^{upper} p where lower and upper are other variables
// (the polynomial extension: an empty range upper = lower - 1 gives 0).
MultiPoly definite_sum(const MultiPoly &p, int var, int lower_var, int upper_var);

// Replaces k_from by k_into + h (from != into); k_from then no longer occurs.
MultiPoly substitute_variable(const MultiPoly &p, int from, int into, long h = 0);

// Variable v becomes sign[v] * k_{target[v]} in a polynomial of new_arity
// variables. Targets may repeat.
MultiPoly relabel(const MultiPoly &p, std::span<const int> target, std::span<const int> sign, int new_arity);

// k_v -> sign[v] * k_{target[v]} + offset[v], for a permutation `target` and
// signs in {+1, -1}, all substitutions simultaneous.
MultiPoly signed_permute_shift(const MultiPoly &p, std::span<const int> target, std::span<const int> sign,
                               std::span<const long> offset);

Rational evaluate(const MultiPoly &p, std::span<const Rational> point);
Rational evaluate(const MultiPoly &p, std::span<const long> point);

// Assigns the engaged entries and removes those variables; the remaining ones
// keep their relative order.
MultiPoly specialize(const MultiPoly &p, std::span<const std::optional<long>> assignment);

// C(k_var + offset, m) as a polynomial of the given arity.
MultiPoly binomial_poly(int arity, int var, long offset, int m);

} // namespace asmlab
