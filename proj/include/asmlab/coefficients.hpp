#pragma once

// Coefficients A(n; s_1..s_c; i_1..i_d) of alpha_n, specialized at the middle
// variables k_{c+1..n-d} = (c+1, ..., n-d), in the binomial basis
//
//   prod_l C(k_l - c - 1, s_{c+1-l} - 1) * prod_l C(k_l - n + d - 2 + i, i - 1)
//
// with the sign (-1)^{s_1 + ... + s_c + c}, together with the identity checks
// that relate them.

#include <cstddef>
#include <string>
#include <vector>

#include "asmlab/enumeration.hpp"
#include "asmlab/numeric.hpp"
#include "asmlab/poly.hpp"

namespace asmlab {

struct IndexTuplePair {
  int n = 0;
  Row s;
  Row i;
};

struct Counterexample {
  std::string input;
  std::string expected;
  std::string actual;
};

struct VerificationReport {
  std::string identity;
  std::string range;
  std::size_t cases = 0;
  std::vector<Counterexample> counterexamples;

  bool passed() const { return counterexamples.empty(); }
  std::string status() const { return passed() ? "pass" : "fail"; }

  void fail(std::string input, std::string expected, std::string actual) {
    counterexamples.push_back({std::move(input), std::move(expected), std::move(actual)});
  }
};

// "(s_1,..;i_1,..)"
std::string format_pair(const Row &s, const Row &i);

// alpha_n with k_{c+1..n-d} fixed to (c+1, ..., n-d). The remaining variables
// are k_1..k_c followed by k_{n-d+1}..k_n.
MultiPoly specialize_middle(const MultiPoly &alpha, int n, int c, int d);

// Finite-difference extraction of a single coefficient from alpha_n.
Integer extract_coefficient(const IndexTuplePair &pair, const MultiPoly &alpha);

// All coefficients for fixed (n, c, d), indexed by tuples in [1,n]^c x [1,n]^d.
class CoefficientTable {
public:
  CoefficientTable(int n, int c, int d);

  int n() const { return n_; }
  int c() const { return c_; }
  int d() const { return d_; }
  std::size_t size() const { return values_.size(); }

  const Integer &at(const Row &s, const Row &i) const;
  Integer &at(const Row &s, const Row &i);

  // Position <-> tuples, lexicographic in (s_1..s_c, i_1..i_d).
  const Integer &value(std::size_t index) const { return values_[index]; }
  Integer &value(std::size_t index) { return values_[index]; }
  void tuples(std::size_t index, Row &s, Row &i) const;

private:
  std::size_t index_of(const Row &s, const Row &i) const;

  int n_;
  int c_;
  int d_;
  std::vector<Integer> values_;
};

// Fills the table from alpha(n), sharing the differencing work between cells.
// `jobs` > 1 splits the work over threads; the result does not depend on it.
CoefficientTable coefficient_table(int n, int c, int d, int jobs = 1);

// Rebuilds the specialized alpha_n from a complete table and compares term by
// term.
VerificationReport reconstruct_expansion(const CoefficientTable &table);

// Extraction against brute-force trapezoid counts over strictly increasing
// tuples.
VerificationReport verify_theorem7(int n, int c, int d);

// alpha(n; k) = (-1)^{n-1} alpha(n; k_2, ..., k_n, k_1 - n).
VerificationReport check_cyclic(int n);

// alpha(n; k) = alpha(n; -k_n, ..., -k_1) and alpha(n; k) = alpha(n; k + z).
VerificationReport check_reflection_translation(int n, long z);

// Rewrites A(n; s; i) through the coefficients with t entries moved from s to
// i; strictly increasing (s, i).
VerificationReport check_circuit(int n, int c, int d, int t);

// The linear system satisfied by A(n; -; i_1..i_d), all tuples in [1,n]^d.
VerificationReport check_system(int n, int d);

// A(n; s; i) = A(n; i; s) for strictly increasing tuples.
VerificationReport check_remark_symmetry(int n, int c, int d);

// Differences of alpha_n evaluated at spec.k, the polynomial side of gamma.
Rational gamma_formula_value(const GammaSpec &spec);
VerificationReport check_gamma_formula(const GammaSpec &spec);

// Strictly increasing tuples of length len in [1, n], lexicographic.
std::vector<Row> increasing_tuples(int n, int len);
// All tuples of length len in [1, n], lexicographic.
std::vector<Row> all_tuples(int n, int len);

} // namespace asmlab
