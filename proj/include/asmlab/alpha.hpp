#pragma once

// The monotone-triangle counting polynomial alpha(n; k_1, ..., k_n).
//
// The authoritative construction is the row recursion through the summation
// operator. The shift-operator product applied to the normalized Vandermonde
// product is available in three readings and is cross-checked against it.

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "asmlab/poly.hpp"

namespace asmlab {

// Term cap guarding the polynomial constructions. Defaults to 2'000'000 and
// is overridden by the ASMLAB_TERM_CAP environment variable.
std::size_t term_cap();
void set_term_cap(std::size_t cap);

// prod_{i<j} (k_j - k_i) / (j - i)
MultiPoly vandermonde(int n);

// Generic form of the summation operator on a working polynomial. `summed`
// lists the m-1 variables l_1..l_{m-1} being summed out, `bounds` the m
// variables k_1..k_m. Other variables are parameters. m = 0 gives 0, m = 1
// returns p unchanged. Every inner sum is a definite sum of the polynomial
// extension, so reversed ranges are allowed.
MultiPoly apply_summation(const MultiPoly &p, std::span<const int> summed, std::span<const int> bounds);

// Maps a polynomial in n-1 variables l_1..l_{n-1} to one in n variables
// k_1..k_n. Requires p.arity() >= 1.
MultiPoly summation_operator(const MultiPoly &p);

// alpha_1 = 1, alpha_n = summation_operator(alpha_{n-1}).
MultiPoly alpha_via_recursion(int n);

// Process-wide memo of alpha_via_recursion; safe to call from several threads.
std::shared_ptr<const MultiPoly> alpha(int n);

enum class OperatorVariant {
  Printed,     // id + E_p E_q - E_q
  PairMinusEp, // id + E_p E_q - E_p
  InverseForm, // id + E_q E_p^{-1} - E_p^{-1}
};

std::string to_string(OperatorVariant v);
std::optional<OperatorVariant> parse_operator_variant(const std::string &name);
std::vector<OperatorVariant> all_operator_variants();

// Applies the chosen factor for every pair p < q to vandermonde(n).
MultiPoly alpha_via_operator(int n, OperatorVariant variant);

// The variant that agrees with alpha_via_recursion for n <= 5.
constexpr OperatorVariant kProductionOperatorVariant = OperatorVariant::PairMinusEp;

} // namespace asmlab
