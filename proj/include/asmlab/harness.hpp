#pragma once

// Cross-checks between independent computations, one report per (check, n).
// Shared by the command-line verifier and the acceptance tests.

#include "asmlab/alpha.hpp"
#include "asmlab/coefficients.hpp"

namespace asmlab {

// asm_total(n) against the brute-force count over the bottom row (1..n).
VerificationReport check_totals(int n);

// a_nk and stroganov_b against exhaustive refined counts.
VerificationReport check_refined(int n);

// B_{n,1,j} = A_{n-1,j-1}, j = 1..n.
VerificationReport check_first_row_b(int n);

// a_nij against count_triangles on the complement row (i < j) and against the
// coefficient table with c = 2, d = 0 (all i, j).
VerificationReport check_headline(int n);

// alpha_via_operator(n, v) against alpha(n), term by term.
VerificationReport check_operator_variant(int n, OperatorVariant v);

// gamma_count at the special point against count_trapezoids for all strictly
// increasing (s, i).
VerificationReport check_gamma_bridge(int n);

// Group relations of the three symmetry maps, their matrix counterparts and
// the diagonal count fact, over every complete triangle of order n.
VerificationReport check_symmetry_maps(int n);

// count_triangles against alpha(n) evaluated at the same row.
VerificationReport check_alpha_counts(const std::vector<Row> &rows, bool weak);

} // namespace asmlab
