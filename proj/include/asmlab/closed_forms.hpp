#pragma once

// Closed-form evaluators for refined ASM enumeration:
//   A_n       total number of n x n ASMs,
//   A_{n,k}   ASMs whose top-row 1 is in column k,
//   B_{n,i,j} ASMs with the bottom-row 1 in column i and the top-row 1 in column j,
//   A_{n,i,j} ASMs whose bottom row of the monotone triangle is {1..n} \ {i, j}
//             (for i < j), extended to all i, j by the coefficient expansion.

#include "asmlab/coefficients.hpp"
#include "asmlab/numeric.hpp"

namespace asmlab {

Integer asm_total(int n);

// Zero outside 1 <= k <= n.
Integer a_nk(int n, int k);

// Requires n >= 2 and 1 <= i, j <= n. Throws IntegralityError if the division
// by A_{n-1} is not exact.
Integer stroganov_b(int n, int i, int j);

// sum_{k=j}^{n} (-1)^{n+k} C(2n-2-j, k-j) B_{n,i,k}
Integer a_nij(int n, int i, int j);

// The same numbers from the expanded double sum over (l, k) of products of
// top-row refined counts.
Integer a_nij_direct(int n, int i, int j);

// A(n; s_1, s_2; -) against the single-step rewrite through A(n; s_1; i_1),
// all pairs s_1 < s_2.
VerificationReport check_relation(int n);

// A_{n,i,j} = A_{n,n+1-j,n+1-i} away from (n-1, 1) and (n, 2), and
// A_{n,n-1,1} - A_{n-1} = A_{n,n,2}.
VerificationReport check_near_symmetry(int n);

// a_nij against a_nij_direct on the full grid.
VerificationReport check_anij_forms(int n);

} // namespace asmlab
