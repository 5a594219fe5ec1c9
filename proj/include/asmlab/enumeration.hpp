#pragma once

// Exact brute-force counting and generation. Everything here works directly
// on interlacing rows and never touches the polynomial machinery, so it can
// serve as the ground truth for the formulas elsewhere in the library.

#include <functional>
#include <vector>

#include "asmlab/numeric.hpp"
#include "asmlab/objects.hpp"

namespace asmlab {

struct BottomRowSpec {
  Row entries;
  // Allows equal adjacent entries in the bottom row only (extended triangles).
  bool weak_bottom = false;

  Verdict validate() const;
};

// Number of (extended, if flagged) monotone triangles with the given bottom row.
Integer count_triangles(const BottomRowSpec &spec);

// Visits every triangle once, in lexicographic order of the concatenated rows.
void for_each_triangle(const BottomRowSpec &spec, const std::function<void(const MonotoneTriangle &)> &visit);
std::vector<MonotoneTriangle> enumerate_triangles(const BottomRowSpec &spec);

// Visits every monotone trapezoid with the given (strictly increasing) bottom
// row and a top row of length top_length.
void for_each_trapezoid(const Row &bottom, int top_length,
                        const std::function<void(const MonotoneTrapezoid &)> &visit);

// Sorted {1..n} minus `removed`.
Row complement_row(int n, const Row &removed);

// Number of monotone (d, n-c)-trapezoids with top row `top` (length d) and
// bottom row {1..n} \ removed (length n-c). With d == 0 this is the number of
// monotone triangles on that bottom row; an empty bottom row counts once.
Integer count_trapezoids(int n, const Row &removed, const Row &top);

// Exhaustive refined statistics of the n x n alternating sign matrices.
struct RefinedCounts {
  int n = 0;
  Integer total;
  // top_column[k-1]: matrices whose top-row 1 is in column k.
  std::vector<Integer> top_column;
  // bottom_top[i-1][j-1]: bottom-row 1 in column i and top-row 1 in column j.
  std::vector<std::vector<Integer>> bottom_top;
};

RefinedCounts refined_counts(int n);

// Partial monotone triangles with anchored, truncated boundary diagonals.
//
// For 1 <= l <= c the first s[c-l]-1 entries of NE-diagonal l are removed and
// the next one is fixed to k[l-1]. For n-d+1 <= l <= n the last i[l-n+d-1]-1
// entries of SE-diagonal l are removed and the next one is fixed to k[l-1].
// An NE anchor is exempt from being below its right neighbour and its
// SE-neighbour; an SE anchor is exempt from being above its left neighbour
// and its SW-neighbour. Bottom-row entries c+1..n-d equal k[c..n-d-1] and are
// only required to weakly increase.
struct GammaSpec {
  int n = 0;
  std::vector<int> k;
  Row s;
  Row i;

  // Structural checks: sizes, ranges, weak increase, anchors on their diagonals.
  Verdict validate() const;
  // True when some cell would be both removed/anchored from the NE side and
  // removed/anchored from the SE side.
  bool regions_collide() const;
};

// Throws std::invalid_argument for a spec that fails validate(). Colliding
// regions yield 0: in the trapezoid picture they would have to hold entries
// that are simultaneously <= c and > n-d.
Integer gamma_count(const GammaSpec &spec);

} // namespace asmlab
