#pragma once

// Monotone triangles, monotone trapezoids, alternating sign matrices and
// partial alternating sign matrices, with the standard bijections between
// them and the three symmetry maps on complete triangles.
//
// Index conventions: triangle rows are stored bottom-up, row 1 being the
// longest. Entry a(r, j) with 1 <= r <= j <= n is rows[r-1][j-r]. Matrix rows
// are stored top-down.

#include <string>
#include <vector>

namespace asmlab {

using Row = std::vector<int>;
using IntMatrix = std::vector<std::vector<int>>;

// Result of validating an object. Carries the first violated invariant.
class Verdict {
public:
  static Verdict pass() { return Verdict{}; }
  static Verdict fail(std::string reason) {
    Verdict v;
    v.ok_ = false;
    v.reason_ = std::move(reason);
    return v;
  }

  bool ok() const { return ok_; }
  explicit operator bool() const { return ok_; }
  const std::string &reason() const { return reason_; }

private:
  bool ok_ = true;
  std::string reason_;
};

// A diagonal of a triangle read in the direction in which it weakly increases.
struct DiagonalProfile {
  int index = 0;
  std::vector<int> values;
};

class MonotoneTriangle {
public:
  MonotoneTriangle() = default;
  // Throws std::invalid_argument unless row r (1-based) has length n-r+1.
  explicit MonotoneTriangle(std::vector<Row> rows_bottom_up);

  int size() const { return static_cast<int>(rows_.size()); }
  const std::vector<Row> &rows() const { return rows_; }
  const Row &row(int r) const { return rows_.at(r - 1); }
  int at(int r, int j) const { return rows_[r - 1][j - r]; }
  int top() const { return rows_.back().front(); }

  bool is_complete() const;

  // (a(j,j), a(j-1,j), ..., a(1,j)), top to bottom.
  DiagonalProfile se_diagonal(int j) const;
  // (a(1,l), a(2,l+1), ..., a(n-l+1,n)), bottom to top.
  DiagonalProfile ne_diagonal(int l) const;

  friend bool operator==(const MonotoneTriangle &, const MonotoneTriangle &) = default;

private:
  std::vector<Row> rows_;
};

// A monotone triangle with m rows whose top d-1 rows are removed.
class MonotoneTrapezoid {
public:
  MonotoneTrapezoid() = default;
  // Rows bottom-up with lengths m, m-1, ..., d. Throws on a malformed shape.
  explicit MonotoneTrapezoid(std::vector<Row> rows_bottom_up);

  int top_length() const { return static_cast<int>(rows_.back().size()); }
  int bottom_length() const { return static_cast<int>(rows_.front().size()); }
  const std::vector<Row> &rows() const { return rows_; }
  const Row &bottom() const { return rows_.front(); }
  const Row &top_row() const { return rows_.back(); }

  friend bool operator==(const MonotoneTrapezoid &, const MonotoneTrapezoid &) = default;

private:
  std::vector<Row> rows_;
};

class Asm {
public:
  Asm() = default;
  // Throws std::invalid_argument unless the matrix is square.
  explicit Asm(IntMatrix rows);
  static Asm identity(int n);

  int size() const { return static_cast<int>(rows_.size()); }
  const IntMatrix &rows() const { return rows_; }
  int at(int i, int j) const { return rows_[i - 1][j - 1]; }

  friend bool operator==(const Asm &, const Asm &) = default;

private:
  IntMatrix rows_;
};

class PartialAsm {
public:
  PartialAsm() = default;
  // t x n; a 0 x n matrix needs the explicit width.
  PartialAsm(IntMatrix rows, int width);

  int row_count() const { return static_cast<int>(rows_.size()); }
  int width() const { return width_; }
  const IntMatrix &rows() const { return rows_; }

  friend bool operator==(const PartialAsm &, const PartialAsm &) = default;

private:
  IntMatrix rows_;
  int width_ = 0;
};

Verdict validate(const MonotoneTriangle &t);
Verdict validate(const MonotoneTrapezoid &t);
Verdict validate(const Asm &m);
Verdict validate(const PartialAsm &m);

// Interlacing check shared by triangles and trapezoids. With weak_bottom the
// first row only needs to be weakly increasing.
Verdict validate_rows(const std::vector<Row> &rows_bottom_up, bool weak_bottom = false);

MonotoneTriangle complete_identity_triangle(int n);

Asm triangle_to_asm(const MonotoneTriangle &t);
MonotoneTriangle asm_to_triangle(const Asm &m);

PartialAsm trapezoid_to_partial_asm(const MonotoneTrapezoid &t, int n);
MonotoneTrapezoid partial_asm_to_trapezoid(const PartialAsm &p, const Row &bottom);

// Symmetry maps on complete triangles. Each throws std::invalid_argument for
// an incomplete or invalid triangle.
MonotoneTriangle reflect_antidiagonal(const MonotoneTriangle &a);
MonotoneTriangle rotate_90(const MonotoneTriangle &a);
MonotoneTriangle reflect_horizontal(const MonotoneTriangle &a);

// The matching symmetries of square matrices.
Asm matrix_reflect_antidiagonal(const Asm &m);
Asm matrix_rotate_clockwise(const Asm &m);
Asm matrix_reflect_horizontal(const Asm &m);

// For a complete triangle and 1 <= i <= n: the counts #(x >= i) over
// SE-diagonals j = i..n together with #(x <= i-1) over NE-diagonals
// j = 1..i-1, sorted. Equals (1, ..., n) for every complete triangle.
std::vector<int> diagonal_count_multiset(const MonotoneTriangle &a, int i);

} // namespace asmlab
