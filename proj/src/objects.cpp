#include "asmlab/objects.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace asmlab {

namespace {

std::string pos(int r, int t) {
  std::ostringstream os;
  os << "row " << r << " position " << t;
  return os.str();
}

void require_complete(const MonotoneTriangle &a, const char *op) {
  if (auto v = validate(a); !v) {
    throw std::invalid_argument(std::string(op) + ": invalid triangle: " + v.reason());
  }
  if (!a.is_complete()) {
    throw std::invalid_argument(std::string(op) + ": triangle is not complete");
  }
}

std::vector<int> indicator(const Row &row, int n) {
  std::vector<int> ind(static_cast<std::size_t>(n), 0);
  for (int x : row) {
    if (x < 1 || x > n) {
      throw std::invalid_argument("entry " + std::to_string(x) + " outside [1, " +
                                  std::to_string(n) + "]");
    }
    ind[static_cast<std::size_t>(x - 1)] = 1;
  }
  return ind;
}

Row support(const std::vector<int> &ind) {
  Row out;
  for (std::size_t j = 0; j < ind.size(); ++j) {
    if (ind[j] != 0) {
      out.push_back(static_cast<int>(j) + 1);
    }
  }
  return out;
}

} // namespace

MonotoneTriangle::MonotoneTriangle(std::vector<Row> rows_bottom_up) : rows_(std::move(rows_bottom_up)) {
  const auto n = rows_.size();
  for (std::size_t r = 0; r < n; ++r) {
    if (rows_[r].size() != n - r) {
      throw std::invalid_argument("monotone triangle: row " + std::to_string(r + 1) + " has length " +
                                  std::to_string(rows_[r].size()) + ", expected " +
                                  std::to_string(n - r));
    }
  }
}

bool MonotoneTriangle::is_complete() const {
  if (rows_.empty()) {
    return true;
  }
  const Row &bottom = rows_.front();
  for (std::size_t t = 0; t < bottom.size(); ++t) {
    if (bottom[t] != static_cast<int>(t) + 1) {
      return false;
    }
  }
  return true;
}

DiagonalProfile MonotoneTriangle::se_diagonal(int j) const {
  DiagonalProfile d{j, {}};
  for (int r = j; r >= 1; --r) {
    d.values.push_back(at(r, j));
  }
  return d;
}

DiagonalProfile MonotoneTriangle::ne_diagonal(int l) const {
  DiagonalProfile d{l, {}};
  const int n = size();
  for (int r = 1; r <= n - l + 1; ++r) {
    d.values.push_back(at(r, l + r - 1));
  }
  return d;
}

MonotoneTrapezoid::MonotoneTrapezoid(std::vector<Row> rows_bottom_up) : rows_(std::move(rows_bottom_up)) {
  if (rows_.empty()) {
    throw std::invalid_argument("monotone trapezoid: no rows");
  }
  for (std::size_t r = 1; r < rows_.size(); ++r) {
    if (rows_[r].size() + 1 != rows_[r - 1].size()) {
      throw std::invalid_argument("monotone trapezoid: row " + std::to_string(r + 1) +
                                  " must be one shorter than the row below");
    }
  }
  if (rows_.back().empty()) {
    throw std::invalid_argument("monotone trapezoid: top row must be nonempty");
  }
}

Asm::Asm(IntMatrix rows) : rows_(std::move(rows)) {
  for (const auto &r : rows_) {
    if (r.size() != rows_.size()) {
      throw std::invalid_argument("alternating sign matrix must be square");
    }
  }
}

Asm Asm::identity(int n) {
  IntMatrix m(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), 0));
  for (int i = 0; i < n; ++i) {
    m[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 1;
  }
  return Asm(std::move(m));
}

PartialAsm::PartialAsm(IntMatrix rows, int width) : rows_(std::move(rows)), width_(width) {
  if (width_ < 0) {
    throw std::invalid_argument("partial alternating sign matrix: negative width");
  }
  for (const auto &r : rows_) {
    if (static_cast<int>(r.size()) != width_) {
      throw std::invalid_argument("partial alternating sign matrix: ragged rows");
    }
  }
}

Verdict validate_rows(const std::vector<Row> &rows, bool weak_bottom) {
  for (std::size_t r = 0; r < rows.size(); ++r) {
    const Row &row = rows[r];
    const bool weak = weak_bottom && r == 0;
    for (std::size_t t = 0; t + 1 < row.size(); ++t) {
      if (weak ? row[t] > row[t + 1] : row[t] >= row[t + 1]) {
        return Verdict::fail(std::string(weak ? "weak" : "strict") + " increase violated at " +
                             pos(static_cast<int>(r) + 1, static_cast<int>(t) + 1));
      }
    }
    if (r == 0) {
      continue;
    }
    const Row &below = rows[r - 1];
    for (std::size_t t = 0; t < row.size(); ++t) {
      if (below[t] > row[t] || row[t] > below[t + 1]) {
        return Verdict::fail("interlacing violated at " + pos(static_cast<int>(r) + 1, static_cast<int>(t) + 1) +
                             ": " + std::to_string(row[t]) + " not in [" + std::to_string(below[t]) + ", " +
                             std::to_string(below[t + 1]) + "]");
      }
    }
  }
  return Verdict::pass();
}

Verdict validate(const MonotoneTriangle &t) { return validate_rows(t.rows()); }
Verdict validate(const MonotoneTrapezoid &t) { return validate_rows(t.rows()); }

Verdict validate(const Asm &m) {
  const int n = m.size();
  std::vector<int> col(static_cast<std::size_t>(n), 0);
  for (int i = 1; i <= n; ++i) {
    int acc = 0;
    for (int j = 1; j <= n; ++j) {
      const int v = m.at(i, j);
      if (v < -1 || v > 1) {
        return Verdict::fail("entry (" + std::to_string(i) + "," + std::to_string(j) + ") not in {-1,0,1}");
      }
      acc += v;
      col[static_cast<std::size_t>(j - 1)] += v;
      if (acc < 0 || acc > 1) {
        return Verdict::fail("row " + std::to_string(i) + " prefix sum leaves {0,1} at column " + std::to_string(j));
      }
      if (col[static_cast<std::size_t>(j - 1)] < 0 || col[static_cast<std::size_t>(j - 1)] > 1) {
        return Verdict::fail("column " + std::to_string(j) + " prefix sum leaves {0,1} at row " + std::to_string(i));
      }
    }
    if (acc != 1) {
      return Verdict::fail("row " + std::to_string(i) + " sum is not 1");
    }
  }
  for (int j = 1; j <= n; ++j) {
    if (col[static_cast<std::size_t>(j - 1)] != 1) {
      return Verdict::fail("column " + std::to_string(j) + " sum is not 1");
    }
  }
  return Verdict::pass();
}

Verdict validate(const PartialAsm &m) {
  const int n = m.width();
  for (int i = 0; i < m.row_count(); ++i) {
    int acc = 0;
    for (int j = 0; j < n; ++j) {
      const int v = m.rows()[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
      if (v < -1 || v > 1) {
        return Verdict::fail("entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ") not in {-1,0,1}");
      }
      acc += v;
      if (acc < 0 || acc > 1) {
        return Verdict::fail("row " + std::to_string(i + 1) + " prefix sum leaves {0,1} at column " +
                             std::to_string(j + 1));
      }
    }
    if (acc != 1) {
      return Verdict::fail("row " + std::to_string(i + 1) + " sum is not 1");
    }
  }
  for (int j = 0; j < n; ++j) {
    int last = 0;
    for (int i = 0; i < m.row_count(); ++i) {
      const int v = m.rows()[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
      if (v == 0) {
        continue;
      }
      if (v == last) {
        return Verdict::fail("column " + std::to_string(j + 1) + " nonzero entries do not alternate at row " +
                             std::to_string(i + 1));
      }
      last = v;
    }
  }
  return Verdict::pass();
}

MonotoneTriangle complete_identity_triangle(int n) {
  std::vector<Row> rows;
  for (int r = 1; r <= n; ++r) {
    Row row(static_cast<std::size_t>(n - r + 1));
    std::iota(row.begin(), row.end(), 1);
    rows.push_back(std::move(row));
  }
  return MonotoneTriangle(std::move(rows));
}

Asm triangle_to_asm(const MonotoneTriangle &t) {
  require_complete(t, "triangle_to_asm");
  const int n = t.size();
  IntMatrix m;
  for (int i = 1; i <= n; ++i) {
    auto upper = indicator(t.row(n + 1 - i), n);
    if (i > 1) {
      const auto lower = indicator(t.row(n + 2 - i), n);
      for (int j = 0; j < n; ++j) {
        upper[static_cast<std::size_t>(j)] -= lower[static_cast<std::size_t>(j)];
      }
    }
    m.push_back(std::move(upper));
  }
  return Asm(std::move(m));
}

MonotoneTriangle asm_to_triangle(const Asm &m) {
  if (auto v = validate(m); !v) {
    throw std::invalid_argument("asm_to_triangle: invalid matrix: " + v.reason());
  }
  const int n = m.size();
  std::vector<Row> top_down;
  std::vector<int> partial(static_cast<std::size_t>(n), 0);
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      partial[static_cast<std::size_t>(j - 1)] += m.at(i, j);
    }
    top_down.push_back(support(partial));
  }
  std::reverse(top_down.begin(), top_down.end());
  return MonotoneTriangle(std::move(top_down));
}

PartialAsm trapezoid_to_partial_asm(const MonotoneTrapezoid &t, int n) {
  if (auto v = validate(t); !v) {
    throw std::invalid_argument("trapezoid_to_partial_asm: invalid trapezoid: " + v.reason());
  }
  const auto &rows = t.rows();
  IntMatrix out;
  // Matrix row u (top-down) is the step from trapezoid row u (from the top) to
  // row u+1.
  for (std::size_t u = rows.size() - 1; u >= 1; --u) {
    auto lower = indicator(rows[u - 1], n);
    const auto upper = indicator(rows[u], n);
    for (int j = 0; j < n; ++j) {
      lower[static_cast<std::size_t>(j)] -= upper[static_cast<std::size_t>(j)];
    }
    out.push_back(std::move(lower));
  }
  return PartialAsm(std::move(out), n);
}

MonotoneTrapezoid partial_asm_to_trapezoid(const PartialAsm &p, const Row &bottom) {
  const int n = p.width();
  if (auto v = validate_rows({bottom}); !v) {
    throw std::invalid_argument("partial_asm_to_trapezoid: bottom row not strictly increasing");
  }
  auto current = indicator(bottom, n);
  std::vector<Row> rows{bottom};
  for (int u = p.row_count() - 1; u >= 0; --u) {
    const auto &mrow = p.rows()[static_cast<std::size_t>(u)];
    for (int j = 0; j < n; ++j) {
      current[static_cast<std::size_t>(j)] -= mrow[static_cast<std::size_t>(j)];
      const int v = current[static_cast<std::size_t>(j)];
      if (v != 0 && v != 1) {
        throw std::invalid_argument("partial_asm_to_trapezoid: reconstruction leaves {0,1} in column " +
                                    std::to_string(j + 1) + " at matrix row " + std::to_string(u + 1));
      }
    }
    rows.push_back(support(current));
  }
  if (rows.back().empty()) {
    throw std::invalid_argument("partial_asm_to_trapezoid: top row would be empty");
  }
  MonotoneTrapezoid t(std::move(rows));
  if (auto v = validate(t); !v) {
    throw std::invalid_argument("partial_asm_to_trapezoid: result is not monotone: " + v.reason());
  }
  return t;
}

MonotoneTriangle reflect_antidiagonal(const MonotoneTriangle &a) {
  require_complete(a, "reflect_antidiagonal");
  const int n = a.size();
  std::vector<Row> rows;
  for (int i = 1; i <= n; ++i) {
    Row row;
    for (int j = i; j <= n; ++j) {
      const auto diag = a.se_diagonal(j).values;
      row.push_back(static_cast<int>(std::count_if(diag.begin(), diag.end(), [i](int x) { return x >= i; })));
    }
    rows.push_back(std::move(row));
  }
  return MonotoneTriangle(std::move(rows));
}

MonotoneTriangle rotate_90(const MonotoneTriangle &a) {
  require_complete(a, "rotate_90");
  const int n = a.size();
  std::vector<Row> rows;
  for (int i = 1; i <= n; ++i) {
    Row row;
    for (int j = i; j <= n; ++j) {
      const auto diag = a.ne_diagonal(n + 1 - j).values;
      const int bound = n + 1 - i;
      row.push_back(static_cast<int>(std::count_if(diag.begin(), diag.end(), [bound](int x) { return x <= bound; })));
    }
    rows.push_back(std::move(row));
  }
  return MonotoneTriangle(std::move(rows));
}

MonotoneTriangle reflect_horizontal(const MonotoneTriangle &a) {
  require_complete(a, "reflect_horizontal");
  const int n = a.size();
  std::vector<Row> rows;
  for (int r = 1; r <= n; ++r) {
    std::vector<int> present(static_cast<std::size_t>(n), 0);
    if (r >= 2) {
      for (int x : a.row(n + 2 - r)) {
        present[static_cast<std::size_t>(x - 1)] = 1;
      }
    }
    Row row;
    for (int x = 1; x <= n; ++x) {
      if (present[static_cast<std::size_t>(x - 1)] == 0) {
        row.push_back(x);
      }
    }
    rows.push_back(std::move(row));
  }
  return MonotoneTriangle(std::move(rows));
}

Asm matrix_reflect_antidiagonal(const Asm &m) {
  const int n = m.size();
  IntMatrix out(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n)));
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      out[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] = m.at(n + 1 - j, n + 1 - i);
    }
  }
  return Asm(std::move(out));
}

Asm matrix_rotate_clockwise(const Asm &m) {
  const int n = m.size();
  IntMatrix out(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n)));
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      out[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] = m.at(n + 1 - j, i);
    }
  }
  return Asm(std::move(out));
}

Asm matrix_reflect_horizontal(const Asm &m) {
  IntMatrix out = m.rows();
  std::reverse(out.begin(), out.end());
  return Asm(std::move(out));
}

std::vector<int> diagonal_count_multiset(const MonotoneTriangle &a, int i) {
  require_complete(a, "diagonal_count_multiset");
  const int n = a.size();
  if (i < 1 || i > n) {
    throw std::out_of_range("diagonal_count_multiset: i outside [1, n]");
  }
  std::vector<int> out;
  for (int j = i; j <= n; ++j) {
    const auto d = a.se_diagonal(j).values;
    out.push_back(static_cast<int>(std::count_if(d.begin(), d.end(), [i](int x) { return x >= i; })));
  }
  for (int j = 1; j <= i - 1; ++j) {
    const auto d = a.ne_diagonal(j).values;
    out.push_back(static_cast<int>(std::count_if(d.begin(), d.end(), [i](int x) { return x <= i - 1; })));
  }
  std::sort(out.begin(), out.end());
  return out;
}

} // namespace asmlab
