#include "asmlab/harness.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "asmlab/closed_forms.hpp"
#include "asmlab/enumeration.hpp"
#include "asmlab/objects.hpp"

namespace asmlab {

namespace {

VerificationReport make(const std::string &identity, int n) {
  VerificationReport r;
  r.identity = identity;
  r.range = "n=" + std::to_string(n);
  return r;
}

void compare(VerificationReport &r, const std::string &input, const Integer &expected, const Integer &actual) {
  ++r.cases;
  if (expected != actual) {
    r.fail(input, to_decimal(expected), to_decimal(actual));
  }
}

void expect(VerificationReport &r, const std::string &input, bool ok) {
  ++r.cases;
  if (!ok) {
    r.fail(input, "true", "false");
  }
}

std::string row_string(const Row &row) {
  std::ostringstream os;
  os << "(";
  for (std::size_t x = 0; x < row.size(); ++x) {
    os << (x ? "," : "") << row[x];
  }
  os << ")";
  return os.str();
}

Row identity_row(int n) {
  Row r(static_cast<std::size_t>(n));
  std::iota(r.begin(), r.end(), 1);
  return r;
}

} // namespace

VerificationReport check_totals(int n) {
  auto r = make("totals", n);
  compare(r, "A_n", asm_total(n), count_triangles({identity_row(n), false}));
  return r;
}

VerificationReport check_refined(int n) {
  auto r = make("refined", n);
  const RefinedCounts counts = refined_counts(n);
  compare(r, "A_n", counts.total, asm_total(n));
  for (int k = 1; k <= n; ++k) {
    compare(r, "A_{n,k} k=" + std::to_string(k), counts.top_column[static_cast<std::size_t>(k - 1)], a_nk(n, k));
  }
  if (n >= 2) {
    for (int i = 1; i <= n; ++i) {
      for (int j = 1; j <= n; ++j) {
        compare(r, "B_{n,i,j} i=" + std::to_string(i) + " j=" + std::to_string(j),
                counts.bottom_top[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)],
                stroganov_b(n, i, j));
      }
    }
  }
  return r;
}

VerificationReport check_first_row_b(int n) {
  auto r = make("first_row_b", n);
  for (int j = 1; j <= n; ++j) {
    compare(r, "j=" + std::to_string(j), a_nk(n - 1, j - 1), stroganov_b(n, 1, j));
  }
  return r;
}

VerificationReport check_headline(int n) {
  auto r = make("headline", n);
  const CoefficientTable table = coefficient_table(n, 2, 0);
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      const std::string at = "i=" + std::to_string(i) + " j=" + std::to_string(j);
      const Integer value = a_nij(n, i, j);
      compare(r, "extraction " + at, table.at({i, j}, {}), value);
      if (i < j) {
        compare(r, "count " + at, count_triangles({complement_row(n, {i, j}), false}), value);
      }
    }
  }
  return r;
}

VerificationReport check_operator_variant(int n, OperatorVariant v) {
  auto r = make("operator_" + to_string(v), n);
  const MultiPoly expected = *alpha(n);
  const MultiPoly actual = alpha_via_operator(n, v);
  ++r.cases;
  if (!(expected == actual)) {
    const MultiPoly diff = expected - actual;
    const auto &[e, c] = *diff.terms().begin();
    std::ostringstream input;
    input << "coefficient of k^" << row_string(e);
    r.fail(input.str(), to_fraction_string(expected.coefficient(e)), to_fraction_string(actual.coefficient(e)));
  }
  return r;
}

VerificationReport check_gamma_bridge(int n) {
  auto r = make("gamma_bridge", n);
  for (int c = 0; c <= n; ++c) {
    for (int d = 0; c + d <= n; ++d) {
      for (const Row &s : increasing_tuples(n, c)) {
        for (const Row &i : increasing_tuples(n, d)) {
          GammaSpec g{n, {}, s, i};
          for (int v = 0; v < n; ++v) {
            g.k.push_back(v < c ? c + 1 : (v >= n - d ? n - d : v + 1));
          }
          compare(r, format_pair(s, i), count_trapezoids(n, s, i), gamma_count(g));
        }
      }
    }
  }
  return r;
}

VerificationReport check_symmetry_maps(int n) {
  auto r = make("symmetry_maps", n);
  const Row expected_counts = identity_row(n);
  for_each_triangle({identity_row(n), false}, [&](const MonotoneTriangle &a) {
    std::ostringstream os;
    os << "rows";
    for (const Row &row : a.rows()) {
      os << row_string(row);
    }
    const std::string at = os.str();
    const MonotoneTriangle ad = reflect_antidiagonal(a);
    const MonotoneTriangle h = reflect_horizontal(a);
    const MonotoneTriangle rot = rotate_90(a);
    expect(r, "AD^2 " + at, reflect_antidiagonal(ad) == a);
    expect(r, "H^2 " + at, reflect_horizontal(h) == a);
    expect(r, "R^4 " + at, rotate_90(rotate_90(rotate_90(rot))) == a);
    expect(r, "AD = H R " + at, ad == reflect_horizontal(rot));
    const Asm m = triangle_to_asm(a);
    expect(r, "matrix AD " + at, triangle_to_asm(ad) == matrix_reflect_antidiagonal(m));
    expect(r, "matrix H " + at, triangle_to_asm(h) == matrix_reflect_horizontal(m));
    expect(r, "matrix R " + at, triangle_to_asm(rot) == matrix_rotate_clockwise(m));
    for (int i = 1; i <= n; ++i) {
      expect(r, "diagonals i=" + std::to_string(i) + " " + at, diagonal_count_multiset(a, i) == expected_counts);
    }
  });
  return r;
}

VerificationReport check_alpha_counts(const std::vector<Row> &rows, bool weak) {
  VerificationReport r;
  r.identity = weak ? "alpha_counts_weak" : "alpha_counts";
  r.range = std::to_string(rows.size()) + " rows";
  for (const Row &row : rows) {
    const MultiPoly &a = *alpha(static_cast<int>(row.size()));
    const std::vector<long> point(row.begin(), row.end());
    const Integer value = require_integer(evaluate(a, std::span<const long>(point)), "alpha value");
    compare(r, row_string(row), count_triangles({row, weak}), value);
  }
  return r;
}

} // namespace asmlab
