#include <doctest.h>

#include <vector>

#include "asmlab/alpha.hpp"
#include "asmlab/enumeration.hpp"
#include "generators.hpp"

using namespace asmlab;

namespace {

Rational at(const MultiPoly &p, const Row &row) {
  const std::vector<long> point(row.begin(), row.end());
  return evaluate(p, std::span<const long>(point));
}

MultiPoly k(int arity, int var) { return MultiPoly::variable(arity, var); }

// Drops variables >= keep, which must not occur.
MultiPoly project(const MultiPoly &p, int keep) {
  MultiPoly out(keep);
  for (const auto &[e, c] : p.terms()) {
    for (std::size_t v = static_cast<std::size_t>(keep); v < e.size(); ++v) {
      REQUIRE(e[v] == 0);
    }
    out.add_term(Exponents(e.begin(), e.begin() + keep), c);
  }
  return out;
}

struct CapGuard {
  std::size_t saved = term_cap();
  ~CapGuard() { set_term_cap(saved); }
};

} // namespace

TEST_CASE("vandermonde") {
  CHECK(vandermonde(1) == MultiPoly::constant(1, 1));
  CHECK(vandermonde(2) == k(2, 1) - k(2, 0));
  const MultiPoly v3 = vandermonde(3);
  CHECK(v3 * Rational(2) == (k(3, 1) - k(3, 0)) * (k(3, 2) - k(3, 0)) * (k(3, 2) - k(3, 1)));
  CHECK(at(v3, {1, 2, 3}) == 1);
  for (int n = 1; n <= 5; ++n) {
    CHECK(at(vandermonde(n), gen::identity_row(n)) == 1);
    for (int v = 0; v < n; ++v) {
      CHECK(vandermonde(n).degree_in(v) == n - 1);
    }
  }
  CHECK_THROWS_AS(vandermonde(0), std::invalid_argument);
}

TEST_CASE("summation operator base cases") {
  const MultiPoly a2 = summation_operator(MultiPoly::constant(1, 1));
  CHECK(a2 == k(2, 1) - k(2, 0) + MultiPoly::constant(2, 1));
  CHECK(at(a2, {1, 2}) == 2);
  CHECK(at(a2, {1, 3}) == 3);
  CHECK(at(summation_operator(a2), {1, 2, 3}) == 7);
  CHECK_THROWS_AS(summation_operator(MultiPoly(0)), std::invalid_argument);

  const std::vector<int> none;
  const std::vector<int> single{0};
  CHECK(apply_summation(k(2, 0), none, none).is_zero());
  CHECK(apply_summation(k(2, 0), none, single) == k(2, 0));
}

TEST_CASE("alpha small cases") {
  CHECK(alpha_via_recursion(1) == MultiPoly::constant(1, 1));
  CHECK(*alpha(2) == k(2, 1) - k(2, 0) + MultiPoly::constant(2, 1));
  const MultiPoly &a3 = *alpha(3);
  CHECK(at(a3, {1, 2, 3}) == 7);
  CHECK(at(a3, {1, 2, 4}) == 14);
  // The row above (1,1,1) would need two distinct entries in [1,1].
  CHECK(at(a3, {1, 1, 1}) == 0);
  CHECK(count_triangles({{1, 1, 1}, true}) == 0);
  CHECK(at(a3, {1, 1, 2}) == Rational(count_triangles({{1, 1, 2}, true})));
  const std::vector<Integer> totals{1, 2, 7, 42, 429, 7436};
  for (int n = 1; n <= 6; ++n) {
    CHECK(at(*alpha(n), gen::identity_row(n)) == Rational(totals[static_cast<std::size_t>(n - 1)]));
  }
  CHECK(alpha_via_recursion(4) == *alpha(4));
  CHECK(alpha(5) == alpha(5));
  CHECK_THROWS_AS(alpha_via_recursion(0), std::invalid_argument);
}

TEST_CASE("alpha degree bound") {
  for (int n = 1; n <= 6; ++n) {
    const MultiPoly &a = *alpha(n);
    for (const auto &[e, c] : a.terms()) {
      for (int x : e) {
        CHECK(x <= n - 1);
      }
    }
  }
}

TEST_CASE("alpha against brute-force counts") {
  for (int n = 1; n <= 6; ++n) {
    const MultiPoly &a = *alpha(n);
    for (int trial = 0; trial < 100; ++trial) {
      const Row row = gen::strict_row(n, -10, 10);
      CHECK(at(a, row) == Rational(count_triangles({row, false})));
    }
  }
  for (int n = 1; n <= 4; ++n) {
    const MultiPoly &a = *alpha(n);
    for (const Row &row : [&] {
           std::vector<Row> rows;
           Row cur;
           auto rec = [&](auto &&self, int from) -> void {
             if (static_cast<int>(cur.size()) == n) {
               rows.push_back(cur);
               return;
             }
             for (int x = from; x <= n; ++x) {
               cur.push_back(x);
               self(self, x);
               cur.pop_back();
             }
           };
           rec(rec, 1);
           return rows;
         }()) {
      CHECK(at(a, row) == Rational(count_triangles({row, true})));
    }
  }
}

TEST_CASE("operator product variants") {
  const MultiPoly a2 = *alpha(2);
  CHECK(alpha_via_operator(2, OperatorVariant::Printed) == k(2, 1) - k(2, 0) - MultiPoly::constant(2, 1));
  CHECK(at(alpha_via_operator(2, OperatorVariant::Printed), {1, 2}) == 0);
  CHECK(alpha_via_operator(2, OperatorVariant::PairMinusEp) == a2);
  CHECK(alpha_via_operator(2, OperatorVariant::InverseForm) == a2);
  for (int n = 1; n <= 5; ++n) {
    CHECK(alpha_via_operator(n, kProductionOperatorVariant) == *alpha(n));
  }
  CHECK_FALSE(alpha_via_operator(3, OperatorVariant::InverseForm) == *alpha(3));
  CHECK_FALSE(alpha_via_operator(3, OperatorVariant::Printed) == *alpha(3));

  for (auto v : all_operator_variants()) {
    CHECK(parse_operator_variant(to_string(v)) == v);
  }
  CHECK_FALSE(parse_operator_variant("bogus").has_value());
}

TEST_CASE("differences of alpha reduce to partial summations") {
  for (int n = 2; n <= 5; ++n) {
    const MultiPoly &b = *alpha(n);
    const MultiPoly &a = *alpha(n - 1);
    for (int c = 0; c <= n - 1; ++c) {
      for (int d = 0; c + d <= n - 1; ++d) {
        MultiPoly lhs = b;
        for (int v = 0; v < c; ++v) {
          lhs = forward_difference(lhs, v);
        }
        for (int v = n - d; v < n; ++v) {
          lhs = backward_difference(lhs, v);
        }
        if (c % 2 == 1) {
          lhs = -lhs;
        }
        // A(k_1..k_c, l_{c+1}..l_{n-d-1}, k_{n-d+1}..k_n) with the l's placed
        // after the n variables k.
        const int inner = n - d - 1 - c;
        std::vector<int> target;
        const std::vector<int> sign(static_cast<std::size_t>(n - 1), 1);
        for (int v = 0; v < n - 1; ++v) {
          target.push_back(v < c ? v : (v < n - d - 1 ? n + (v - c) : v + 1));
        }
        std::vector<int> summed;
        for (int l = 0; l < inner; ++l) {
          summed.push_back(n + l);
        }
        std::vector<int> bounds;
        for (int v = c; v < n - d; ++v) {
          bounds.push_back(v);
        }
        const MultiPoly rhs = project(apply_summation(relabel(a, target, sign, n + inner), summed, bounds), n);
        CAPTURE(n);
        CAPTURE(c);
        CAPTURE(d);
        CHECK(lhs == rhs);
      }
    }
  }
}

TEST_CASE("term cap") {
  CapGuard guard;
  set_term_cap(10);
  CHECK_THROWS_AS(alpha_via_recursion(4), ResourceLimitError);
  CHECK_THROWS_AS(alpha_via_operator(4, kProductionOperatorVariant), ResourceLimitError);
  set_term_cap(guard.saved);
  CHECK_NOTHROW(alpha_via_recursion(3));
}
