#include <doctest.h>

#include "asmlab/alpha.hpp"
#include "asmlab/closed_forms.hpp"
#include "asmlab/coefficients.hpp"
#include "asmlab/enumeration.hpp"
#include "generators.hpp"

using namespace asmlab;

namespace {

Integer extract(int n, const Row &s, const Row &i) { return extract_coefficient({n, s, i}, *alpha(n)); }

void require_pass(const VerificationReport &r) {
  CAPTURE(r.identity);
  CAPTURE(r.range);
  if (!r.passed()) {
    CAPTURE(r.counterexamples.front().input);
    CAPTURE(r.counterexamples.front().expected);
    CAPTURE(r.counterexamples.front().actual);
    CHECK(r.passed());
  }
  CHECK(r.cases > 0);
}

} // namespace

TEST_CASE("tuple helpers") {
  CHECK(increasing_tuples(4, 2).size() == 6);
  CHECK(increasing_tuples(3, 0) == std::vector<Row>{Row{}});
  CHECK(increasing_tuples(2, 3).empty());
  CHECK(all_tuples(3, 2).size() == 9);
  CHECK(all_tuples(3, 2).front() == Row{1, 1});
  CHECK(format_pair({1, 3}, {2}) == "(1,3;2)");
}

TEST_CASE("extraction examples") {
  CHECK(extract(3, {}, {1}) == 2);
  CHECK(extract(3, {}, {2}) == 3);
  CHECK(extract(3, {}, {3}) == 2);
  CHECK(extract(4, {1, 2}, {}) == 2);
  CHECK(extract(4, {1}, {1}) == 0);
  CHECK(extract(4, {1}, {2}) == 2);
  CHECK(extract(4, {1}, {3}) == 3);
  CHECK(extract(4, {1}, {4}) == 2);
  CHECK(extract(2, {}, {1}) == 1);
  CHECK(extract(1, {}, {}) == 1);
  // Tuples that are not strictly increasing are still defined.
  CHECK_NOTHROW(extract(4, {2, 2}, {}));
  CHECK_NOTHROW(extract(4, {3}, {1, 1}));
  CHECK_THROWS_AS(extract(3, {4}, {}), std::invalid_argument);
  CHECK_THROWS_AS(extract(3, {1, 2}, {1, 2}), std::invalid_argument);
  CHECK_THROWS_AS(extract_coefficient({3, {}, {}}, *alpha(2)), std::invalid_argument);
}

TEST_CASE("specializations of the coefficients") {
  for (int n = 1; n <= 5; ++n) {
    CHECK(extract(n, {}, {}) == asm_total(n));
    const RefinedCounts counts = refined_counts(n);
    for (int i = 1; i <= n; ++i) {
      CHECK(extract(n, {}, {i}) == counts.top_column[static_cast<std::size_t>(i - 1)]);
    }
    if (n >= 2) {
      const CoefficientTable b = coefficient_table(n, 1, 1);
      for (int s = 1; s <= n; ++s) {
        for (int i = 1; i <= n; ++i) {
          CHECK(b.at({s}, {i}) == stroganov_b(n, s, i));
        }
      }
      for (const Row &s : increasing_tuples(n, 2)) {
        CHECK(extract(n, s, {}) == count_triangles({complement_row(n, s), false}));
      }
    }
  }
}

TEST_CASE("single-row trapezoids") {
  for (int n = 1; n <= 5; ++n) {
    for (int c = 0; c < n; ++c) {
      const int d = n - c;
      const CoefficientTable t = coefficient_table(n, c, d);
      for (const Row &s : increasing_tuples(n, c)) {
        for (const Row &i : increasing_tuples(n, d)) {
          CHECK(t.at(s, i) == (i == complement_row(n, s) ? 1 : 0));
        }
      }
    }
  }
}

TEST_CASE("table agrees with single extraction") {
  for (int n = 1; n <= 4; ++n) {
    for (int c = 0; c <= n; ++c) {
      for (int d = 0; c + d <= n; ++d) {
        const CoefficientTable t = coefficient_table(n, c, d);
        CHECK(t.size() == static_cast<std::size_t>(std::pow(n, c + d)));
        Row s;
        Row i;
        for (std::size_t idx = 0; idx < t.size(); ++idx) {
          t.tuples(idx, s, i);
          CHECK(t.value(idx) == extract(n, s, i));
        }
      }
    }
  }
}

TEST_CASE("parallel table fill is deterministic") {
  const CoefficientTable serial = coefficient_table(5, 2, 1, 1);
  const CoefficientTable parallel = coefficient_table(5, 2, 1, 4);
  for (std::size_t idx = 0; idx < serial.size(); ++idx) {
    CHECK(serial.value(idx) == parallel.value(idx));
  }
}

TEST_CASE("table indexing") {
  CoefficientTable t(3, 1, 1);
  t.at({2}, {3}) = 17;
  CHECK(t.at({2}, {3}) == 17);
  CHECK_THROWS_AS(t.at({4}, {1}), std::out_of_range);
  CHECK_THROWS_AS(t.at({1, 1}, {}), std::invalid_argument);
  CHECK_THROWS_AS(CoefficientTable(3, 2, 2), std::invalid_argument);
}

TEST_CASE("trapezoid counts") {
  require_pass(verify_theorem7(4, 1, 1));
  require_pass(verify_theorem7(5, 2, 1));
  for (int n = 1; n <= 4; ++n) {
    for (int c = 0; c <= n; ++c) {
      for (int d = 0; c + d <= n; ++d) {
        require_pass(verify_theorem7(n, c, d));
      }
    }
  }
}

TEST_CASE("expansion reconstruction") {
  for (int n = 1; n <= 4; ++n) {
    for (int c = 0; c <= n; ++c) {
      for (int d = 0; c + d <= n; ++d) {
        require_pass(reconstruct_expansion(coefficient_table(n, c, d)));
      }
    }
  }
  // A corrupted table must be caught.
  CoefficientTable t = coefficient_table(3, 1, 1);
  t.at({1}, {2}) += 1;
  CHECK_FALSE(reconstruct_expansion(t).passed());
}

TEST_CASE("polynomial identities") {
  for (int n = 1; n <= 5; ++n) {
    require_pass(check_cyclic(n));
    for (long z : {-3L, 1L, 5L}) {
      require_pass(check_reflection_translation(n, z));
    }
  }
}

TEST_CASE("coefficient identities") {
  require_pass(check_circuit(4, 2, 0, 1));
  require_pass(check_circuit(5, 2, 1, 2));
  for (int n = 1; n <= 4; ++n) {
    for (int c = 0; c <= n; ++c) {
      for (int d = 0; c + d <= n && c + d <= 3; ++d) {
        for (int t = 0; t <= c; ++t) {
          require_pass(check_circuit(n, c, d, t));
        }
        require_pass(check_remark_symmetry(n, c, d));
      }
    }
    for (int d = 1; d <= std::min(n, 2); ++d) {
      require_pass(check_system(n, d));
    }
  }
  CHECK_THROWS_AS(check_circuit(4, 1, 1, 2), std::invalid_argument);
  CHECK_THROWS_AS(check_system(3, 0), std::invalid_argument);
}

TEST_CASE("gamma formula") {
  CHECK(gamma_formula_value({3, {1, 2, 3}, {}, {}}) == 7);
  CHECK(gamma_formula_value({1, {5}, {}, {}}) == 1);
  require_pass(check_gamma_formula({3, {1, 2, 3}, {}, {}}));
  require_pass(check_gamma_formula({4, {0, 1, 3, 6}, {2}, {2}}));
  for (int trial = 0; trial < 100; ++trial) {
    require_pass(check_gamma_formula(gen::gamma_spec(4)));
  }
}
