#include <doctest.h>

#include "asmlab/closed_forms.hpp"
#include "asmlab/enumeration.hpp"
#include "generators.hpp"

using namespace asmlab;

TEST_CASE("asm_total") {
  const std::vector<long> expected{1, 2, 7, 42, 429, 7436, 218348, 10850216, 911835460};
  for (int n = 1; n <= 9; ++n) {
    CHECK(asm_total(n) == expected[static_cast<std::size_t>(n - 1)]);
  }
  CHECK(asm_total(10) == 129534272700L);
  CHECK(asm_total(11) == 31095744852375L);
  CHECK(asm_total(12) == Integer("12611311859677500"));
  CHECK_THROWS_AS(asm_total(0), std::invalid_argument);
}

TEST_CASE("a_nk") {
  CHECK(a_nk(4, 1) == 7);
  CHECK(a_nk(4, 2) == 14);
  CHECK(a_nk(4, 0) == 0);
  CHECK(a_nk(4, 5) == 0);
  CHECK(a_nk(1, 1) == 1);
  for (int n = 1; n <= 10; ++n) {
    Integer sum = 0;
    for (int k = 1; k <= n; ++k) {
      sum += a_nk(n, k);
      CHECK(a_nk(n, k) == a_nk(n, n + 1 - k));
    }
    CHECK(sum == asm_total(n));
    if (n >= 2) {
      CHECK(a_nk(n, 1) == asm_total(n - 1));
    }
  }
}

TEST_CASE("stroganov_b") {
  CHECK(stroganov_b(4, 1, 2) == 2);
  Integer sum3 = 0;
  for (int i = 1; i <= 3; ++i) {
    for (int j = 1; j <= 3; ++j) {
      sum3 += stroganov_b(3, i, j);
    }
  }
  CHECK(sum3 == 7);
  for (int n = 2; n <= 8; ++n) {
    Integer sum = 0;
    for (int i = 1; i <= n; ++i) {
      for (int j = 1; j <= n; ++j) {
        sum += stroganov_b(n, i, j);
      }
    }
    CHECK(sum == asm_total(n));
    for (int j = 1; j <= n; ++j) {
      CHECK(stroganov_b(n, 1, j) == a_nk(n - 1, j - 1));
    }
  }
  for (int n = 2; n <= 5; ++n) {
    const RefinedCounts counts = refined_counts(n);
    for (int i = 1; i <= n; ++i) {
      for (int j = 1; j <= n; ++j) {
        CHECK(stroganov_b(n, i, j) == counts.bottom_top[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)]);
      }
    }
  }
  CHECK_THROWS_AS(stroganov_b(1, 1, 1), std::invalid_argument);
  CHECK_THROWS_AS(stroganov_b(4, 0, 1), std::invalid_argument);
}

TEST_CASE("a_nij") {
  CHECK(a_nij(4, 1, 2) == 2);
  CHECK(a_nij(4, 1, 2) == count_triangles({{3, 4}, false}));
  CHECK(a_nij(4, 2, 4) == 3);
  for (int n = 2; n <= 6; ++n) {
    for (int i = 1; i <= n; ++i) {
      CHECK(a_nij(n, i, n) == a_nk(n - 1, i));
      for (int j = i + 1; j <= n; ++j) {
        CHECK(a_nij(n, i, j) == count_triangles({complement_row(n, {i, j}), false}));
      }
    }
  }
  CHECK_THROWS_AS(a_nij(4, 1, 5), std::invalid_argument);
}

TEST_CASE("direct double sum") {
  for (int n = 2; n <= 8; ++n) {
    const VerificationReport r = check_anij_forms(n);
    CHECK(r.passed());
    CHECK(r.cases == static_cast<std::size_t>(n * n));
  }
}

TEST_CASE("relation and near symmetry") {
  for (int n = 2; n <= 5; ++n) {
    CHECK(check_relation(n).passed());
  }
  for (int n = 3; n <= 7; ++n) {
    const VerificationReport r = check_near_symmetry(n);
    CHECK(r.passed());
    CHECK(r.cases == static_cast<std::size_t>(n * n - 1));
  }
  // The exceptional pair is genuinely not symmetric.
  for (int n = 3; n <= 6; ++n) {
    CHECK(a_nij(n, n - 1, 1) != a_nij(n, n, 2));
  }
  CHECK(a_nij(4, 3, 1) - asm_total(3) == a_nij(4, 4, 2));
  CHECK_THROWS_AS(check_near_symmetry(2), std::invalid_argument);
}
