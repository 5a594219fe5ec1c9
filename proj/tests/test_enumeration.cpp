#include <doctest.h>

#include <algorithm>
#include <map>

#include "asmlab/enumeration.hpp"
#include "generators.hpp"

using namespace asmlab;

namespace {

// Plain recursion over every row above, no memo: the reference count.
// Only the bottom row may be weak; every row above is strict anyway.
long naive_count(const Row &row) {
  if (row.size() <= 1) {
    return 1;
  }
  long total = 0;
  Row next(row.size() - 1);
  auto rec = [&](auto &&self, std::size_t t) -> void {
    if (t == next.size()) {
      total += naive_count(next);
      return;
    }
    for (int x = row[t]; x <= row[t + 1]; ++x) {
      if (t > 0 && x <= next[t - 1]) {
        continue;
      }
      next[t] = x;
      self(self, t + 1);
    }
  };
  rec(rec, 0);
  return total;
}

Integer count(const Row &row, bool weak = false) { return count_triangles({row, weak}); }

} // namespace

TEST_CASE("count_triangles examples") {
  CHECK(count({1, 2, 3}) == 7);
  CHECK(count({1, 2, 4}) == 14);
  CHECK(count({5}) == 1);
  CHECK(count({-7}) == 1);
  CHECK(count({2, 2}, true) == 1);
  CHECK(count({1, 2, 3, 4, 5, 6}) == 7436);
  CHECK(count(gen::identity_row(7)) == 218348);
}

TEST_CASE("bottom row validation") {
  CHECK_THROWS_AS(count({2, 1}), std::invalid_argument);
  CHECK_THROWS_AS(count({1, 1}), std::invalid_argument);
  CHECK(count({}) == 1);
  CHECK_THROWS_AS(count({3, 2}, true), std::invalid_argument);
}

TEST_CASE("count_triangles against plain recursion") {
  for (int trial = 0; trial < 60; ++trial) {
    const int n = gen::uniform(1, 5);
    const Row row = gen::strict_row(n, -6, 6);
    CHECK(count(row) == naive_count(row));
    const Row weak = gen::weak_row(n, -3, 3);
    CHECK(count(weak, true) == naive_count(weak));
  }
}

TEST_CASE("translation and negation-reversal invariance") {
  for (int trial = 0; trial < 40; ++trial) {
    const int n = gen::uniform(1, 6);
    const Row row = gen::strict_row(n, -8, 8);
    const int z = gen::uniform(-5, 5);
    Row shifted = row;
    for (int &x : shifted) {
      x += z;
    }
    Row mirrored;
    for (auto it = row.rbegin(); it != row.rend(); ++it) {
      mirrored.push_back(-*it);
    }
    CHECK(count(shifted) == count(row));
    CHECK(count(mirrored) == count(row));
  }
}

TEST_CASE("enumeration order and size") {
  const auto two = enumerate_triangles({{1, 2}, false});
  REQUIRE(two.size() == 2);
  CHECK(two[0].top() == 1);
  CHECK(two[1].top() == 2);
  CHECK(enumerate_triangles({{1, 2, 3}, false}).size() == 7);
  CHECK(enumerate_triangles({gen::identity_row(6), false}).size() == 7436);

  for (int trial = 0; trial < 20; ++trial) {
    const Row row = gen::strict_row(gen::uniform(1, 5), 0, 7);
    const auto all = enumerate_triangles({row, false});
    CHECK(Integer(static_cast<long>(all.size())) == count(row));
    CHECK(std::is_sorted(all.begin(), all.end(), [](const MonotoneTriangle &a, const MonotoneTriangle &b) {
      return a.rows() < b.rows();
    }));
    CHECK(std::adjacent_find(all.begin(), all.end()) == all.end());
    for (const auto &t : all) {
      CHECK(validate(t));
    }
  }
}

TEST_CASE("count_trapezoids") {
  CHECK(count_trapezoids(4, {1, 2}, {}) == 2);
  CHECK(count_trapezoids(4, {2}, {1, 3, 4}) == 1);
  CHECK(count_trapezoids(4, {2}, {1, 2, 4}) == 0);

  // The displayed (3,5)-trapezoid is among those counted.
  const Row bottom = complement_row(6, {4});
  CHECK(bottom == Row{1, 2, 3, 5, 6});
  const MonotoneTrapezoid displayed({{1, 2, 3, 5, 6}, {1, 2, 4, 6}, {2, 3, 5}});
  bool found = false;
  long listed = 0;
  for_each_trapezoid(bottom, 3, [&](const MonotoneTrapezoid &t) {
    if (t.top_row() == Row{2, 3, 5}) {
      ++listed;
      found = found || t == displayed;
    }
  });
  CHECK(found);
  CHECK(count_trapezoids(6, {4}, {2, 3, 5}) == listed);

  CHECK_THROWS_AS(count_trapezoids(4, {2, 1}, {}), std::invalid_argument);
  CHECK_THROWS_AS(count_trapezoids(4, {1}, {1, 2, 3, 4}), std::invalid_argument);
  CHECK_THROWS_AS(count_trapezoids(4, {}, {0}), std::invalid_argument);
}

TEST_CASE("count_trapezoids against listing") {
  for (int n = 1; n <= 5; ++n) {
    for (int c = 0; c < n; ++c) {
      for (int d = 1; d <= n - c; ++d) {
        Row removed = gen::strict_row(c, 1, n);
        const Row bottom = complement_row(n, removed);
        std::map<Row, long> by_top;
        for_each_trapezoid(bottom, d, [&](const MonotoneTrapezoid &t) { ++by_top[t.top_row()]; });
        for (const auto &[top, k] : by_top) {
          CHECK(count_trapezoids(n, removed, top) == k);
        }
      }
    }
  }
}

TEST_CASE("refined counts") {
  const RefinedCounts three = refined_counts(3);
  CHECK(three.total == 7);
  CHECK(three.top_column == std::vector<Integer>{2, 3, 2});
  const RefinedCounts four = refined_counts(4);
  CHECK(four.top_column == std::vector<Integer>{7, 14, 14, 7});
  CHECK(four.bottom_top[0][1] == 2);
  const RefinedCounts one = refined_counts(1);
  CHECK(one.total == 1);
  CHECK(one.top_column == std::vector<Integer>{1});
}

TEST_CASE("gamma_count") {
  CHECK(gamma_count({3, {1, 2, 3}, {}, {}}) == 7);
  CHECK(gamma_count({2, {2, 2}, {}, {}}) == 1);
  CHECK(gamma_count({1, {9}, {}, {}}) == 1);
  CHECK(gamma_count({1, {4}, {1}, {}}) == 1);

  // Without anchors it is the extended triangle count.
  for (int trial = 0; trial < 30; ++trial) {
    const int n = gen::uniform(1, 5);
    const Row k = gen::weak_row(n, 0, 5);
    CHECK(gamma_count({n, k, {}, {}}) == count(k, true));
  }

  // Anchor positions beyond their diagonal are rejected.
  CHECK_THROWS_AS(gamma_count({3, {1, 2, 3}, {4}, {}}), std::invalid_argument);
  CHECK_THROWS_AS(gamma_count({3, {1, 2, 3}, {1, 1, 1, 1}, {}}), std::invalid_argument);
  CHECK_THROWS_AS(gamma_count({3, {1, 2}, {}, {}}), std::invalid_argument);
  CHECK_THROWS_AS(gamma_count({3, {1, 2, 3}, {2, 1}, {}}), std::invalid_argument);
}

TEST_CASE("gamma_count at the special point") {
  for (int n = 1; n <= 5; ++n) {
    for (int c = 0; c <= n; ++c) {
      for (int d = 0; c + d <= n; ++d) {
        const Row s = gen::strict_row(c, 1, n);
        const Row i = gen::strict_row(d, 1, n);
        GammaSpec g{n, {}, s, i};
        for (int v = 0; v < n; ++v) {
          g.k.push_back(v < c ? c + 1 : (v >= n - d ? n - d : v + 1));
        }
        CHECK(gamma_count(g) == count_trapezoids(n, s, i));
      }
    }
  }
}
