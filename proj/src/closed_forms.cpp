#include "asmlab/closed_forms.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <string>
#include <vector>

#include "asmlab/alpha.hpp"

namespace asmlab {

namespace {

// Per-n row A_{n,0..n+1} with the zero padding at both ends.
std::shared_ptr<const std::vector<Integer>> refined_row(int n) {
  static std::mutex mu;
  static std::map<int, std::shared_ptr<const std::vector<Integer>>> cache;
  std::lock_guard<std::mutex> lock(mu);
  if (auto it = cache.find(n); it != cache.end()) {
    return it->second;
  }
  Rational prod(1);
  for (int j = 0; j <= n - 2; ++j) {
    prod *= ratio(factorial(3 * j + 1), factorial(n + j));
  }
  auto row = std::make_shared<std::vector<Integer>>(static_cast<std::size_t>(n + 2), Integer(0));
  for (int k = 1; k <= n; ++k) {
    Rational v = prod * ratio(binomial(n + k - 2, n - 1) * factorial(2 * n - k - 1), factorial(n - k));
    (*row)[static_cast<std::size_t>(k)] = require_integer(v, "A_{n,k}");
  }
  cache.emplace(n, row);
  return row;
}

Integer refined(const std::vector<Integer> &row, int k) {
  if (k < 1 || k + 1 >= static_cast<int>(row.size())) {
    return 0;
  }
  return row[static_cast<std::size_t>(k)];
}

void require_grid(int n, int i, int j, const char *what) {
  if (n < 2 || i < 1 || i > n || j < 1 || j > n) {
    throw std::invalid_argument(std::string(what) + ": need n >= 2 and 1 <= i, j <= n");
  }
}

std::string triple(int n, int i, int j) {
  return "(" + std::to_string(n) + "," + std::to_string(i) + "," + std::to_string(j) + ")";
}

void compare(VerificationReport &report, const std::string &input, const Integer &expected, const Integer &actual) {
  ++report.cases;
  if (expected != actual) {
    report.fail(input, to_decimal(expected), to_decimal(actual));
  }
}

} // namespace

Integer asm_total(int n) {
  if (n < 1) {
    throw std::invalid_argument("asm_total: n must be positive");
  }
  Rational prod(1);
  for (int j = 0; j <= n - 1; ++j) {
    prod *= ratio(factorial(3 * j + 1), factorial(n + j));
  }
  return require_integer(prod, "A_n");
}

Integer a_nk(int n, int k) {
  if (n < 1) {
    throw std::invalid_argument("a_nk: n must be positive");
  }
  return refined(*refined_row(n), k);
}

Integer stroganov_b(int n, int i, int j) {
  require_grid(n, i, j, "stroganov_b");
  const auto &top = *refined_row(n);
  const auto &prev = *refined_row(n - 1);
  Integer sum = 0;
  for (int l = 1; l <= i; ++l) {
    const int m = j - i + l;
    sum += refined(prev, l - 1) * (refined(top, m) - refined(top, m - 1));
    sum += refined(prev, m - 1) * (refined(top, l) - refined(top, l - 1));
  }
  return require_integer(ratio(sum, asm_total(n - 1)), "B_{n,i,j}");
}

Integer a_nij(int n, int i, int j) {
  require_grid(n, i, j, "a_nij");
  Integer sum = 0;
  for (int k = j; k <= n; ++k) {
    Integer term = binomial(2 * n - 2 - j, k - j) * stroganov_b(n, i, k);
    sum += sign_power(n + k) > 0 ? term : Integer(-term);
  }
  return sum;
}

Integer a_nij_direct(int n, int i, int j) {
  require_grid(n, i, j, "a_nij_direct");
  const auto &top = *refined_row(n);
  const auto &prev = *refined_row(n - 1);
  Integer sum = 0;
  for (int l = 1; l <= i; ++l) {
    for (int k = l - i + j; k <= l - i + n; ++k) {
      Integer inner = refined(prev, l - 1) * (refined(top, k) - refined(top, k - 1)) +
                      refined(prev, k - 1) * (refined(top, l) - refined(top, l - 1));
      inner *= binomial(2 * n - 2 - j, k - l + i - j);
      sum += sign_power(n + i + k + l) > 0 ? inner : Integer(-inner);
    }
  }
  return require_integer(ratio(sum, asm_total(n - 1)), "A_{n,i,j}");
}

VerificationReport check_relation(int n) {
  if (n < 2) {
    throw std::invalid_argument("check_relation: n must be at least 2");
  }
  VerificationReport report;
  report.identity = "relation";
  report.range = "n=" + std::to_string(n);
  const CoefficientTable pairs = coefficient_table(n, 2, 0);
  const CoefficientTable mixed = coefficient_table(n, 1, 1);
  for (int s1 = 1; s1 <= n; ++s1) {
    for (int s2 = s1 + 1; s2 <= n; ++s2) {
      Integer rhs = 0;
      for (int i1 = s2; i1 <= n; ++i1) {
        Integer term = binomial(2 * n - 2 - s2, i1 - s2) * mixed.at({s1}, {i1});
        rhs += sign_power(n + i1) > 0 ? term : Integer(-term);
      }
      compare(report, format_pair({s1, s2}, {}), pairs.at({s1, s2}, {}), rhs);
    }
  }
  return report;
}

VerificationReport check_near_symmetry(int n) {
  if (n < 3) {
    throw std::invalid_argument("check_near_symmetry: n must be at least 3");
  }
  VerificationReport report;
  report.identity = "near_symmetry";
  report.range = "n=" + std::to_string(n);
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      if ((i == n - 1 && j == 1) || (i == n && j == 2)) {
        continue;
      }
      compare(report, triple(n, i, j), a_nij(n, i, j), a_nij(n, n + 1 - j, n + 1 - i));
    }
  }
  compare(report, "exceptional " + triple(n, n - 1, 1), a_nij(n, n, 2), a_nij(n, n - 1, 1) - asm_total(n - 1));
  return report;
}

VerificationReport check_anij_forms(int n) {
  VerificationReport report;
  report.identity = "anij_forms";
  report.range = "n=" + std::to_string(n);
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      compare(report, triple(n, i, j), a_nij(n, i, j), a_nij_direct(n, i, j));
    }
  }
  return report;
}

} // namespace asmlab
