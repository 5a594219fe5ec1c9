#include "asmlab/alpha.hpp"

#include <atomic>
#include <cstdlib>
#include <map>
#include <mutex>
#include <stdexcept>

namespace asmlab {

namespace {

std::size_t initial_term_cap() {
  if (const char *env = std::getenv("ASMLAB_TERM_CAP")) {
    try {
      const long long v = std::stoll(env);
      if (v > 0) {
        return static_cast<std::size_t>(v);
      }
    } catch (const std::exception &) {
    }
  }
  return 2'000'000;
}

std::atomic<std::size_t> &cap_storage() {
  static std::atomic<std::size_t> cap{initial_term_cap()};
  return cap;
}

void check_cap(const MultiPoly &p) {
  if (p.term_count() > term_cap()) {
    throw ResourceLimitError("polynomial exceeds the term cap of " + std::to_string(term_cap()) + " terms");
  }
}

} // namespace

std::size_t term_cap() { return cap_storage().load(); }
void set_term_cap(std::size_t cap) { cap_storage().store(cap); }

MultiPoly vandermonde(int n) {
  if (n < 1) {
    throw std::invalid_argument("vandermonde: n must be positive");
  }
  MultiPoly out = MultiPoly::constant(n, 1);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      out = out * ((MultiPoly::variable(n, j) - MultiPoly::variable(n, i)) * Rational(1, j - i));
    }
  }
  return out;
}

MultiPoly apply_summation(const MultiPoly &p, std::span<const int> summed, std::span<const int> bounds) {
  const std::size_t m = bounds.size();
  if (m == 0) {
    return MultiPoly(p.arity());
  }
  if (summed.size() + 1 != m) {
    throw std::invalid_argument("apply_summation: need exactly one summed variable fewer than bounds");
  }
  if (m == 1) {
    return p;
  }
  // sum_{l_{m-1} = k_{m-1}}^{k_m}, then the operator of order m-1.
  MultiPoly inner = definite_sum(p, summed[m - 2], bounds[m - 2], bounds[m - 1]);
  check_cap(inner);
  MultiPoly result = apply_summation(inner, summed.first(m - 2), bounds.first(m - 1));
  if (m >= 3) {
    // Correction: l_{m-2} = l_{m-1} = k_{m-1}, then the operator of order m-2.
    MultiPoly doubled = substitute_variable(p, summed[m - 3], bounds[m - 2]);
    doubled = substitute_variable(doubled, summed[m - 2], bounds[m - 2]);
    result -= apply_summation(doubled, summed.first(m - 3), bounds.first(m - 2));
  }
  check_cap(result);
  return result;
}

MultiPoly summation_operator(const MultiPoly &p) {
  const int inner = p.arity();
  if (inner < 1) {
    throw std::invalid_argument("summation_operator: argument needs at least one variable");
  }
  const int n = inner + 1;
  // Working variables: k_1..k_n at 0..n-1, l_1..l_{n-1} at n..2n-2.
  const int work = 2 * n - 1;
  std::vector<int> target(static_cast<std::size_t>(inner));
  std::vector<int> sign(static_cast<std::size_t>(inner), 1);
  std::vector<int> summed(static_cast<std::size_t>(inner));
  std::vector<int> bounds(static_cast<std::size_t>(n));
  for (int v = 0; v < inner; ++v) {
    target[static_cast<std::size_t>(v)] = n + v;
    summed[static_cast<std::size_t>(v)] = n + v;
  }
  for (int v = 0; v < n; ++v) {
    bounds[static_cast<std::size_t>(v)] = v;
  }
  const MultiPoly embedded = relabel(p, target, sign, work);
  const MultiPoly full = apply_summation(embedded, summed, bounds);
  MultiPoly out(n);
  for (const auto &[e, c] : full.terms()) {
    for (int v = n; v < work; ++v) {
      if (e[static_cast<std::size_t>(v)] != 0) {
        throw std::logic_error("summation_operator: summed variable survived");
      }
    }
    out.add_term(Exponents(e.begin(), e.begin() + n), c);
  }
  return out;
}

MultiPoly alpha_via_recursion(int n) {
  if (n < 1) {
    throw std::invalid_argument("alpha: n must be positive");
  }
  MultiPoly a = MultiPoly::constant(1, 1);
  for (int m = 2; m <= n; ++m) {
    a = summation_operator(a);
    check_cap(a);
  }
  return a;
}

std::shared_ptr<const MultiPoly> alpha(int n) {
  static std::mutex mu;
  static std::map<int, std::shared_ptr<const MultiPoly>> cache;
  std::lock_guard<std::mutex> lock(mu);
  if (auto it = cache.find(n); it != cache.end()) {
    return it->second;
  }
  std::shared_ptr<const MultiPoly> prev;
  for (int m = n - 1; m >= 1 && !prev; --m) {
    if (auto it = cache.find(m); it != cache.end()) {
      prev = it->second;
    }
  }
  if (n < 1) {
    throw std::invalid_argument("alpha: n must be positive");
  }
  int m = prev ? prev->arity() : 1;
  if (!prev) {
    prev = std::make_shared<const MultiPoly>(MultiPoly::constant(1, 1));
    cache.emplace(1, prev);
  }
  while (m < n) {
    auto next = std::make_shared<const MultiPoly>(summation_operator(*prev));
    check_cap(*next);
    ++m;
    cache.emplace(m, next);
    prev = next;
  }
  return prev;
}

std::string to_string(OperatorVariant v) {
  switch (v) {
  case OperatorVariant::Printed:
    return "printed";
  case OperatorVariant::PairMinusEp:
    return "pair_minus_Ep";
  case OperatorVariant::InverseForm:
    return "inverse_form";
  }
  return "unknown";
}

std::optional<OperatorVariant> parse_operator_variant(const std::string &name) {
  for (auto v : all_operator_variants()) {
    if (to_string(v) == name) {
      return v;
    }
  }
  return std::nullopt;
}

std::vector<OperatorVariant> all_operator_variants() {
  return {OperatorVariant::Printed, OperatorVariant::PairMinusEp, OperatorVariant::InverseForm};
}

MultiPoly alpha_via_operator(int n, OperatorVariant variant) {
  MultiPoly a = vandermonde(n);
  for (int p = 0; p < n; ++p) {
    for (int q = p + 1; q < n; ++q) {
      MultiPoly next = a;
      switch (variant) {
      case OperatorVariant::Printed:
        next += shift(shift(a, p, 1), q, 1);
        next -= shift(a, q, 1);
        break;
      case OperatorVariant::PairMinusEp:
        next += shift(shift(a, p, 1), q, 1);
        next -= shift(a, p, 1);
        break;
      case OperatorVariant::InverseForm:
        next += shift(shift(a, q, 1), p, -1);
        next -= shift(a, p, -1);
        break;
      }
      a = std::move(next);
      check_cap(a);
    }
  }
  return a;
}

} // namespace asmlab
