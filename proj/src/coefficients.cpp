#include "asmlab/coefficients.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "asmlab/alpha.hpp"

namespace asmlab {

namespace {

constexpr std::size_t kMaxCounterexamples = 50;

std::string join(const Row &r) {
  std::ostringstream os;
  for (std::size_t x = 0; x < r.size(); ++x) {
    os << (x ? "," : "") << r[x];
  }
  return os.str();
}

std::string format_exponents(const Exponents &e) {
  return "k^(" + join(Row(e.begin(), e.end())) + ")";
}

void require_tuple_range(const Row &t, int n, const char *what) {
  for (int x : t) {
    if (x < 1 || x > n) {
      throw std::invalid_argument(std::string(what) + " entry outside [1, n]");
    }
  }
}

void record(VerificationReport &report, std::string input, const Integer &expected, const Integer &actual) {
  ++report.cases;
  if (expected != actual && report.counterexamples.size() < kMaxCounterexamples) {
    report.fail(std::move(input), to_decimal(expected), to_decimal(actual));
  }
}

// Term-level comparison of two polynomials of the same arity.
void compare_polys(VerificationReport &report, const MultiPoly &expected, const MultiPoly &actual) {
  ++report.cases;
  if (expected == actual) {
    return;
  }
  if (expected.arity() != actual.arity()) {
    report.fail("arity", std::to_string(expected.arity()), std::to_string(actual.arity()));
    return;
  }
  const MultiPoly diff = expected - actual;
  for (const auto &[e, c] : diff.terms()) {
    if (report.counterexamples.size() >= kMaxCounterexamples) {
      break;
    }
    report.fail(format_exponents(e), to_fraction_string(expected.coefficient(e)),
                to_fraction_string(actual.coefficient(e)));
  }
}

int sum(const Row &r) {
  int t = 0;
  for (int x : r) {
    t += x;
  }
  return t;
}

} // namespace

std::string format_pair(const Row &s, const Row &i) { return "(" + join(s) + ";" + join(i) + ")"; }

std::vector<Row> increasing_tuples(int n, int len) {
  std::vector<Row> out;
  Row cur;
  auto rec = [&](auto &&self, int from) -> void {
    if (static_cast<int>(cur.size()) == len) {
      out.push_back(cur);
      return;
    }
    for (int x = from; x <= n; ++x) {
      cur.push_back(x);
      self(self, x + 1);
      cur.pop_back();
    }
  };
  rec(rec, 1);
  return out;
}

std::vector<Row> all_tuples(int n, int len) {
  std::vector<Row> out;
  Row cur;
  auto rec = [&](auto &&self) -> void {
    if (static_cast<int>(cur.size()) == len) {
      out.push_back(cur);
      return;
    }
    for (int x = 1; x <= n; ++x) {
      cur.push_back(x);
      self(self);
      cur.pop_back();
    }
  };
  rec(rec);
  return out;
}

MultiPoly specialize_middle(const MultiPoly &alpha, int n, int c, int d) {
  if (alpha.arity() != n) {
    throw std::invalid_argument("specialize_middle: alpha arity differs from n");
  }
  if (c < 0 || d < 0 || c + d > n) {
    throw std::invalid_argument("specialize_middle: need c, d >= 0 and c + d <= n");
  }
  std::vector<std::optional<long>> assignment(static_cast<std::size_t>(n));
  for (int v = c; v < n - d; ++v) {
    assignment[static_cast<std::size_t>(v)] = v + 1;
  }
  return specialize(alpha, assignment);
}

Integer extract_coefficient(const IndexTuplePair &pair, const MultiPoly &alpha) {
  const int n = pair.n;
  const int c = static_cast<int>(pair.s.size());
  const int d = static_cast<int>(pair.i.size());
  if (alpha.arity() != n) {
    throw std::invalid_argument("extract_coefficient: alpha arity differs from n");
  }
  require_tuple_range(pair.s, n, "s");
  require_tuple_range(pair.i, n, "i");
  MultiPoly p = specialize_middle(alpha, n, c, d);
  for (int l = 1; l <= c; ++l) {
    p = forward_difference(p, l - 1, pair.s[static_cast<std::size_t>(c - l)] - 1);
  }
  for (int l = 1; l <= d; ++l) {
    p = backward_difference(p, c + l - 1, pair.i[static_cast<std::size_t>(l - 1)] - 1);
  }
  std::vector<long> point(static_cast<std::size_t>(c + d));
  for (int v = 0; v < c + d; ++v) {
    point[static_cast<std::size_t>(v)] = v < c ? c + 1 : n - d;
  }
  Rational value = evaluate(p, std::span<const long>(point));
  if (sign_power(sum(pair.s) - c) < 0) {
    value = -value;
  }
  return require_integer(value, "extracted coefficient");
}

CoefficientTable::CoefficientTable(int n, int c, int d) : n_(n), c_(c), d_(d) {
  if (n < 1 || c < 0 || d < 0 || c + d > n) {
    throw std::invalid_argument("coefficient table: need n >= 1, c, d >= 0, c + d <= n");
  }
  std::size_t total = 1;
  for (int v = 0; v < c + d; ++v) {
    total *= static_cast<std::size_t>(n);
  }
  values_.assign(total, Integer(0));
}

std::size_t CoefficientTable::index_of(const Row &s, const Row &i) const {
  if (static_cast<int>(s.size()) != c_ || static_cast<int>(i.size()) != d_) {
    throw std::invalid_argument("coefficient table: tuple lengths differ from (c, d)");
  }
  std::size_t idx = 0;
  for (const Row *t : {&s, &i}) {
    for (int x : *t) {
      if (x < 1 || x > n_) {
        throw std::out_of_range("coefficient table: index outside [1, n]");
      }
      idx = idx * static_cast<std::size_t>(n_) + static_cast<std::size_t>(x - 1);
    }
  }
  return idx;
}

const Integer &CoefficientTable::at(const Row &s, const Row &i) const { return values_[index_of(s, i)]; }
Integer &CoefficientTable::at(const Row &s, const Row &i) { return values_[index_of(s, i)]; }

void CoefficientTable::tuples(std::size_t index, Row &s, Row &i) const {
  Row digits(static_cast<std::size_t>(c_ + d_));
  for (int v = c_ + d_ - 1; v >= 0; --v) {
    digits[static_cast<std::size_t>(v)] = static_cast<int>(index % static_cast<std::size_t>(n_)) + 1;
    index /= static_cast<std::size_t>(n_);
  }
  s.assign(digits.begin(), digits.begin() + c_);
  i.assign(digits.begin() + c_, digits.end());
}

namespace {

// Differencing in the leading variable of `p` for every order m = 0..n-1,
// evaluating that variable right after. `level` counts the variables already
// eliminated (k_1..k_c first, then k_{n-d+1}..k_n).
class TableFiller {
public:
  TableFiller(CoefficientTable &table) : table_(table), s_(static_cast<std::size_t>(table.c())), i_(static_cast<std::size_t>(table.d())) {}

  void fill(const MultiPoly &p, int level) {
    const int c = table_.c();
    const int d = table_.d();
    if (level == c + d) {
      Rational v = evaluate(p, std::span<const long>{});
      if (sign_power(sum(s_) - c) < 0) {
        v = -v;
      }
      table_.at(s_, i_) = require_integer(v, "table coefficient");
      return;
    }
    MultiPoly diffed = p;
    for (int m = 0; m < table_.n(); ++m) {
      if (m > 0) {
        diffed = level < c ? forward_difference(diffed, 0) : backward_difference(diffed, 0);
      }
      descend(diffed, level, m);
    }
  }

  void descend(const MultiPoly &diffed, int level, int m) {
    const int c = table_.c();
    const int d = table_.d();
    const int n = table_.n();
    std::vector<std::optional<long>> assign(static_cast<std::size_t>(diffed.arity()));
    assign[0] = level < c ? c + 1 : n - d;
    if (level < c) {
      s_[static_cast<std::size_t>(c - 1 - level)] = m + 1;
    } else {
      i_[static_cast<std::size_t>(level - c)] = m + 1;
    }
    fill(specialize(diffed, assign), level + 1);
  }

private:
  CoefficientTable &table_;
  Row s_;
  Row i_;
};

template <typename Fn>
void parallel_for(int count, int jobs, Fn &&fn) {
  if (jobs <= 1 || count <= 1) {
    for (int x = 0; x < count; ++x) {
      fn(x);
    }
    return;
  }
  std::atomic<int> next{0};
  std::vector<std::thread> workers;
  std::exception_ptr error;
  std::mutex error_mu;
  const int nthreads = std::min(jobs, count);
  for (int w = 0; w < nthreads; ++w) {
    workers.emplace_back([&] {
      for (int x = next++; x < count; x = next++) {
        try {
          fn(x);
        } catch (...) {
          std::lock_guard<std::mutex> lock(error_mu);
          if (!error) {
            error = std::current_exception();
          }
        }
      }
    });
  }
  for (auto &t : workers) {
    t.join();
  }
  if (error) {
    std::rethrow_exception(error);
  }
}

} // namespace

CoefficientTable coefficient_table(int n, int c, int d, int jobs) {
  CoefficientTable table(n, c, d);
  const MultiPoly p = specialize_middle(*alpha(n), n, c, d);
  if (c + d == 0) {
    TableFiller(table).fill(p, 0);
    return table;
  }
  // Precompute the first-level differences so branches can run independently.
  std::vector<MultiPoly> diffs{p};
  for (int m = 1; m < n; ++m) {
    diffs.push_back(c > 0 ? forward_difference(diffs.back(), 0) : backward_difference(diffs.back(), 0));
  }
  parallel_for(n, jobs, [&](int m) {
    TableFiller filler(table);
    filler.descend(diffs[static_cast<std::size_t>(m)], 0, m);
  });
  return table;
}

VerificationReport reconstruct_expansion(const CoefficientTable &table) {
  const int n = table.n();
  const int c = table.c();
  const int d = table.d();
  const int vars = c + d;
  VerificationReport report;
  report.identity = "expansion";
  report.range = "n=" + std::to_string(n) + " c=" + std::to_string(c) + " d=" + std::to_string(d);

  // basis[v][m][e]: coefficient of x^e in the m-th basis polynomial of variable v.
  std::vector<std::vector<std::vector<Rational>>> basis(static_cast<std::size_t>(vars));
  for (int v = 0; v < vars; ++v) {
    for (int m = 0; m < n; ++m) {
      const long offset = v < c ? -(c + 1) : -n + d - 1 + m;
      const MultiPoly b = binomial_poly(1, 0, offset, m);
      std::vector<Rational> row(static_cast<std::size_t>(n), Rational(0));
      for (const auto &[e, coef] : b.terms()) {
        row[static_cast<std::size_t>(e[0])] = coef;
      }
      basis[static_cast<std::size_t>(v)].push_back(std::move(row));
    }
  }

  // Tensor over basis indices; variable v < c carries s_{c-v}.
  std::vector<Rational> tensor(table.size());
  Row s;
  Row i;
  for (std::size_t idx = 0; idx < table.size(); ++idx) {
    table.tuples(idx, s, i);
    Rational a(table.value(idx));
    if (sign_power(sum(s) + c) < 0) {
      a = -a;
    }
    std::size_t pos = 0;
    for (int v = 0; v < vars; ++v) {
      const int digit = v < c ? s[static_cast<std::size_t>(c - 1 - v)] - 1 : i[static_cast<std::size_t>(v - c)] - 1;
      pos = pos * static_cast<std::size_t>(n) + static_cast<std::size_t>(digit);
    }
    tensor[pos] = a;
  }

  // Basis change along each axis in turn.
  std::size_t stride = table.size();
  for (int v = 0; v < vars; ++v) {
    stride /= static_cast<std::size_t>(n);
    std::vector<Rational> out(tensor.size(), Rational(0));
    const auto &bv = basis[static_cast<std::size_t>(v)];
    for (std::size_t pos = 0; pos < tensor.size(); ++pos) {
      if (tensor[pos] == 0) {
        continue;
      }
      const std::size_t digit = (pos / stride) % static_cast<std::size_t>(n);
      const std::size_t base = pos - digit * stride;
      for (int e = 0; e < n; ++e) {
        const Rational &b = bv[digit][static_cast<std::size_t>(e)];
        if (b != 0) {
          out[base + static_cast<std::size_t>(e) * stride] += tensor[pos] * b;
        }
      }
    }
    tensor = std::move(out);
  }

  MultiPoly rebuilt(vars);
  Exponents e(static_cast<std::size_t>(vars));
  for (std::size_t pos = 0; pos < tensor.size(); ++pos) {
    std::size_t rest = pos;
    for (int v = vars - 1; v >= 0; --v) {
      e[static_cast<std::size_t>(v)] = static_cast<int>(rest % static_cast<std::size_t>(n));
      rest /= static_cast<std::size_t>(n);
    }
    rebuilt.add_term(e, tensor[pos]);
  }
  compare_polys(report, specialize_middle(*alpha(n), n, c, d), rebuilt);
  return report;
}

VerificationReport verify_theorem7(int n, int c, int d) {
  if (c < 0 || d < 0 || c + d > n) {
    throw std::invalid_argument("verify_theorem7: need c + d <= n");
  }
  VerificationReport report;
  report.identity = "theorem7";
  report.range = "n=" + std::to_string(n) + " c=" + std::to_string(c) + " d=" + std::to_string(d);
  const CoefficientTable table = coefficient_table(n, c, d);
  for (const Row &s : increasing_tuples(n, c)) {
    for (const Row &i : increasing_tuples(n, d)) {
      record(report, format_pair(s, i), count_trapezoids(n, s, i), table.at(s, i));
    }
  }
  return report;
}

VerificationReport check_cyclic(int n) {
  VerificationReport report;
  report.identity = "cyclic";
  report.range = "n=" + std::to_string(n);
  const MultiPoly &a = *alpha(n);
  std::vector<int> target(static_cast<std::size_t>(n));
  std::vector<int> sign(static_cast<std::size_t>(n), 1);
  std::vector<long> offset(static_cast<std::size_t>(n), 0);
  for (int v = 0; v < n; ++v) {
    target[static_cast<std::size_t>(v)] = (v + 1) % n;
  }
  offset[static_cast<std::size_t>(n - 1)] = -n;
  MultiPoly rotated = signed_permute_shift(a, target, sign, offset);
  if (sign_power(n - 1) < 0) {
    rotated = -rotated;
  }
  compare_polys(report, a, rotated);
  return report;
}

VerificationReport check_reflection_translation(int n, long z) {
  VerificationReport report;
  report.identity = "reflection_translation";
  report.range = "n=" + std::to_string(n) + " z=" + std::to_string(z);
  const MultiPoly &a = *alpha(n);
  std::vector<int> reversed(static_cast<std::size_t>(n));
  std::vector<int> identity(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) {
    reversed[static_cast<std::size_t>(v)] = n - 1 - v;
    identity[static_cast<std::size_t>(v)] = v;
  }
  const std::vector<int> negative(static_cast<std::size_t>(n), -1);
  const std::vector<int> positive(static_cast<std::size_t>(n), 1);
  const std::vector<long> zero(static_cast<std::size_t>(n), 0);
  const std::vector<long> shifted(static_cast<std::size_t>(n), z);
  compare_polys(report, a, signed_permute_shift(a, reversed, negative, zero));
  compare_polys(report, a, signed_permute_shift(a, identity, positive, shifted));
  return report;
}

VerificationReport check_circuit(int n, int c, int d, int t) {
  if (t < 0 || t > c || c + d > n) {
    throw std::invalid_argument("check_circuit: need 0 <= t <= c and c + d <= n");
  }
  VerificationReport report;
  report.identity = "circuit";
  report.range = "n=" + std::to_string(n) + " c=" + std::to_string(c) + " d=" + std::to_string(d) +
                 " t=" + std::to_string(t);
  const CoefficientTable lhs = coefficient_table(n, c, d);
  const CoefficientTable rhs = coefficient_table(n, c - t, d + t);
  for (const Row &s : increasing_tuples(n, c)) {
    for (const Row &i : increasing_tuples(n, d)) {
      const Row s_kept(s.begin(), s.begin() + (c - t));
      Row extended = i;
      extended.resize(static_cast<std::size_t>(d + t));
      Integer total = 0;
      // i_{d+l} runs over [s_{c+1-l}, n] for l = 1..t.
      auto rec = [&](auto &&self, int l, const Integer &weight, int parity) -> void {
        if (l > t) {
          Integer term = weight * rhs.at(s_kept, extended);
          total += (parity % 2 == 0) ? term : Integer(-term);
          return;
        }
        const int lower = s[static_cast<std::size_t>(c - l)];
        for (int x = lower; x <= n; ++x) {
          extended[static_cast<std::size_t>(d + l - 1)] = x;
          self(self, l + 1, weight * binomial(2 * n - c - d - lower, x - lower), parity + x + n);
        }
      };
      rec(rec, 1, Integer(1), 0);
      record(report, format_pair(s, i), lhs.at(s, i), total);
    }
  }
  return report;
}

VerificationReport check_system(int n, int d) {
  if (d < 1 || d > n) {
    throw std::invalid_argument("check_system: need 1 <= d <= n");
  }
  VerificationReport report;
  report.identity = "system";
  report.range = "n=" + std::to_string(n) + " d=" + std::to_string(d);
  const CoefficientTable table = coefficient_table(n, 0, d);
  const Row none;
  for (const Row &i : all_tuples(n, d)) {
    Integer total = 0;
    Row j(static_cast<std::size_t>(d));
    auto rec = [&](auto &&self, int l, const Integer &weight, int parity) -> void {
      if (l == d) {
        const Row reversed(j.rbegin(), j.rend());
        Integer term = weight * table.at(none, reversed);
        total += (parity % 2 == 0) ? term : Integer(-term);
        return;
      }
      const int lower = i[static_cast<std::size_t>(l)];
      for (int x = lower; x <= n; ++x) {
        j[static_cast<std::size_t>(l)] = x;
        self(self, l + 1, weight * binomial(2 * n - lower - d, x - lower), parity + x);
      }
    };
    rec(rec, 0, Integer(1), d * n);
    record(report, format_pair(none, i), table.at(none, i), total);
  }
  return report;
}

VerificationReport check_remark_symmetry(int n, int c, int d) {
  if (c < 0 || d < 0 || c + d > n) {
    throw std::invalid_argument("check_remark_symmetry: need c + d <= n");
  }
  VerificationReport report;
  report.identity = "remark_symmetry";
  report.range = "n=" + std::to_string(n) + " c=" + std::to_string(c) + " d=" + std::to_string(d);
  const CoefficientTable forward = coefficient_table(n, c, d);
  const CoefficientTable swapped = coefficient_table(n, d, c);
  for (const Row &s : increasing_tuples(n, c)) {
    for (const Row &i : increasing_tuples(n, d)) {
      record(report, format_pair(s, i), forward.at(s, i), swapped.at(i, s));
    }
  }
  return report;
}

Rational gamma_formula_value(const GammaSpec &spec) {
  if (auto v = spec.validate(); !v) {
    throw std::invalid_argument("gamma_formula_value: " + v.reason());
  }
  const int n = spec.n;
  const int c = static_cast<int>(spec.s.size());
  const int d = static_cast<int>(spec.i.size());
  MultiPoly p = *alpha(n);
  for (int l = 1; l <= c; ++l) {
    p = forward_difference(p, l - 1, spec.s[static_cast<std::size_t>(c - l)] - 1);
  }
  for (int l = n - d + 1; l <= n; ++l) {
    p = backward_difference(p, l - 1, spec.i[static_cast<std::size_t>(l - n + d - 1)] - 1);
  }
  std::vector<long> point(spec.k.begin(), spec.k.end());
  Rational value = evaluate(p, std::span<const long>(point));
  return sign_power(sum(spec.s) - c) < 0 ? Rational(-value) : value;
}

VerificationReport check_gamma_formula(const GammaSpec &spec) {
  VerificationReport report;
  report.identity = "gamma";
  std::ostringstream range;
  range << "n=" << spec.n << " k=(" << join(Row(spec.k.begin(), spec.k.end())) << ") " << format_pair(spec.s, spec.i);
  report.range = range.str();
  const Rational formula = gamma_formula_value(spec);
  const Integer brute = gamma_count(spec);
  ++report.cases;
  if (formula != Rational(brute)) {
    report.fail(report.range, to_decimal(brute), to_fraction_string(formula));
  }
  return report;
}

} // namespace asmlab
