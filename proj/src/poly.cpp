#include "asmlab/poly.hpp"

#include <algorithm>
#include <deque>
#include <mutex>
#include <stdexcept>
#include <string>

namespace asmlab {

namespace {

void require_var(const MultiPoly &p, int var, const char *op) {
  if (var < 0 || var >= p.arity()) {
    throw std::out_of_range(std::string(op) + ": variable " + std::to_string(var) + " out of range for arity " +
                            std::to_string(p.arity()));
  }
}

// Row e holds the coefficients of (x + h)^e for e <= max_e.
std::vector<std::vector<Rational>> shifted_powers(int max_e, long h) {
  std::vector<std::vector<Rational>> rows(static_cast<std::size_t>(max_e) + 1);
  for (int e = 0; e <= max_e; ++e) {
    auto &row = rows[static_cast<std::size_t>(e)];
    row.resize(static_cast<std::size_t>(e) + 1);
    Integer hp = 1;
    for (int j = e; j >= 0; --j) {
      row[static_cast<std::size_t>(j)] = Rational(binomial(e, j) * hp);
      hp *= h;
    }
  }
  return rows;
}

// Coefficients of Q_e with Q_e(x+1) - Q_e(x) = x^e and Q_e(0) = 0, via
// Q_e = (x^{e+1} - sum_{j<e} C(e+1, j) Q_j) / (e+1).
const std::vector<Rational> &antidifference_of_power(int e) {
  static std::mutex mu;
  static std::deque<std::vector<Rational>> table;  // stable references
  std::lock_guard<std::mutex> lock(mu);
  while (static_cast<int>(table.size()) <= e) {
    const int m = static_cast<int>(table.size());
    std::vector<Rational> q(static_cast<std::size_t>(m) + 2, Rational(0));
    q[static_cast<std::size_t>(m) + 1] = 1;
    for (int j = 0; j < m; ++j) {
      const Rational c(binomial(m + 1, j));
      const auto &qj = table[static_cast<std::size_t>(j)];
      for (std::size_t t = 0; t < qj.size(); ++t) {
        q[t] -= c * qj[t];
      }
    }
    for (auto &v : q) {
      v /= (m + 1);
    }
    table.push_back(std::move(q));
  }
  return table[static_cast<std::size_t>(e)];
}

} // namespace

MultiPoly MultiPoly::constant(int arity, const Rational &c) {
  MultiPoly p(arity);
  p.add_term(Exponents(static_cast<std::size_t>(arity), 0), c);
  return p;
}

MultiPoly MultiPoly::variable(int arity, int var) {
  MultiPoly p(arity);
  require_var(p, var, "variable");
  Exponents e(static_cast<std::size_t>(arity), 0);
  e[static_cast<std::size_t>(var)] = 1;
  p.add_term(e, 1);
  return p;
}

Rational MultiPoly::coefficient(const Exponents &e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

void MultiPoly::add_term(const Exponents &e, const Rational &c) {
  if (static_cast<int>(e.size()) != arity_) {
    throw std::invalid_argument("add_term: exponent vector length differs from arity");
  }
  if (c == 0) {
    return;
  }
  // Callers may pass fractions built from a numerator and denominator.
  Rational v = c;
  v.canonicalize();
  auto [it, inserted] = terms_.try_emplace(e, v);
  if (!inserted) {
    it->second += v;
    if (it->second == 0) {
      terms_.erase(it);
    }
  }
}

int MultiPoly::degree_in(int var) const {
  require_var(*this, var, "degree_in");
  int d = 0;
  for (const auto &[e, c] : terms_) {
    d = std::max(d, e[static_cast<std::size_t>(var)]);
  }
  return d;
}

int MultiPoly::max_degree() const {
  int d = 0;
  for (const auto &[e, c] : terms_) {
    for (int x : e) {
      d = std::max(d, x);
    }
  }
  return d;
}

void MultiPoly::require_same_arity(const MultiPoly &o, const char *op) const {
  if (arity_ != o.arity_) {
    throw std::invalid_argument(std::string(op) + ": arity mismatch (" + std::to_string(arity_) + " vs " +
                                std::to_string(o.arity_) + ")");
  }
}

MultiPoly &MultiPoly::operator+=(const MultiPoly &o) {
  require_same_arity(o, "add");
  for (const auto &[e, c] : o.terms_) {
    add_term(e, c);
  }
  return *this;
}

MultiPoly &MultiPoly::operator-=(const MultiPoly &o) {
  require_same_arity(o, "subtract");
  for (const auto &[e, c] : o.terms_) {
    add_term(e, -c);
  }
  return *this;
}

MultiPoly &MultiPoly::operator*=(const Rational &c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto &[e, v] : terms_) {
    v *= c;
  }
  return *this;
}

MultiPoly operator*(const MultiPoly &a, const MultiPoly &b) {
  a.require_same_arity(b, "multiply");
  MultiPoly out(a.arity_);
  Exponents e(static_cast<std::size_t>(a.arity_));
  for (const auto &[ea, ca] : a.terms_) {
    for (const auto &[eb, cb] : b.terms_) {
      for (std::size_t v = 0; v < e.size(); ++v) {
        e[v] = ea[v] + eb[v];
      }
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly out = *this;
  for (auto &[e, v] : out.terms_) {
    v = -v;
  }
  return out;
}

MultiPoly shift(const MultiPoly &p, int var, long h) {
  require_var(p, var, "shift");
  if (h == 0 || p.is_zero()) {
    return p;
  }
  const auto powers = shifted_powers(p.degree_in(var), h);
  MultiPoly out(p.arity());
  const auto v = static_cast<std::size_t>(var);
  for (const auto &[e, c] : p.terms()) {
    Exponents f = e;
    const auto &row = powers[static_cast<std::size_t>(e[v])];
    for (std::size_t j = 0; j < row.size(); ++j) {
      f[v] = static_cast<int>(j);
      out.add_term(f, c * row[j]);
    }
  }
  return out;
}

MultiPoly forward_difference(const MultiPoly &p, int var) { return shift(p, var, 1) - p; }

MultiPoly backward_difference(const MultiPoly &p, int var) { return p - shift(p, var, -1); }

MultiPoly forward_difference(const MultiPoly &p, int var, int times) {
  MultiPoly out = p;
  for (int t = 0; t < times && !out.is_zero(); ++t) {
    out = forward_difference(out, var);
  }
  return out;
}

MultiPoly backward_difference(const MultiPoly &p, int var, int times) {
  MultiPoly out = p;
  for (int t = 0; t < times && !out.is_zero(); ++t) {
    out = backward_difference(out, var);
  }
  return out;
}

MultiPoly antidifference(const MultiPoly &p, int var) {
  require_var(p, var, "antidifference");
  MultiPoly out(p.arity());
  const auto v = static_cast<std::size_t>(var);
  for (const auto &[e, c] : p.terms()) {
    const auto &q = antidifference_of_power(e[v]);
    Exponents f = e;
    for (std::size_t j = 0; j < q.size(); ++j) {
      f[v] = static_cast<int>(j);
      out.add_term(f, c * q[j]);
    }
  }
  return out;
}

MultiPoly substitute_variable(const MultiPoly &p, int from, int into, long h) {
  require_var(p, from, "substitute_variable");
  require_var(p, into, "substitute_variable");
  if (from == into) {
    throw std::invalid_argument("substitute_variable: source and target coincide");
  }
  const MultiPoly shifted = shift(p, from, h);
  MultiPoly out(p.arity());
  const auto f = static_cast<std::size_t>(from);
  const auto t = static_cast<std::size_t>(into);
  for (const auto &[e, c] : shifted.terms()) {
    Exponents g = e;
    g[t] += g[f];
    g[f] = 0;
    out.add_term(g, c);
  }
  return out;
}

MultiPoly definite_sum(const MultiPoly &p, int var, int lower_var, int upper_var) {
  const MultiPoly anti = antidifference(p, var);
  return substitute_variable(anti, var, upper_var, 1) - substitute_variable(anti, var, lower_var, 0);
}

MultiPoly relabel(const MultiPoly &p, std::span<const int> target, std::span<const int> sign, int new_arity) {
  if (static_cast<int>(target.size()) != p.arity() || sign.size() != target.size()) {
    throw std::invalid_argument("relabel: map size differs from arity");
  }
  for (int t : target) {
    if (t < 0 || t >= new_arity) {
      throw std::out_of_range("relabel: target variable out of range");
    }
  }
  MultiPoly out(new_arity);
  Exponents g(static_cast<std::size_t>(new_arity));
  for (const auto &[e, c] : p.terms()) {
    std::fill(g.begin(), g.end(), 0);
    int parity = 0;
    for (std::size_t v = 0; v < e.size(); ++v) {
      g[static_cast<std::size_t>(target[v])] += e[v];
      if (sign[v] < 0) {
        parity += e[v];
      }
    }
    out.add_term(g, parity % 2 == 0 ? c : Rational(-c));
  }
  return out;
}

MultiPoly signed_permute_shift(const MultiPoly &p, std::span<const int> target, std::span<const int> sign,
                               std::span<const long> offset) {
  if (offset.size() != target.size()) {
    throw std::invalid_argument("signed_permute_shift: offset size differs from arity");
  }
  std::vector<bool> seen(target.size(), false);
  for (int t : target) {
    if (t < 0 || t >= static_cast<int>(target.size()) || seen[static_cast<std::size_t>(t)]) {
      throw std::invalid_argument("signed_permute_shift: target is not a permutation");
    }
    seen[static_cast<std::size_t>(t)] = true;
  }
  MultiPoly out = relabel(p, target, sign, p.arity());
  // sign * y + offset = sign * (y + sign * offset) for sign = +-1.
  for (std::size_t v = 0; v < target.size(); ++v) {
    out = shift(out, target[v], sign[v] * offset[v]);
  }
  return out;
}

Rational evaluate(const MultiPoly &p, std::span<const Rational> point) {
  if (static_cast<int>(point.size()) != p.arity()) {
    throw std::invalid_argument("evaluate: point dimension differs from arity");
  }
  const int deg = p.max_degree();
  std::vector<std::vector<Rational>> pw(point.size());
  for (std::size_t v = 0; v < point.size(); ++v) {
    pw[v].resize(static_cast<std::size_t>(deg) + 1);
    pw[v][0] = 1;
    for (int e = 1; e <= deg; ++e) {
      pw[v][static_cast<std::size_t>(e)] = pw[v][static_cast<std::size_t>(e - 1)] * point[v];
    }
  }
  Rational acc = 0;
  for (const auto &[e, c] : p.terms()) {
    Rational t = c;
    for (std::size_t v = 0; v < e.size(); ++v) {
      if (e[v] != 0) {
        t *= pw[v][static_cast<std::size_t>(e[v])];
      }
    }
    acc += t;
  }
  return acc;
}

Rational evaluate(const MultiPoly &p, std::span<const long> point) {
  std::vector<Rational> q;
  q.reserve(point.size());
  for (long x : point) {
    q.emplace_back(x);
  }
  return evaluate(p, std::span<const Rational>(q));
}

MultiPoly specialize(const MultiPoly &p, std::span<const std::optional<long>> assignment) {
  if (static_cast<int>(assignment.size()) != p.arity()) {
    throw std::invalid_argument("specialize: assignment size differs from arity");
  }
  int remaining = 0;
  for (const auto &a : assignment) {
    remaining += a ? 0 : 1;
  }
  const int deg = p.max_degree();
  std::vector<std::vector<Integer>> pw(assignment.size());
  for (std::size_t v = 0; v < assignment.size(); ++v) {
    if (!assignment[v]) {
      continue;
    }
    pw[v].resize(static_cast<std::size_t>(deg) + 1);
    pw[v][0] = 1;
    for (int e = 1; e <= deg; ++e) {
      pw[v][static_cast<std::size_t>(e)] = pw[v][static_cast<std::size_t>(e - 1)] * *assignment[v];
    }
  }
  MultiPoly out(remaining);
  Exponents g(static_cast<std::size_t>(remaining));
  for (const auto &[e, c] : p.terms()) {
    Rational t = c;
    std::size_t w = 0;
    for (std::size_t v = 0; v < e.size(); ++v) {
      if (assignment[v]) {
        t *= pw[v][static_cast<std::size_t>(e[v])];
      } else {
        g[w++] = e[v];
      }
    }
    out.add_term(g, t);
  }
  return out;
}

MultiPoly binomial_poly(int arity, int var, long offset, int m) {
  MultiPoly out = MultiPoly::constant(arity, 1);
  if (m < 0) {
    return MultiPoly(arity);
  }
  const MultiPoly x = MultiPoly::variable(arity, var);
  for (int j = 0; j < m; ++j) {
    out = out * (x + MultiPoly::constant(arity, Rational(offset - j)));
  }
  return out * Rational(Integer(1), factorial(m));
}

} // namespace asmlab
