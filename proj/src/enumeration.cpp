#include "asmlab/enumeration.hpp"

#include <climits>
#include <map>
#include <stdexcept>

namespace asmlab {

namespace {

// Calls visit(next) for every strictly increasing row of length row.size()-1
// interlacing with `row`, in lexicographic order.
template <typename Visit>
void for_each_next_row(const Row &row, Visit &&visit) {
  const std::size_t m = row.size() - 1;
  Row next(m);
  auto rec = [&](auto &&self, std::size_t t) -> void {
    if (t == m) {
      visit(next);
      return;
    }
    int lo = row[t];
    if (t > 0 && next[t - 1] + 1 > lo) {
      lo = next[t - 1] + 1;
    }
    for (int v = lo; v <= row[t + 1]; ++v) {
      next[t] = v;
      self(self, t + 1);
    }
  };
  rec(rec, 0);
}

class TriangleCounter {
public:
  Integer count(const Row &row) {
    if (row.size() <= 1) {
      return 1;
    }
    if (auto it = memo_.find(row); it != memo_.end()) {
      return it->second;
    }
    Integer total = 0;
    for_each_next_row(row, [&](const Row &next) { total += count(next); });
    memo_.emplace(row, total);
    return total;
  }

private:
  std::map<Row, Integer> memo_;
};

// Chains of interlacing rows from a fixed row up to a fixed target row.
class ChainCounter {
public:
  explicit ChainCounter(Row target) : target_(std::move(target)) {}

  Integer count(const Row &row) {
    if (row.size() == target_.size()) {
      return row == target_ ? 1 : 0;
    }
    if (auto it = memo_.find(row); it != memo_.end()) {
      return it->second;
    }
    Integer total = 0;
    for_each_next_row(row, [&](const Row &next) {
      if (reachable(next)) {
        total += count(next);
      }
    });
    memo_.emplace(row, total);
    return total;
  }

private:
  // Entries at a fixed position weakly increase going up, and an entry is at
  // most the entry `gap` positions to its right in any row below.
  bool reachable(const Row &row) const {
    const std::size_t gap = row.size() - target_.size();
    for (std::size_t t = 0; t < target_.size(); ++t) {
      if (target_[t] < row[t] || target_[t] > row[t + gap]) {
        return false;
      }
    }
    return true;
  }

  Row target_;
  std::map<Row, Integer> memo_;
};

void require_strict_subset(const Row &tuple, int n, const char *name) {
  for (std::size_t t = 0; t < tuple.size(); ++t) {
    if (tuple[t] < 1 || tuple[t] > n) {
      throw std::invalid_argument(std::string(name) + " entry outside [1, n]");
    }
    if (t > 0 && tuple[t - 1] >= tuple[t]) {
      throw std::invalid_argument(std::string(name) + " must be strictly increasing");
    }
  }
}

} // namespace

Verdict BottomRowSpec::validate() const {
  return validate_rows({entries}, weak_bottom);
}

Integer count_triangles(const BottomRowSpec &spec) {
  if (auto v = spec.validate(); !v) {
    throw std::invalid_argument("count_triangles: " + v.reason());
  }
  TriangleCounter counter;
  return counter.count(spec.entries);
}

void for_each_triangle(const BottomRowSpec &spec, const std::function<void(const MonotoneTriangle &)> &visit) {
  if (auto v = spec.validate(); !v) {
    throw std::invalid_argument("for_each_triangle: " + v.reason());
  }
  if (spec.entries.empty()) {
    visit(MonotoneTriangle{});
    return;
  }
  std::vector<Row> rows{spec.entries};
  auto rec = [&](auto &&self) -> void {
    if (rows.back().size() == 1) {
      visit(MonotoneTriangle(rows));
      return;
    }
    const Row below = rows.back();
    for_each_next_row(below, [&](const Row &next) {
      rows.push_back(next);
      self(self);
      rows.pop_back();
    });
  };
  rec(rec);
}

std::vector<MonotoneTriangle> enumerate_triangles(const BottomRowSpec &spec) {
  std::vector<MonotoneTriangle> out;
  for_each_triangle(spec, [&](const MonotoneTriangle &t) { out.push_back(t); });
  return out;
}

void for_each_trapezoid(const Row &bottom, int top_length,
                        const std::function<void(const MonotoneTrapezoid &)> &visit) {
  if (auto v = validate_rows({bottom}); !v) {
    throw std::invalid_argument("for_each_trapezoid: " + v.reason());
  }
  if (top_length < 1 || top_length > static_cast<int>(bottom.size())) {
    throw std::invalid_argument("for_each_trapezoid: top length outside [1, bottom length]");
  }
  std::vector<Row> rows{bottom};
  auto rec = [&](auto &&self) -> void {
    if (static_cast<int>(rows.back().size()) == top_length) {
      visit(MonotoneTrapezoid(rows));
      return;
    }
    const Row below = rows.back();
    for_each_next_row(below, [&](const Row &next) {
      rows.push_back(next);
      self(self);
      rows.pop_back();
    });
  };
  rec(rec);
}

Row complement_row(int n, const Row &removed) {
  std::vector<bool> gone(static_cast<std::size_t>(n) + 1, false);
  for (int x : removed) {
    if (x >= 1 && x <= n) {
      gone[static_cast<std::size_t>(x)] = true;
    }
  }
  Row out;
  for (int x = 1; x <= n; ++x) {
    if (!gone[static_cast<std::size_t>(x)]) {
      out.push_back(x);
    }
  }
  return out;
}

Integer count_trapezoids(int n, const Row &removed, const Row &top) {
  if (n < 0) {
    throw std::invalid_argument("count_trapezoids: negative n");
  }
  require_strict_subset(removed, n, "removed");
  require_strict_subset(top, n, "top");
  const int c = static_cast<int>(removed.size());
  const int d = static_cast<int>(top.size());
  if (d > n - c) {
    throw std::invalid_argument("count_trapezoids: top row longer than bottom row");
  }
  const Row bottom = complement_row(n, removed);
  if (d == 0) {
    TriangleCounter counter;
    return counter.count(bottom);
  }
  ChainCounter counter(top);
  return counter.count(bottom);
}

RefinedCounts refined_counts(int n) {
  if (n < 1) {
    throw std::invalid_argument("refined_counts: n must be positive");
  }
  RefinedCounts out;
  out.n = n;
  out.total = 0;
  out.top_column.assign(static_cast<std::size_t>(n), Integer(0));
  out.bottom_top.assign(static_cast<std::size_t>(n), std::vector<Integer>(static_cast<std::size_t>(n), Integer(0)));
  Row bottom(static_cast<std::size_t>(n));
  for (int x = 1; x <= n; ++x) {
    bottom[static_cast<std::size_t>(x - 1)] = x;
  }
  for_each_triangle({bottom, false}, [&](const MonotoneTriangle &t) {
    const Asm m = triangle_to_asm(t);
    int top_col = 0;
    int bottom_col = 0;
    for (int j = 1; j <= n; ++j) {
      if (m.at(1, j) == 1) {
        top_col = j;
      }
      if (m.at(n, j) == 1) {
        bottom_col = j;
      }
    }
    out.total += 1;
    out.top_column[static_cast<std::size_t>(top_col - 1)] += 1;
    out.bottom_top[static_cast<std::size_t>(bottom_col - 1)][static_cast<std::size_t>(top_col - 1)] += 1;
  });
  return out;
}

// ---------------------------------------------------------------------------
// Partial monotone triangles with anchors.

namespace {

enum class CellKind { Missing, Free, Bottom, AnchorNE, AnchorSE };

struct Cell {
  CellKind kind = CellKind::Free;
  int value = 0;
  bool ne_touched = false;
  bool se_touched = false;
};

constexpr int kAbsent = INT_MIN;

class GammaLayout {
public:
  explicit GammaLayout(const GammaSpec &spec) : n_(spec.n) {
    cells_.assign(static_cast<std::size_t>(n_ * n_), Cell{});
    const int c = static_cast<int>(spec.s.size());
    const int d = static_cast<int>(spec.i.size());
    for (int l = 1; l <= c; ++l) {
      const int removed = spec.s[static_cast<std::size_t>(c - l)] - 1;
      for (int r = 1; r <= removed + 1; ++r) {
        Cell &cell = at(r, l + r - 1);
        cell.ne_touched = true;
        cell.kind = r <= removed ? CellKind::Missing : CellKind::AnchorNE;
        cell.value = spec.k[static_cast<std::size_t>(l - 1)];
      }
    }
    for (int l = n_ - d + 1; l <= n_; ++l) {
      const int removed = spec.i[static_cast<std::size_t>(l - n_ + d - 1)] - 1;
      for (int r = 1; r <= removed + 1; ++r) {
        Cell &cell = at(r, l);
        if (cell.ne_touched) {
          collide_ = true;
        }
        cell.se_touched = true;
        cell.kind = r <= removed ? CellKind::Missing : CellKind::AnchorSE;
        cell.value = spec.k[static_cast<std::size_t>(l - 1)];
      }
    }
    for (int j = c + 1; j <= n_ - d; ++j) {
      Cell &cell = at(1, j);
      cell.kind = CellKind::Bottom;
      cell.value = spec.k[static_cast<std::size_t>(j - 1)];
    }
  }

  bool collide() const { return collide_; }
  int n() const { return n_; }

  Cell &at(int r, int j) { return cells_[static_cast<std::size_t>((r - 1) * n_ + (j - 1))]; }
  const Cell &at(int r, int j) const { return cells_[static_cast<std::size_t>((r - 1) * n_ + (j - 1))]; }

  // Relation between (r, j-1) and (r, j): left < right, or <= between two
  // bottom-row entries. Returns false when the relation is dropped.
  bool horizontal(int r, int j, bool &weak) const {
    const Cell &left = at(r, j - 1);
    const Cell &right = at(r, j);
    weak = left.kind == CellKind::Bottom && right.kind == CellKind::Bottom;
    if (left.kind == CellKind::Missing || right.kind == CellKind::Missing) {
      return false;
    }
    return left.kind != CellKind::AnchorNE && right.kind != CellKind::AnchorSE;
  }
  // (r-1, j-1) <= (r, j).
  bool from_southwest(int r, int j) const {
    const Cell &lower = at(r - 1, j - 1);
    const Cell &upper = at(r, j);
    if (lower.kind == CellKind::Missing || upper.kind == CellKind::Missing) {
      return false;
    }
    return upper.kind != CellKind::AnchorSE;
  }
  // (r, j) <= (r-1, j).
  bool to_southeast(int r, int j) const {
    const Cell &lower = at(r - 1, j);
    const Cell &upper = at(r, j);
    if (lower.kind == CellKind::Missing || upper.kind == CellKind::Missing) {
      return false;
    }
    return upper.kind != CellKind::AnchorNE;
  }

private:
  int n_;
  bool collide_ = false;
  std::vector<Cell> cells_;
};

class GammaCounter {
public:
  explicit GammaCounter(const GammaLayout &layout) : layout_(layout) {}

  Integer count() {
    const int n = layout_.n();
    std::vector<int> bottom(static_cast<std::size_t>(n), kAbsent);
    for (int j = 1; j <= n; ++j) {
      const Cell &cell = layout_.at(1, j);
      if (cell.kind != CellKind::Missing) {
        bottom[static_cast<std::size_t>(j - 1)] = cell.value;
      }
    }
    for (int j = 2; j <= n; ++j) {
      bool weak = false;
      if (layout_.horizontal(1, j, weak)) {
        const int a = bottom[static_cast<std::size_t>(j - 2)];
        const int b = bottom[static_cast<std::size_t>(j - 1)];
        if (weak ? a > b : a >= b) {
          return 0;
        }
      }
    }
    return count_from(2, bottom);
  }

private:
  // `below` holds row r-1 at positions r-1..n (index j-1), kAbsent if missing.
  Integer count_from(int r, const std::vector<int> &below) {
    const int n = layout_.n();
    if (r > n) {
      return 1;
    }
    auto key = std::make_pair(r, below);
    if (auto it = memo_.find(key); it != memo_.end()) {
      return it->second;
    }
    std::vector<int> row(static_cast<std::size_t>(n), kAbsent);
    Integer total = 0;
    auto rec = [&](auto &&self, int j) -> void {
      if (j > n) {
        total += count_from(r + 1, row);
        return;
      }
      const Cell &cell = layout_.at(r, j);
      if (cell.kind == CellKind::Missing) {
        row[static_cast<std::size_t>(j - 1)] = kAbsent;
        self(self, j + 1);
        return;
      }
      int lo = cell.value;
      int hi = cell.value;
      if (cell.kind == CellKind::Free) {
        const int sw = below[static_cast<std::size_t>(j - 2)];
        const int se = below[static_cast<std::size_t>(j - 1)];
        if (sw == kAbsent || se == kAbsent) {
          throw std::logic_error("gamma_count: free entry without both lower neighbours");
        }
        lo = sw;
        hi = se;
      }
      for (int v = lo; v <= hi; ++v) {
        if (admissible(r, j, v, below, row)) {
          row[static_cast<std::size_t>(j - 1)] = v;
          self(self, j + 1);
        }
      }
      row[static_cast<std::size_t>(j - 1)] = kAbsent;
    };
    rec(rec, r);
    memo_.emplace(std::move(key), total);
    return total;
  }

  bool admissible(int r, int j, int v, const std::vector<int> &below, const std::vector<int> &row) const {
    if (j > r) {
      bool weak = false;
      if (layout_.horizontal(r, j, weak)) {
        const int left = row[static_cast<std::size_t>(j - 2)];
        if (weak ? left > v : left >= v) {
          return false;
        }
      }
    }
    if (layout_.from_southwest(r, j) && below[static_cast<std::size_t>(j - 2)] > v) {
      return false;
    }
    if (layout_.to_southeast(r, j) && v > below[static_cast<std::size_t>(j - 1)]) {
      return false;
    }
    return true;
  }

  const GammaLayout &layout_;
  std::map<std::pair<int, std::vector<int>>, Integer> memo_;
};

bool weakly_increasing_in_range(const Row &t, int n) {
  for (std::size_t x = 0; x < t.size(); ++x) {
    if (t[x] < 1 || t[x] > n || (x > 0 && t[x - 1] > t[x])) {
      return false;
    }
  }
  return true;
}

} // namespace

Verdict GammaSpec::validate() const {
  const int c = static_cast<int>(s.size());
  const int d = static_cast<int>(i.size());
  if (n < 1) {
    return Verdict::fail("n must be positive");
  }
  if (static_cast<int>(k.size()) != n) {
    return Verdict::fail("k must have length n");
  }
  if (c + d > n) {
    return Verdict::fail("c + d exceeds n");
  }
  if (!weakly_increasing_in_range(s, n)) {
    return Verdict::fail("s must be weakly increasing in [1, n]");
  }
  if (!weakly_increasing_in_range(i, n)) {
    return Verdict::fail("i must be weakly increasing in [1, n]");
  }
  for (int l = 1; l <= c; ++l) {
    if (s[static_cast<std::size_t>(c - l)] > n - l + 1) {
      return Verdict::fail("NE anchor of diagonal " + std::to_string(l) + " lies beyond the diagonal");
    }
  }
  for (int l = n - d + 1; l <= n; ++l) {
    if (i[static_cast<std::size_t>(l - n + d - 1)] > l) {
      return Verdict::fail("SE anchor of diagonal " + std::to_string(l) + " lies beyond the diagonal");
    }
  }
  return Verdict::pass();
}

bool GammaSpec::regions_collide() const {
  if (auto v = validate(); !v) {
    throw std::invalid_argument("gamma spec: " + v.reason());
  }
  return GammaLayout(*this).collide();
}

Integer gamma_count(const GammaSpec &spec) {
  if (auto v = spec.validate(); !v) {
    throw std::invalid_argument("gamma_count: " + v.reason());
  }
  GammaLayout layout(spec);
  if (layout.collide()) {
    return 0;
  }
  GammaCounter counter(layout);
  return counter.count();
}

} // namespace asmlab
