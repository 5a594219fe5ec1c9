// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include "asmlab/alpha.hpp"
#include "asmlab/closed_forms.hpp"
#include "asmlab/enumeration.hpp"
#include "asmlab/harness.hpp"
#include "generators.hpp"

using namespace asmlab;

namespace {

// Accumulates the reports of one criterion.
struct Tally {
  std::size_t cases = 0;
  std::vector<std::string> failures;

  void add(const VerificationReport &r) {
    cases += r.cases;
    if (!r.passed()) {
      const auto &c = r.counterexamples.front();
      failures.push_back(r.identity + " " + r.range + " at " + c.input + ": expected " + c.expected + ", got " +
                         c.actual);
    }
  }

  void expect(bool ok, const std::string &what) {
    ++cases;
    if (!ok) {
      failures.push_back(what);
    }
  }
};

bool criterion(int id, const std::string &name, double limit_seconds, const std::function<void(Tally &)> &body) {
  Tally tally;
  const auto start = std::chrono::steady_clock::now();
  try {
    body(tally);
  } catch (const std::exception &e) {
    tally.failures.push_back(std::string("exception: ") + e.what());
  }
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (limit_seconds > 0 && seconds > limit_seconds) {
    tally.failures.push_back("took " + std::to_string(seconds) + " s, limit " + std::to_string(limit_seconds) + " s");
  }
  const bool ok = tally.failures.empty();
  std::cout << (ok ? "PASS" : "FAIL") << " [" << id << "] " << name << " (" << tally.cases << " cases, " << seconds
            << " s)\n";
  for (std::size_t x = 0; x < tally.failures.size() && x < 5; ++x) {
    std::cout << "    " << tally.failures[x] << '\n';
  }
  return ok;
}

} // namespace

int main() {
  std::cout.setf(std::ios::fixed);
  std::cout.precision(2);
  bool all = true;

  all &= criterion(1, "totals: product formula and brute force, n = 1..7", 60, [](Tally &t) {
    const std::vector<long> listed{1, 2, 7, 42, 429, 7436, 218348};
    for (int n = 1; n <= 7; ++n) {
      const Integer formula = asm_total(n);
      const Integer brute = count_triangles({gen::identity_row(n), false});
      const Integer expected = listed[static_cast<std::size_t>(n - 1)];
      t.expect(formula == expected, "asm_total(" + std::to_string(n) + ") = " + to_decimal(formula));
      t.expect(brute == expected, "count_triangles(1.." + std::to_string(n) + ") = " + to_decimal(brute));
    }
  });

  all &= criterion(2, "refined counts A_{n,k}: brute force n <= 6, symmetry n <= 10", 0, [](Tally &t) {
    for (int n = 1; n <= 6; ++n) {
      const RefinedCounts counts = refined_counts(n);
      for (int k = 1; k <= n; ++k) {
        t.expect(counts.top_column[static_cast<std::size_t>(k - 1)] == a_nk(n, k),
                 "A_{" + std::to_string(n) + "," + std::to_string(k) + "}");
      }
    }
    for (int n = 1; n <= 10; ++n) {
      for (int k = 1; k <= n; ++k) {
        t.expect(a_nk(n, k) == a_nk(n, n + 1 - k), "symmetry n=" + std::to_string(n) + " k=" + std::to_string(k));
      }
    }
  });

  all &= criterion(3, "coefficients count trapezoids: n <= 5 all (c,d), n = 6 with c+d <= 3", 900, [](Tally &t) {
    for (int n = 1; n <= 6; ++n) {
      for (int c = 0; c <= n; ++c) {
        for (int d = 0; c + d <= n; ++d) {
          if (n == 6 && c + d > 3) {
            continue;
          }
          t.add(verify_theorem7(n, c, d));
        }
      }
    }
  });

  all &= criterion(4, "binomial-basis expansion rebuilds alpha, n <= 5 all (c,d)", 0, [](Tally &t) {
    for (int n = 1; n <= 5; ++n) {
      for (int c = 0; c <= n; ++c) {
        for (int d = 0; c + d <= n; ++d) {
          t.add(reconstruct_expansion(coefficient_table(n, c, d)));
        }
      }
    }
  });

  all &= criterion(5, "operator product: exactly one variant equals the recursion for n <= 5", 0, [](Tally &t) {
    int agreeing = 0;
    for (auto v : all_operator_variants()) {
      bool ok = true;
      for (int n = 1; n <= 5; ++n) {
        ok = check_operator_variant(n, v).passed() && ok;
      }
      agreeing += ok ? 1 : 0;
      t.expect(ok == (v == kProductionOperatorVariant), "variant " + to_string(v));
    }
    t.expect(agreeing == 1, std::to_string(agreeing) + " variants agree");
    const std::vector<long> point{1, 2};
    const Rational printed = evaluate(alpha_via_operator(2, OperatorVariant::Printed), std::span<const long>(point));
    t.expect(printed == 0, "printed variant at (1,2) gives " + to_fraction_string(printed));
    t.expect(evaluate(*alpha(2), std::span<const long>(point)) == 2, "alpha(2;1,2) = 2");
  });

  all &= criterion(6, "doubly refined B_{n,i,j}: brute force n <= 6, first row n <= 8", 0, [](Tally &t) {
    for (int n = 1; n <= 6; ++n) {
      t.add(check_refined(n));
    }
    for (int n = 2; n <= 8; ++n) {
      t.add(check_first_row_b(n));
    }
  });

  all &= criterion(7, "A_{n,i,j}: brute force i < j n <= 7, extraction n <= 6, direct form", 0, [](Tally &t) {
    for (int n = 2; n <= 6; ++n) {
      t.add(check_headline(n));
    }
    for (int i = 1; i <= 7; ++i) {
      for (int j = i + 1; j <= 7; ++j) {
        t.expect(a_nij(7, i, j) == count_triangles({complement_row(7, {i, j}), false}),
                 "A_{7," + std::to_string(i) + "," + std::to_string(j) + "}");
      }
    }
    for (int n = 2; n <= 7; ++n) {
      t.add(check_anij_forms(n));
    }
  });

  all &= criterion(8, "identity suite", 0, [](Tally &t) {
    for (int n = 1; n <= 6; ++n) {
      t.add(check_cyclic(n));
      for (long z : {-3L, 1L, 5L}) {
        t.add(check_reflection_translation(n, z));
      }
      for (int d = 1; d <= std::min(n, 2); ++d) {
        t.add(check_system(n, d));
      }
      if (n >= 3) {
        t.add(check_near_symmetry(n));
      }
      if (n >= 2) {
        t.add(check_relation(n));
      }
    }
    for (int n = 1; n <= 5; ++n) {
      for (int c = 0; c <= n; ++c) {
        for (int d = 0; c + d <= n; ++d) {
          if (c + d <= 3) {
            for (int s = 0; s <= c; ++s) {
              t.add(check_circuit(n, c, d, s));
            }
          }
          t.add(check_remark_symmetry(n, c, d));
        }
      }
    }
  });

  all &= criterion(9, "symmetry maps and diagonal counts, complete triangles n <= 5", 0, [](Tally &t) {
    for (int n = 1; n <= 5; ++n) {
      t.add(check_symmetry_maps(n));
    }
  });

  all &= criterion(10, "partial triangles: 200 random specs n <= 4, special point n <= 5", 0, [](Tally &t) {
    for (int trial = 0; trial < 200; ++trial) {
      t.add(check_gamma_formula(gen::gamma_spec(4)));
    }
    for (int n = 1; n <= 5; ++n) {
      t.add(check_gamma_bridge(n));
    }
  });

  std::cout << (all ? "ALL PASS" : "SOME CRITERIA FAILED") << '\n';
  return all ? 0 : 1;
}
