#include "cli.hpp"

#include <algorithm>
#include <atomic>
#include <fstream>
#include <functional>
#include <iostream>
#include <iterator>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <thread>

#include <CLI11.hpp>

#include "asmlab/closed_forms.hpp"
#include "asmlab/enumeration.hpp"
#include "asmlab/harness.hpp"
#include "asmlab/json_io.hpp"

namespace asmlab::cli {

namespace {

class UsageError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

Row parse_list(const std::string &text, const char *what) {
  Row out;
  if (text.empty()) {
    return out;
  }
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(item, &used);
    } catch (const std::exception &) {
      used = 0;
    }
    if (used == 0 || used != item.size()) {
      throw UsageError(std::string(what) + ": expected a comma-separated list of integers, got \"" + text + "\"");
    }
    out.push_back(v);
  }
  return out;
}

std::string read_input(const std::string &path) {
  if (path == "-") {
    return std::string(std::istreambuf_iterator<char>(std::cin), {});
  }
  std::ifstream in(path);
  if (!in) {
    throw UsageError("cannot open " + path);
  }
  return std::string(std::istreambuf_iterator<char>(in), {});
}

struct Options {
  bool quiet = false;
  int jobs = 1;

  // count
  std::string bottom;
  bool weak = false;
  int n = 0;
  std::string removed;
  std::string top;

  // coeff
  std::string s;
  std::string i;
  std::string method = "extract";

  // table
  std::string which;
  std::string format = "csv";
  int c = 0;
  int d = 0;

  // verify
  std::string suite;
  int n_max = 4;

  // transform / convert
  std::string op;
  std::string in;
  std::string to;
};

class Runner {
public:
  Runner(const Options &opt, std::ostream &out, std::ostream &err) : opt_(opt), out_(out), err_(err) {}

  void warn(const std::string &msg) {
    if (!opt_.quiet) {
      err_ << "warning: " << msg << '\n';
    }
  }

  void warn_count_size(int n) {
    if (n > 8) {
      warn("n = " + std::to_string(n) + " is beyond the practical range for exact counts (8)");
    }
  }

  int count_triangles_cmd() {
    const Row bottom = parse_list(opt_.bottom, "--bottom");
    if (bottom.empty()) {
      throw UsageError("--bottom must not be empty");
    }
    const BottomRowSpec spec{bottom, opt_.weak};
    if (auto v = spec.validate(); !v) {
      throw UsageError("--bottom: " + v.reason());
    }
    warn_count_size(static_cast<int>(bottom.size()));
    out_ << to_decimal(count_triangles(spec)) << '\n';
    return kOk;
  }

  int count_trapezoids_cmd() {
    warn_count_size(opt_.n);
    out_ << to_decimal(count_trapezoids(opt_.n, parse_list(opt_.removed, "--removed"), parse_list(opt_.top, "--top")))
         << '\n';
    return kOk;
  }

  int coeff_cmd() {
    const IndexTuplePair pair{opt_.n, parse_list(opt_.s, "--s"), parse_list(opt_.i, "--i")};
    if (pair.n < 1) {
      throw UsageError("--n must be positive");
    }
    if (pair.s.size() + pair.i.size() > static_cast<std::size_t>(pair.n)) {
      throw UsageError("need c + d <= n");
    }
    warn_count_size(pair.n);
    if (opt_.method == "extract") {
      out_ << to_decimal(extract_coefficient(pair, *alpha(pair.n))) << '\n';
      return kOk;
    }
    if (opt_.method == "brute") {
      out_ << to_decimal(count_trapezoids(pair.n, pair.s, pair.i)) << '\n';
      return kOk;
    }
    const Integer brute = count_trapezoids(pair.n, pair.s, pair.i);
    const Integer extracted = extract_coefficient(pair, *alpha(pair.n));
    const Json j = {{"extract", to_decimal(extracted)}, {"brute", to_decimal(brute)}, {"match", brute == extracted}};
    out_ << j.dump() << '\n';
    return brute == extracted ? kOk : kVerificationFailed;
  }

  int table_cmd() {
    const int n = opt_.n;
    if (n < 1) {
      throw UsageError("--n must be positive");
    }
    TextTable t;
    if (opt_.which == "asm_total") {
      t.header = {"n", "value"};
      for (int m = 1; m <= n; ++m) {
        t.rows.push_back({std::to_string(m), to_decimal(asm_total(m))});
      }
    } else if (opt_.which == "a_nk") {
      t.header = {"n", "k", "value"};
      for (int k = 1; k <= n; ++k) {
        t.rows.push_back({std::to_string(n), std::to_string(k), to_decimal(a_nk(n, k))});
      }
    } else if (opt_.which == "b_nij" || opt_.which == "a_nij") {
      if (n < 2) {
        throw UsageError("--which " + opt_.which + " needs n >= 2");
      }
      t.header = {"n", "i", "j", "value"};
      for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= n; ++j) {
          const Integer v = opt_.which == "b_nij" ? stroganov_b(n, i, j) : a_nij(n, i, j);
          t.rows.push_back({std::to_string(n), std::to_string(i), std::to_string(j), to_decimal(v)});
        }
      }
    } else {
      if (opt_.c < 0 || opt_.d < 0 || opt_.c + opt_.d > n) {
        throw UsageError("--which coeff needs c, d >= 0 and c + d <= n");
      }
      warn_count_size(n);
      t = coefficient_rows(coefficient_table(n, opt_.c, opt_.d, opt_.jobs));
    }
    if (opt_.format == "json") {
      out_ << to_json(t).dump() << '\n';
    } else {
      out_ << to_csv(t);
    }
    return kOk;
  }

  int verify_cmd() {
    const int nmax = opt_.n_max;
    if (nmax < 1) {
      throw UsageError("--n-max must be positive");
    }
    if (nmax > 7) {
      warn("--n-max " + std::to_string(nmax) + " exceeds 7; exhaustive checks may take very long");
    }
    std::vector<std::function<VerificationReport()>> tasks;
    const bool all = opt_.suite == "all";
    if (opt_.suite == "theorem7" || all) {
      for (int n = 1; n <= nmax; ++n) {
        for (int c = 0; c <= n; ++c) {
          for (int d = 0; c + d <= n; ++d) {
            tasks.push_back([=] { return verify_theorem7(n, c, d); });
          }
        }
      }
    }
    if (opt_.suite == "identities" || all) {
      add_identities(tasks, nmax);
    }
    if (all) {
      for (int n = 1; n <= nmax; ++n) {
        tasks.push_back([=] { return check_totals(n); });
        tasks.push_back([=] { return check_refined(n); });
        tasks.push_back([=] { return check_gamma_bridge(n); });
        tasks.push_back([=] { return check_symmetry_maps(n); });
        if (n >= 2) {
          tasks.push_back([=] { return check_first_row_b(n); });
          tasks.push_back([=] { return check_headline(n); });
        }
      }
    }
    const std::vector<VerificationReport> reports = execute(tasks);
    Json list = Json::array();
    bool passed = true;
    std::size_t cases = 0;
    for (const auto &r : reports) {
      passed = passed && r.passed();
      cases += r.cases;
      list.push_back(report_to_json(r));
    }
    const Json summary = {{"suite", opt_.suite},
                          {"n_max", nmax},
                          {"status", passed ? "pass" : "fail"},
                          {"cases", cases},
                          {"reports", list}};
    out_ << summary.dump(2) << '\n';
    return passed ? kOk : kVerificationFailed;
  }

  int transform_cmd() {
    const Object obj = parse_object(read_input(opt_.in));
    const auto *t = std::get_if<MonotoneTriangle>(&obj);
    if (!t) {
      throw UsageError("transform expects a monotone_triangle");
    }
    MonotoneTriangle result;
    if (opt_.op == "ad") {
      result = reflect_antidiagonal(*t);
    } else if (opt_.op == "rot90") {
      result = rotate_90(*t);
    } else {
      result = reflect_horizontal(*t);
    }
    out_ << to_json(result).dump() << '\n';
    return kOk;
  }

  int convert_cmd() {
    const Object obj = parse_object(read_input(opt_.in));
    Object result;
    if (opt_.to == "asm") {
      const auto *t = std::get_if<MonotoneTriangle>(&obj);
      if (!t) {
        throw UsageError("--to asm expects a monotone_triangle");
      }
      result = triangle_to_asm(*t);
    } else if (opt_.to == "triangle") {
      const auto *m = std::get_if<Asm>(&obj);
      if (!m) {
        throw UsageError("--to triangle expects an asm");
      }
      result = asm_to_triangle(*m);
    } else if (opt_.to == "partial_asm") {
      const auto *p = std::get_if<PlacedTrapezoid>(&obj);
      if (!p) {
        throw UsageError("--to partial_asm expects a monotone_trapezoid");
      }
      result = trapezoid_to_partial_asm(p->trapezoid, p->ambient_n);
    } else {
      const auto *p = std::get_if<PartialAsm>(&obj);
      if (!p) {
        throw UsageError("--to trapezoid expects a partial_asm");
      }
      if (opt_.bottom.empty()) {
        throw UsageError("--to trapezoid needs --bottom");
      }
      result = PlacedTrapezoid{partial_asm_to_trapezoid(*p, parse_list(opt_.bottom, "--bottom")), p->width()};
    }
    out_ << to_json(result).dump() << '\n';
    return kOk;
  }

private:
  static void add_identities(std::vector<std::function<VerificationReport()>> &tasks, int nmax) {
    for (int n = 1; n <= nmax; ++n) {
      tasks.push_back([=] { return check_operator_variant(n, kProductionOperatorVariant); });
      tasks.push_back([=] { return check_cyclic(n); });
      for (long z : {-3L, 1L, 5L}) {
        tasks.push_back([=] { return check_reflection_translation(n, z); });
      }
      for (int c = 0; c <= n; ++c) {
        for (int d = 0; c + d <= n; ++d) {
          tasks.push_back([=] { return reconstruct_expansion(coefficient_table(n, c, d)); });
          tasks.push_back([=] { return check_remark_symmetry(n, c, d); });
          if (c + d <= 3) {
            for (int t = 0; t <= c; ++t) {
              tasks.push_back([=] { return check_circuit(n, c, d, t); });
            }
          }
        }
      }
      for (int d = 1; d <= std::min(n, 2); ++d) {
        tasks.push_back([=] { return check_system(n, d); });
      }
      if (n >= 2) {
        tasks.push_back([=] { return check_relation(n); });
        tasks.push_back([=] { return check_anij_forms(n); });
      }
      if (n >= 3) {
        tasks.push_back([=] { return check_near_symmetry(n); });
      }
    }
  }

  std::vector<VerificationReport> execute(const std::vector<std::function<VerificationReport()>> &tasks) {
    std::vector<VerificationReport> reports(tasks.size());
    std::atomic<std::size_t> next{0};
    std::mutex mu;
    std::size_t done = 0;
    std::exception_ptr error;
    auto worker = [&] {
      for (std::size_t x = next++; x < tasks.size(); x = next++) {
        try {
          reports[x] = tasks[x]();
        } catch (...) {
          std::lock_guard<std::mutex> lock(mu);
          if (!error) {
            error = std::current_exception();
          }
          continue;
        }
        std::lock_guard<std::mutex> lock(mu);
        ++done;
        if (!opt_.quiet) {
          err_ << "[" << done << "/" << tasks.size() << "] " << reports[x].identity << " " << reports[x].range << " "
               << reports[x].status() << '\n';
        }
      }
    };
    const int jobs = std::max(1, std::min<int>(opt_.jobs, static_cast<int>(tasks.size())));
    if (jobs == 1) {
      worker();
    } else {
      std::vector<std::thread> pool;
      for (int w = 0; w < jobs; ++w) {
        pool.emplace_back(worker);
      }
      for (auto &t : pool) {
        t.join();
      }
    }
    if (error) {
      std::rethrow_exception(error);
    }
    return reports;
  }

  const Options &opt_;
  std::ostream &out_;
  std::ostream &err_;
};

} // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
  Options opt;
  CLI::App app{"Exact enumeration of alternating sign matrices and monotone triangles", "asmlab"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_flag("--quiet", opt.quiet, "Suppress progress and warnings on standard error");
  app.add_option("--jobs", opt.jobs, "Worker threads for tables and verification")->check(CLI::PositiveNumber);

  auto *count = app.add_subcommand("count", "Count monotone triangles or trapezoids");
  count->require_subcommand(1);
  auto *triangles = count->add_subcommand("triangles", "Monotone triangles with a given bottom row");
  triangles->add_option("--bottom", opt.bottom, "Bottom row, e.g. 1,2,4")->required();
  triangles->add_flag("--weak", opt.weak, "Allow equal adjacent entries in the bottom row");
  auto *trapezoids = count->add_subcommand("trapezoids", "Monotone trapezoids");
  trapezoids->add_option("--n", opt.n, "Ambient size")->required();
  trapezoids->add_option("--removed", opt.removed, "Entries missing from the bottom row (may be empty)");
  trapezoids->add_option("--top", opt.top, "Prescribed top row")->required();

  auto *coeff = app.add_subcommand("coeff", "One coefficient A(n; s; i)");
  coeff->add_option("--n", opt.n, "n")->required();
  coeff->add_option("--s", opt.s, "s_1,...,s_c (may be empty)");
  coeff->add_option("--i", opt.i, "i_1,...,i_d (may be empty)");
  coeff->add_option("--method", opt.method, "extract, brute or both")
      ->check(CLI::IsMember({"extract", "brute", "both"}));

  auto *table = app.add_subcommand("table", "Tables of exact counts");
  table->add_option("--which", opt.which, "asm_total, a_nk, b_nij, a_nij or coeff")
      ->required()
      ->check(CLI::IsMember({"asm_total", "a_nk", "b_nij", "a_nij", "coeff"}));
  table->add_option("--n", opt.n, "n")->required();
  table->add_option("--c", opt.c, "Length of s for --which coeff");
  table->add_option("--d", opt.d, "Length of i for --which coeff");
  table->add_option("--format", opt.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));

  auto *verify = app.add_subcommand("verify", "Run a verification suite");
  verify->add_option("--suite", opt.suite, "theorem7, identities or all")
      ->required()
      ->check(CLI::IsMember({"theorem7", "identities", "all"}));
  verify->add_option("--n-max", opt.n_max, "Largest n checked");

  auto *transform = app.add_subcommand("transform", "Apply a symmetry map to a complete monotone triangle");
  transform->add_option("--op", opt.op, "ad, rot90 or hrefl")->required()->check(CLI::IsMember({"ad", "rot90", "hrefl"}));
  transform->add_option("--in", opt.in, "Input JSON file, - for standard input")->required();

  auto *convert = app.add_subcommand("convert", "Convert between triangles, matrices and trapezoids");
  convert->add_option("--in", opt.in, "Input JSON file, - for standard input")->required();
  convert->add_option("--to", opt.to, "asm, triangle, partial_asm or trapezoid")
      ->required()
      ->check(CLI::IsMember({"asm", "triangle", "partial_asm", "trapezoid"}));
  convert->add_option("--bottom", opt.bottom, "Bottom row when converting a partial_asm");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError &e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsageError;
  }

  Runner runner(opt, out, err);
  try {
    if (triangles->parsed()) {
      return runner.count_triangles_cmd();
    }
    if (trapezoids->parsed()) {
      return runner.count_trapezoids_cmd();
    }
    if (coeff->parsed()) {
      return runner.coeff_cmd();
    }
    if (table->parsed()) {
      return runner.table_cmd();
    }
    if (verify->parsed()) {
      return runner.verify_cmd();
    }
    if (transform->parsed()) {
      return runner.transform_cmd();
    }
    if (convert->parsed()) {
      return runner.convert_cmd();
    }
  } catch (const ResourceLimitError &e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::invalid_argument &e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::out_of_range &e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const IntegralityError &e) {
    err << "error: " << e.what() << '\n';
    return kVerificationFailed;
  }
  return kUsageError;
}

} // namespace asmlab::cli
