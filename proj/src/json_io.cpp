#include "asmlab/json_io.hpp"

#include <sstream>

namespace asmlab {

namespace {

std::vector<Row> rows_of(const Json &j, const char *key) {
  if (!j.contains(key) || !j[key].is_array()) {
    throw FormatError(std::string("missing array \"") + key + "\"");
  }
  std::vector<Row> rows;
  for (const auto &r : j[key]) {
    if (!r.is_array()) {
      throw FormatError(std::string("\"") + key + "\" must be an array of arrays");
    }
    Row row;
    for (const auto &x : r) {
      if (!x.is_number_integer()) {
        throw FormatError("entries must be integers");
      }
      row.push_back(x.get<int>());
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

int int_field(const Json &j, const char *key) {
  if (!j.contains(key) || !j[key].is_number_integer()) {
    throw FormatError(std::string("missing integer \"") + key + "\"");
  }
  return j[key].get<int>();
}

template <typename T>
T checked(T value) {
  if (auto v = validate(value); !v) {
    throw FormatError(v.reason());
  }
  return value;
}

} // namespace

Json to_json(const MonotoneTriangle &t) {
  return {{"kind", "monotone_triangle"}, {"n", t.size()}, {"rows_bottom_up", t.rows()}};
}

Json to_json(const PlacedTrapezoid &t) {
  return {{"kind", "monotone_trapezoid"},
          {"d", t.trapezoid.top_length()},
          {"m", t.trapezoid.bottom_length()},
          {"ambient_n", t.ambient_n},
          {"rows_bottom_up", t.trapezoid.rows()}};
}

Json to_json(const Asm &m) { return {{"kind", "asm"}, {"n", m.size()}, {"rows", m.rows()}}; }

Json to_json(const PartialAsm &m) {
  return {{"kind", "partial_asm"}, {"t", m.row_count()}, {"n", m.width()}, {"rows", m.rows()}};
}

Json to_json(const Object &o) {
  return std::visit([](const auto &x) { return to_json(x); }, o);
}

Object object_from_json(const Json &j) {
  if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string()) {
    throw FormatError("expected an object with a \"kind\" field");
  }
  const std::string kind = j["kind"].get<std::string>();
  try {
    if (kind == "monotone_triangle") {
      MonotoneTriangle t(rows_of(j, "rows_bottom_up"));
      if (j.contains("n") && int_field(j, "n") != t.size()) {
        throw FormatError("\"n\" does not match the rows");
      }
      return checked(t);
    }
    if (kind == "monotone_trapezoid") {
      PlacedTrapezoid p{checked(MonotoneTrapezoid(rows_of(j, "rows_bottom_up"))), int_field(j, "ambient_n")};
      if (j.contains("d") && int_field(j, "d") != p.trapezoid.top_length()) {
        throw FormatError("\"d\" does not match the rows");
      }
      if (j.contains("m") && int_field(j, "m") != p.trapezoid.bottom_length()) {
        throw FormatError("\"m\" does not match the rows");
      }
      for (int x : p.trapezoid.bottom()) {
        if (x < 1 || x > p.ambient_n) {
          throw FormatError("bottom row entries must lie in [1, ambient_n]");
        }
      }
      return p;
    }
    if (kind == "asm") {
      return checked(Asm(rows_of(j, "rows")));
    }
    if (kind == "partial_asm") {
      return checked(PartialAsm(rows_of(j, "rows"), int_field(j, "n")));
    }
  } catch (const FormatError &) {
    throw;
  } catch (const std::invalid_argument &e) {
    throw FormatError(e.what());
  }
  throw FormatError("unknown kind \"" + kind + "\"");
}

Object parse_object(const std::string &text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error &e) {
    throw FormatError(std::string("invalid JSON: ") + e.what());
  }
  return object_from_json(j);
}

Json poly_to_json(const MultiPoly &p) {
  Json out = Json::array();
  for (const auto &[e, c] : p.terms()) {
    out.push_back({{"exps", e}, {"coef", to_fraction_string(c)}});
  }
  return out;
}

MultiPoly poly_from_json(const Json &j, int arity) {
  if (!j.is_array()) {
    throw FormatError("polynomial must be a JSON array of terms");
  }
  MultiPoly p(arity);
  for (const auto &term : j) {
    if (!term.contains("exps") || !term.contains("coef") || !term["coef"].is_string()) {
      throw FormatError("term needs \"exps\" and a string \"coef\"");
    }
    const auto exps = term["exps"].get<std::vector<int>>();
    if (static_cast<int>(exps.size()) != arity) {
      throw FormatError("exponent vector length differs from the arity");
    }
    p.add_term(Exponents(exps.begin(), exps.end()), parse_rational(term["coef"].get<std::string>()));
  }
  return p;
}

Json report_to_json(const VerificationReport &r) {
  Json ces = Json::array();
  for (const auto &c : r.counterexamples) {
    ces.push_back({{"input", c.input}, {"expected", c.expected}, {"actual", c.actual}});
  }
  return {{"identity", r.identity},
          {"range", r.range},
          {"status", r.status()},
          {"cases", r.cases},
          {"counterexamples", ces}};
}

std::string to_csv(const TextTable &t) {
  std::ostringstream os;
  auto line = [&os](const std::vector<std::string> &cells) {
    for (std::size_t x = 0; x < cells.size(); ++x) {
      os << (x ? "," : "") << cells[x];
    }
    os << '\n';
  };
  line(t.header);
  for (const auto &r : t.rows) {
    line(r);
  }
  return os.str();
}

Json to_json(const TextTable &t) {
  Json out = Json::array();
  for (const auto &r : t.rows) {
    Json obj = Json::object();
    for (std::size_t x = 0; x < t.header.size() && x < r.size(); ++x) {
      if (t.header[x] == "value") {
        obj[t.header[x]] = r[x];
      } else {
        obj[t.header[x]] = std::stoll(r[x]);
      }
    }
    out.push_back(std::move(obj));
  }
  return out;
}

TextTable coefficient_rows(const CoefficientTable &table) {
  TextTable t;
  for (int l = 1; l <= table.c(); ++l) {
    t.header.push_back("s_" + std::to_string(l));
  }
  for (int l = 1; l <= table.d(); ++l) {
    t.header.push_back("i_" + std::to_string(l));
  }
  t.header.push_back("value");
  Row s;
  Row i;
  for (std::size_t idx = 0; idx < table.size(); ++idx) {
    table.tuples(idx, s, i);
    std::vector<std::string> cells;
    for (int x : s) {
      cells.push_back(std::to_string(x));
    }
    for (int x : i) {
      cells.push_back(std::to_string(x));
    }
    cells.push_back(to_decimal(table.value(idx)));
    t.rows.push_back(std::move(cells));
  }
  return t;
}

} // namespace asmlab
