#pragma once

// JSON and CSV forms of the library's objects. Counts are always written as
// decimal strings, never as JSON numbers.

#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "asmlab/coefficients.hpp"
#include "asmlab/objects.hpp"
#include "asmlab/poly.hpp"

namespace asmlab {

using Json = nlohmann::json;

// Thrown for JSON input that does not describe a valid object.
class FormatError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

// Trapezoids are serialized together with the ambient n of their bottom row.
struct PlacedTrapezoid {
  MonotoneTrapezoid trapezoid;
  int ambient_n = 0;
};

using Object = std::variant<MonotoneTriangle, PlacedTrapezoid, Asm, PartialAsm>;

Json to_json(const MonotoneTriangle &t);
Json to_json(const PlacedTrapezoid &t);
Json to_json(const Asm &m);
Json to_json(const PartialAsm &m);
Json to_json(const Object &o);

// Dispatches on "kind" and validates the result.
Object object_from_json(const Json &j);
Object parse_object(const std::string &text);

// [{"exps": [...], "coef": "p/q"}, ...] in lexicographic exponent order.
Json poly_to_json(const MultiPoly &p);
MultiPoly poly_from_json(const Json &j, int arity);

Json report_to_json(const VerificationReport &r);

// A header plus rows of already formatted cells. Index columns hold integers,
// the last column an exact count.
struct TextTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

std::string to_csv(const TextTable &t);
// Array of objects keyed by the header; every column but "value" is a JSON
// integer, "value" stays a decimal string.
Json to_json(const TextTable &t);

// Header "s_1,...,s_c,i_1,...,i_d,value", one row per table cell.
TextTable coefficient_rows(const CoefficientTable &table);

} // namespace asmlab
