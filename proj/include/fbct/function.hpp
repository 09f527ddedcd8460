#pragma once

#include <cstdint>
#include <fstream>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "fbct/errors.hpp"
#include "fbct/field.hpp"

namespace fbct {

struct PowerExponent {
  std::uint64_t d;
};

struct LookupTable {
  std::vector<Word> values;  // values[x] = F(x)
};

/// Exponent of the power function x^(2^(n-2)-1).
inline std::uint64_t default_exponent(unsigned n) {
  if (n < 3) throw UsageError("x^(2^(n-2)-1) needs n >= 3");
  return (std::uint64_t{1} << (n - 2)) - 1;
}

/// A map GF(2^n) -> GF(2^n), either x^d or an explicit table.
class BoxedFunction {
 public:
  static BoxedFunction power(Field field, std::uint64_t d) {
    if (d == 0 || d >= field.size()) {
      throw UsageError("power exponent must be in [1, 2^n), got " + std::to_string(d));
    }
    return BoxedFunction(field, PowerExponent{d});
  }

  static BoxedFunction table(Field field, std::vector<Word> values) {
    if (values.size() != field.size()) {
      throw UsageError("lookup table needs exactly " + std::to_string(field.size()) + " entries, got " +
                       std::to_string(values.size()));
    }
    for (Word v : values) {
      if (!field.contains(v)) throw UsageError("lookup table entry " + to_hex(v) + " is outside the field");
    }
    return BoxedFunction(field, LookupTable{std::move(values)});
  }

  const Field& field() const { return field_; }
  bool is_power() const { return std::holds_alternative<PowerExponent>(body_); }
  std::optional<std::uint64_t> exponent() const {
    if (auto* p = std::get_if<PowerExponent>(&body_)) return p->d;
    return std::nullopt;
  }

  Word operator()(Word x) const {
    if (auto* p = std::get_if<PowerExponent>(&body_)) return field_.pow(x, p->d);
    return std::get<LookupTable>(body_).values[x];
  }

  /// Full value table. Power functions are walked along powers of a
  /// generator, two multiplications per element.
  std::vector<Word> materialize() const {
    if (auto* t = std::get_if<LookupTable>(&body_)) return t->values;
    const std::uint64_t d = std::get<PowerExponent>(body_).d;
    std::vector<Word> out(field_.size());
    out[0] = 0;
    const Word g = field_.primitive_element();
    const Word gd = field_.pow(g, d);
    Word x = 1, y = 1;
    for (std::uint64_t k = 0; k < field_.group_order(); ++k) {
      out[x] = y;
      x = field_.mul(x, g);
      y = field_.mul(y, gd);
    }
    return out;
  }

  /// Human-readable description used in serialized output.
  std::string describe() const {
    if (auto* p = std::get_if<PowerExponent>(&body_)) return "x^" + std::to_string(p->d);
    return "lookup-table";
  }

 private:
  BoxedFunction(Field field, std::variant<PowerExponent, LookupTable> body)
      : field_(field), body_(std::move(body)) {}

  Field field_;
  std::variant<PowerExponent, LookupTable> body_;
};

/// Reads one hex element per line; line i holds F(i). Blank lines and
/// lines starting with '#' are skipped.
inline BoxedFunction load_lookup_table(const Field& field, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open lookup table file " + path);
  std::vector<Word> values;
  std::string line;
  while (std::getline(in, line)) {
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ' || line.back() == '\t')) line.pop_back();
    std::size_t start = line.find_first_not_of(" \t");
    if (start == std::string::npos || line[start] == '#') continue;
    const std::uint64_t v = parse_hex(std::string_view(line).substr(start));
    if (v > field.mask()) throw UsageError("lookup table entry " + to_hex(v) + " is outside the field");
    values.push_back(static_cast<Word>(v));
  }
  return BoxedFunction::table(field, std::move(values));
}

}  // namespace fbct
