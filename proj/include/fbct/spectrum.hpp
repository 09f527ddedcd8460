#pragma once

#include <cstdint>
#include <map>
#include <sstream>
#include <string>

#include "json.hpp"

#include "fbct/field.hpp"

namespace fbct {

/// Multiset of table entries as {value -> frequency}, iterated in
/// ascending value order.
struct Spectrum {
  unsigned n = 0;
  std::map<std::uint64_t, std::uint64_t> counts;

  void add(std::uint64_t value, std::uint64_t times = 1) {
    if (times != 0) counts[value] += times;
  }

  void merge(const Spectrum& other) {
    for (const auto& [value, freq] : other.counts) add(value, freq);
  }

  std::uint64_t frequency(std::uint64_t value) const {
    auto it = counts.find(value);
    return it == counts.end() ? 0 : it->second;
  }

  std::uint64_t total() const {
    std::uint64_t sum = 0;
    for (const auto& [value, freq] : counts) sum += freq;
    return sum;
  }

  friend bool operator==(const Spectrum&, const Spectrum&) = default;
};

inline nlohmann::ordered_json spectrum_pairs(const Spectrum& s) {
  auto arr = nlohmann::ordered_json::array();
  for (const auto& [value, freq] : s.counts) arr.push_back({value, freq});
  return arr;
}

inline nlohmann::ordered_json spectrum_to_json(const Spectrum& s, const Field& field, const std::string& function) {
  nlohmann::ordered_json j;
  j["n"] = s.n;
  j["modulus"] = to_hex(field.modulus());
  j["function"] = function;
  j["spectrum"] = spectrum_pairs(s);
  return j;
}

inline std::string spectrum_to_csv(const Spectrum& s) {
  std::ostringstream out;
  out << "value,frequency\n";
  for (const auto& [value, freq] : s.counts) out << value << ',' << freq << '\n';
  return out.str();
}

}  // namespace fbct
