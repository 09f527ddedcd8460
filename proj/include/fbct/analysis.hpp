#pragma once

// Brute-force DDT / BCT / FBCT entries, tables, spectra and uniformities.
//
// Everything here works on an EvaluatedFunction, i.e. a function whose
// full value table is in memory. Single-entry helpers that take a
// BoxedFunction evaluate it first.

#include <algorithm>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "fbct/errors.hpp"
#include "fbct/field.hpp"
#include "fbct/function.hpp"
#include "fbct/parallel.hpp"
#include "fbct/spectrum.hpp"

namespace fbct {

/// Brute-force spectra cost O(2^(3n)).
inline constexpr unsigned kMaxBruteForceDegree = 9;
/// Full 2^n x 2^n table dumps.
inline constexpr unsigned kMaxTableDegree = 8;

using Table = std::vector<std::vector<std::uint32_t>>;

class EvaluatedFunction {
 public:
  explicit EvaluatedFunction(const BoxedFunction& f)
      : field_(f.field()), values_(f.materialize()), exponent_(f.exponent()), description_(f.describe()) {}

  const Field& field() const { return field_; }
  std::span<const Word> values() const { return values_; }
  Word operator()(Word x) const { return values_[x]; }
  const std::optional<std::uint64_t>& exponent() const { return exponent_; }
  const std::string& describe() const { return description_; }

 private:
  Field field_;
  std::vector<Word> values_;
  std::optional<std::uint64_t> exponent_;
  std::string description_;
};

/// ab(a+b) = 0: the pairs on which every FBCT entry is 2^n.
constexpr bool is_trivial_pair(Word a, Word b) { return a == 0 || b == 0 || a == b; }

namespace detail {

inline void require_element(const Field& field, Word x) {
  if (!field.contains(x)) throw UsageError("value " + to_hex(x) + " is not an element of the field");
}

inline void require_degree(const Field& field, unsigned cap, const char* what) {
  if (field.degree() > cap) {
    throw CapacityError(std::string(what) + " is limited to n <= " + std::to_string(cap) + " (got n = " +
                        std::to_string(field.degree()) + ")");
  }
}

// Sparse preimage index: inputs x with F(x) = v are
// inputs[offsets[v] .. offsets[v+1]).
struct Preimages {
  std::vector<std::uint32_t> offsets;
  std::vector<Word> inputs;

  explicit Preimages(std::span<const Word> values) : offsets(values.size() + 1, 0), inputs(values.size()) {
    for (Word v : values) ++offsets[v + 1];
    for (std::size_t i = 1; i < offsets.size(); ++i) offsets[i] += offsets[i - 1];
    std::vector<std::uint32_t> cursor(offsets.begin(), offsets.end() - 1);
    for (Word x = 0; x < values.size(); ++x) inputs[cursor[values[x]]++] = x;
  }

  std::span<const Word> of(Word v) const {
    return std::span<const Word>(inputs).subspan(offsets[v], offsets[v + 1] - offsets[v]);
  }
};

inline std::uint32_t bct_entry_indexed(const EvaluatedFunction& f, const Preimages& pre, Word a, Word b) {
  std::uint32_t count = 0;
  for (Word x : f.field().elements()) {
    const Word fxa = f(x ^ a);
    for (Word y : pre.of(f(x) ^ b)) {
      if ((f(y ^ a) ^ fxa) == b) ++count;
    }
  }
  return count;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// DDT

/// |{x : F(x+a) + F(x) = b}|
inline std::uint32_t ddt_entry(const EvaluatedFunction& f, Word a, Word b) {
  detail::require_element(f.field(), a);
  detail::require_element(f.field(), b);
  std::uint32_t count = 0;
  for (Word x : f.field().elements()) count += (f(x ^ a) ^ f(x)) == b;
  return count;
}

inline std::vector<std::uint32_t> ddt_row(const EvaluatedFunction& f, Word a) {
  detail::require_element(f.field(), a);
  std::vector<std::uint32_t> row(f.field().size(), 0);
  for (Word x : f.field().elements()) ++row[f(x ^ a) ^ f(x)];
  return row;
}

/// Differential uniformity: max DDT entry over a != 0.
inline std::uint32_t ddt_uniformity(const EvaluatedFunction& f, unsigned threads = 1) {
  const std::uint64_t rows = f.field().size() - 1;
  return partition_reduce<std::uint32_t>(
      rows, threads,
      [&](std::uint64_t begin, std::uint64_t end) {
        std::uint32_t best = 0;
        for (std::uint64_t i = begin; i < end; ++i) {
          auto row = ddt_row(f, static_cast<Word>(i + 1));
          best = std::max(best, *std::max_element(row.begin(), row.end()));
        }
        return best;
      },
      [](std::uint32_t& acc, std::uint32_t part) { acc = std::max(acc, part); });
}

inline Table ddt_table(const EvaluatedFunction& f) {
  detail::require_degree(f.field(), kMaxTableDegree, "full DDT table");
  Table t;
  t.reserve(f.field().size());
  for (Word a : f.field().elements()) t.push_back(ddt_row(f, a));
  return t;
}

// ---------------------------------------------------------------------------
// BCT, pair-counting formulation (valid for non-permutations)

/// Ordered pairs (x, y) with F(y) + F(x) = b and F(y+a) + F(x+a) = b.
inline std::uint32_t bct_entry(const EvaluatedFunction& f, Word a, Word b) {
  detail::require_element(f.field(), a);
  detail::require_element(f.field(), b);
  detail::Preimages pre(f.values());
  return detail::bct_entry_indexed(f, pre, a, b);
}

inline Table bct_table(const EvaluatedFunction& f, unsigned threads = 1) {
  detail::require_degree(f.field(), kMaxTableDegree, "full BCT table");
  detail::Preimages pre(f.values());
  const std::uint64_t size = f.field().size();
  return partition_reduce<Table>(
      size, threads,
      [&](std::uint64_t begin, std::uint64_t end) {
        Table part;
        for (std::uint64_t a = begin; a < end; ++a) {
          std::vector<std::uint32_t> row(size);
          for (Word b = 0; b < size; ++b) row[b] = detail::bct_entry_indexed(f, pre, static_cast<Word>(a), b);
          part.push_back(std::move(row));
        }
        return part;
      },
      [](Table& acc, Table& part) { std::move(part.begin(), part.end(), std::back_inserter(acc)); });
}

// ---------------------------------------------------------------------------
// FBCT

/// |{x : F(x) + F(x+a) + F(x+b) + F(x+a+b) = 0}|
inline std::uint32_t fbct_entry(const EvaluatedFunction& f, Word a, Word b) {
  detail::require_element(f.field(), a);
  detail::require_element(f.field(), b);
  const Word ab = a ^ b;
  std::uint32_t count = 0;
  for (Word x : f.field().elements()) count += (f(x) ^ f(x ^ a) ^ f(x ^ b) ^ f(x ^ ab)) == 0;
  return count;
}

inline std::uint32_t fbct_entry(const BoxedFunction& f, Word a, Word b) {
  return fbct_entry(EvaluatedFunction(f), a, b);
}
inline std::uint32_t ddt_entry(const BoxedFunction& f, Word a, Word b) {
  return ddt_entry(EvaluatedFunction(f), a, b);
}
inline std::uint32_t bct_entry(const BoxedFunction& f, Word a, Word b) {
  return bct_entry(EvaluatedFunction(f), a, b);
}

inline Table fbct_table(const EvaluatedFunction& f, unsigned threads = 1) {
  detail::require_degree(f.field(), kMaxTableDegree, "full FBCT table");
  const std::uint64_t size = f.field().size();
  return partition_reduce<Table>(
      size, threads,
      [&](std::uint64_t begin, std::uint64_t end) {
        Table part;
        for (std::uint64_t a = begin; a < end; ++a) {
          std::vector<std::uint32_t> row(size);
          for (Word b = 0; b < size; ++b) row[b] = fbct_entry(f, static_cast<Word>(a), b);
          part.push_back(std::move(row));
        }
        return part;
      },
      [](Table& acc, Table& part) { std::move(part.begin(), part.end(), std::back_inserter(acc)); });
}

/// Feistel boomerang spectrum by evaluating every one of the 2^(2n) entries.
inline Spectrum fbct_spectrum_bruteforce(const EvaluatedFunction& f, unsigned threads = 1) {
  const Field& field = f.field();
  if (field.degree() > kMaxBruteForceDegree) {
    throw CapacityError("brute-force FBCT spectrum is limited to n <= 9 (got n = " +
                        std::to_string(field.degree()) + "); use the ratio-reduced path for power functions");
  }
  const std::uint64_t size = field.size();
  Spectrum s = partition_reduce<Spectrum>(
      size, threads,
      [&](std::uint64_t begin, std::uint64_t end) {
        Spectrum part;
        for (std::uint64_t a = begin; a < end; ++a) {
          for (Word b = 0; b < size; ++b) part.add(fbct_entry(f, static_cast<Word>(a), b));
        }
        return part;
      },
      [](Spectrum& acc, const Spectrum& part) { acc.merge(part); });
  s.n = field.degree();
  return s;
}

/// For a power function F(x) = x^d and b != 0, substituting x = b*y gives
/// FBCT(a, b) = FBCT(a/b, 1). Returns FBCT(c, 1) for every c, indexed by c
/// (entries 0 and 1 are the trivial value 2^n).
inline std::vector<std::uint32_t> fbct_ratio_counts(const EvaluatedFunction& f, unsigned threads = 1) {
  if (!f.exponent()) throw UsageError("ratio reduction applies to power functions only");
  const Field& field = f.field();
  const std::uint64_t size = field.size();
  auto values = f.values();
  using Counts = std::vector<std::uint32_t>;
  Counts counts = partition_reduce<Counts>(
      size - 2, threads,
      [&](std::uint64_t begin, std::uint64_t end) {
        Counts part;
        part.reserve(end - begin);
        for (std::uint64_t i = begin; i < end; ++i) {
          const Word c = static_cast<Word>(i + 2);
          const Word c1 = c ^ 1u;
          std::uint32_t count = 0;
          for (Word x = 0; x < size; ++x) {
            count += (values[x] ^ values[x ^ c] ^ values[x ^ 1u] ^ values[x ^ c1]) == 0;
          }
          part.push_back(count);
        }
        return part;
      },
      [](Counts& acc, const Counts& part) { acc.insert(acc.end(), part.begin(), part.end()); });
  counts.insert(counts.begin(), 2, static_cast<std::uint32_t>(size));
  return counts;
}

/// Spectrum assembled from per-ratio counts: each ratio c outside {0, 1}
/// stands for 2^n - 1 pairs, plus 3*2^n - 2 trivial pairs.
inline Spectrum spectrum_from_ratio_counts(unsigned n, std::span<const std::uint32_t> ratio_counts) {
  const std::uint64_t size = std::uint64_t{1} << n;
  Spectrum s;
  s.n = n;
  s.add(size, 3 * size - 2);
  for (std::size_t c = 2; c < ratio_counts.size(); ++c) s.add(ratio_counts[c], size - 1);
  return s;
}

/// Feistel boomerang spectrum of x^d in O(2^(2n)).
inline Spectrum fbct_spectrum_power(std::uint64_t d, const Field& field, unsigned threads = 1) {
  EvaluatedFunction f(BoxedFunction::power(field, d));
  auto counts = fbct_ratio_counts(f, threads);
  return spectrum_from_ratio_counts(field.degree(), counts);
}

/// Feistel boomerang uniformity: max FBCT entry over ab(a+b) != 0.
/// Power functions go through the ratio reduction; tables are brute-forced.
inline std::uint32_t fbct_uniformity(const EvaluatedFunction& f, unsigned threads = 1) {
  if (f.exponent()) {
    auto counts = fbct_ratio_counts(f, threads);
    return *std::max_element(counts.begin() + 2, counts.end());
  }
  const Field& field = f.field();
  if (field.degree() > kMaxBruteForceDegree) {
    throw CapacityError("FBCT uniformity of a lookup table is limited to n <= 9");
  }
  const std::uint64_t size = field.size();
  return partition_reduce<std::uint32_t>(
      size - 1, threads,
      [&](std::uint64_t begin, std::uint64_t end) {
        std::uint32_t best = 0;
        for (std::uint64_t i = begin; i < end; ++i) {
          const Word a = static_cast<Word>(i + 1);
          // FBCT(a, b) = FBCT(b, a): only b > a is needed
          for (Word b = a + 1; b < size; ++b) best = std::max(best, fbct_entry(f, a, b));
        }
        return best;
      },
      [](std::uint32_t& acc, std::uint32_t part) { acc = std::max(acc, part); });
}

inline std::uint32_t fbct_uniformity(const BoxedFunction& f, unsigned threads = 1) {
  return fbct_uniformity(EvaluatedFunction(f), threads);
}

}  // namespace fbct
