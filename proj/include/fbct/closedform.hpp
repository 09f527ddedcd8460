#pragma once

// Closed-form FBCT of F(x) = x^(2^(n-2)-1) over GF(2^n).
//
// For ab(a+b) != 0 put c = a/b and
//   w1 = 1/(c^2+c+1),  w2 = c^2/(c^2+c+1),  w3 = w1 + w2 = (c^2+1)/(c^2+c+1).
// The entry is 4 when c^2+c+1 != 0 and Tr(w1) = Tr(w2) = Tr(w3) = 0, except
// that for 3 | n and c in GF(8) \ GF(2) the four points {0, 1, c, c+1}
// (scaled by b) also solve the equation and the entry is 8. Every other
// non-trivial entry is 0.
//
// The spectrum frequencies follow from counting such c, which reduces to
// K_n(1); see predict_spectrum.

#include <algorithm>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "json.hpp"

#include "fbct/analysis.hpp"
#include "fbct/errors.hpp"
#include "fbct/field.hpp"
#include "fbct/function.hpp"
#include "fbct/kloosterman.hpp"
#include "fbct/spectrum.hpp"

namespace fbct {

/// Smallest n for which the closed form is claimed.
inline constexpr unsigned kTheoremMinDegree = 7;

enum class PredictionBranch {
  kTrivial,          // ab(a+b) = 0
  kSubfield,         // traces vanish and c in GF(8) \ GF(2), 3 | n
  kGeneric,          // traces vanish, c outside GF(8)
  kFailed,           // c^2+c+1 = 0 or some trace is 1
};

inline const char* to_string(PredictionBranch b) {
  switch (b) {
    case PredictionBranch::kTrivial: return "trivial";
    case PredictionBranch::kSubfield: return "trace-conditions-met-subfield";
    case PredictionBranch::kGeneric: return "trace-conditions-met-generic";
    case PredictionBranch::kFailed: return "failed";
  }
  return "?";
}

struct FbctPrediction {
  std::uint64_t value = 0;
  PredictionBranch branch = PredictionBranch::kTrivial;
  // Witnesses; meaningful only for non-trivial pairs.
  Word ratio = 0;                // c = a/b
  bool cube_root_of_unity = false;  // c^2+c+1 = 0, the w_i are undefined
  unsigned trace_w1 = 0;
  unsigned trace_w2 = 0;
  unsigned trace_w3 = 0;
  bool ratio_in_gf8 = false;
};

struct OmegaTriple {
  Word w1, w2, w3;
};

/// w1, w2, w3 for a ratio c with c^2+c+1 != 0.
inline OmegaTriple omegas(const Field& field, Word c) {
  const Word s = field.sqr(c) ^ c ^ 1u;
  const Word w1 = field.inv(s);
  const Word w2 = field.mul(field.sqr(c), w1);
  return {w1, w2, w1 ^ w2};
}

/// Predicted FBCT entry for the ratio c = a/b, c not in {0, 1}.
inline FbctPrediction predict_fbct_ratio(const Field& field, Word c) {
  FbctPrediction p;
  p.ratio = c;
  p.branch = PredictionBranch::kFailed;
  if ((field.sqr(c) ^ c ^ 1u) == 0) {
    p.cube_root_of_unity = true;
    return p;
  }
  const OmegaTriple w = omegas(field, c);
  p.trace_w1 = field.trace(w.w1);
  p.trace_w2 = field.trace(w.w2);
  p.trace_w3 = field.trace(w.w3);
  // c^8 = c with c outside GF(2) forces 3 | n
  p.ratio_in_gf8 = field.in_subfield(c, 3);
  if (p.trace_w1 != 0 || p.trace_w2 != 0 || p.trace_w3 != 0) return p;
  if (p.ratio_in_gf8) {
    p.value = 8;
    p.branch = PredictionBranch::kSubfield;
  } else {
    p.value = 4;
    p.branch = PredictionBranch::kGeneric;
  }
  return p;
}

inline FbctPrediction predict_fbct_entry(const Field& field, Word a, Word b) {
  if (!field.contains(a) || !field.contains(b)) throw UsageError("pair is not in the field");
  if (is_trivial_pair(a, b)) {
    FbctPrediction p;
    p.value = field.size();
    p.branch = PredictionBranch::kTrivial;
    return p;
  }
  return predict_fbct_ratio(field, field.mul(a, field.inv(b)));
}

struct SpectrumPrediction {
  unsigned n = 0;
  std::int64_t kloosterman = 0;
  // Frequencies may come out negative below the theorem's range.
  std::map<std::uint64_t, std::int64_t> theta;
  bool within_hypothesis = true;

  std::int64_t frequency(std::uint64_t value) const {
    auto it = theta.find(value);
    return it == theta.end() ? 0 : it->second;
  }

  /// True when the prediction has exactly the entries of `s`.
  bool matches(const Spectrum& s) const {
    for (const auto& [value, freq] : theta) {
      if (freq < 0 || static_cast<std::uint64_t>(freq) != s.frequency(value)) return false;
    }
    for (const auto& [value, freq] : s.counts) {
      if (!theta.contains(value)) return false;
    }
    return true;
  }
};

namespace detail {

inline std::int64_t exact_quarter(const BigInt& numerator, const char* what) {
  if (numerator % 4 != 0) throw ConsistencyError(std::string(what) + " is not divisible by 4");
  return static_cast<std::int64_t>(numerator / 4);
}

}  // namespace detail

/// Feistel boomerang spectrum of x^(2^(n-2)-1) from K_n(1).
///   Theta_{2^n} = 3*2^n - 2
///   Theta_4 (3 !| n) = (2^n-1)(2^n - 3K + 4)/4   n odd
///                      (2^n-1)(2^n + 3K - 16)/4  n even
///   Theta_8 (3 | n)  = 6(2^n-1), taken out of Theta_4
///   Theta_0          = (2^n-1)(3*2^n + 3K - 12)/4  n odd
///                      (2^n-1)(3*2^n - 3K + 8)/4   n even
inline SpectrumPrediction predict_spectrum(unsigned n) {
  if (n < 3 || n > kMaxDegree) throw UsageError("spectrum prediction needs 3 <= n <= 24");
  SpectrumPrediction p;
  p.n = n;
  p.within_hypothesis = n >= kTheoremMinDegree;
  p.kloosterman = kloosterman_carlitz(n);

  const BigInt size = BigInt(1) << n;
  const BigInt units = size - 1;
  const BigInt k = p.kloosterman;
  const bool odd = n % 2 == 1;
  const bool div3 = n % 3 == 0;

  const BigInt zero_factor = odd ? BigInt(3 * size + 3 * k - 12) : BigInt(3 * size - 3 * k + 8);
  BigInt four_factor = odd ? BigInt(size - 3 * k + 4) : BigInt(size + 3 * k - 16);
  if (div3) four_factor -= 24;  // 6(2^n-1) = (2^n-1)*24/4 move to value 8

  // accumulate: for n = 3 the trivial value 2^n coincides with 8
  p.theta[static_cast<std::uint64_t>(size)] += static_cast<std::int64_t>(BigInt(3 * size - 2));
  p.theta[0] += static_cast<std::int64_t>(units) * detail::exact_quarter(zero_factor, "Theta_0 factor");
  p.theta[4] += static_cast<std::int64_t>(units) * detail::exact_quarter(four_factor, "Theta_4 factor");
  if (div3) p.theta[8] += static_cast<std::int64_t>(BigInt(6 * units));
  return p;
}

inline SpectrumPrediction predict_spectrum(const Field& field) { return predict_spectrum(field.degree()); }

// ---------------------------------------------------------------------------
// End-to-end check against brute force

struct TheoremReport {
  unsigned n = 0;
  std::uint64_t modulus = 0;
  std::int64_t kloosterman = 0;
  std::int64_t kloosterman_direct = 0;
  bool within_hypothesis = true;
  SpectrumPrediction predicted;
  Spectrum computed;
  bool spectrum_match = false;
  // Pairs compared entry by entry, and how many disagreed.
  std::uint64_t entries_checked = 0;
  std::uint64_t entry_mismatches = 0;
  bool full_table_checked = false;
  std::uint64_t mod4_checked = 0;
  std::uint64_t mod4_violations = 0;
  std::uint32_t uniformity = 0;
  std::uint32_t predicted_uniformity = 0;
  bool pass = false;
};

/// Compares the closed form with computation for x^(2^(n-2)-1):
///   - predicted vs ratio-reduced spectrum,
///   - predicted vs computed entry for every ratio c (each stands for
///     2^n - 1 pairs), and for n <= 9 for every pair by brute force,
///   - uniformity and divisibility by 4 of every computed entry.
inline TheoremReport verify_theorem(const Field& field, unsigned threads = 1) {
  const unsigned n = field.degree();
  TheoremReport r;
  r.n = n;
  r.modulus = field.modulus();
  r.predicted = predict_spectrum(n);
  r.kloosterman = r.predicted.kloosterman;
  r.kloosterman_direct = kloosterman_direct(field);
  r.within_hypothesis = r.predicted.within_hypothesis;

  EvaluatedFunction f(BoxedFunction::power(field, default_exponent(n)));
  const auto ratio_counts = fbct_ratio_counts(f, threads);
  r.computed = spectrum_from_ratio_counts(n, ratio_counts);
  r.spectrum_match = r.predicted.matches(r.computed);

  const std::uint64_t size = field.size();
  for (Word c = 2; c < size; ++c) {
    const std::uint32_t got = ratio_counts[c];
    r.entries_checked += size - 1;
    const auto predicted = predict_fbct_ratio(field, c).value;
    r.predicted_uniformity = std::max(r.predicted_uniformity, static_cast<std::uint32_t>(predicted));
    if (predicted != got) r.entry_mismatches += size - 1;
    ++r.mod4_checked;
    if (got % 4 != 0) ++r.mod4_violations;
    r.uniformity = std::max(r.uniformity, got);
  }
  r.entries_checked += 3 * size - 2;  // trivial pairs: 2^n by construction

  if (n <= kMaxBruteForceDegree) {
    r.full_table_checked = true;
    struct Tally {
      std::uint64_t mismatches = 0, violations = 0;
    };
    const Tally t = partition_reduce<Tally>(
        size, threads,
        [&](std::uint64_t begin, std::uint64_t end) {
          Tally part;
          for (std::uint64_t a = begin; a < end; ++a) {
            for (Word b = 0; b < size; ++b) {
              const std::uint32_t got = fbct_entry(f, static_cast<Word>(a), b);
              if (predict_fbct_entry(field, static_cast<Word>(a), b).value != got) ++part.mismatches;
              if (got % 4 != 0) ++part.violations;
            }
          }
          return part;
        },
        [](Tally& acc, const Tally& part) {
          acc.mismatches += part.mismatches;
          acc.violations += part.violations;
        });
    r.entries_checked += size * size;
    r.entry_mismatches += t.mismatches;
    r.mod4_checked += size * size;
    r.mod4_violations += t.violations;
  }

  r.pass = r.spectrum_match && r.entry_mismatches == 0 && r.mod4_violations == 0 &&
           r.uniformity == r.predicted_uniformity && r.kloosterman == r.kloosterman_direct;
  return r;
}

inline nlohmann::ordered_json report_to_json(const TheoremReport& r) {
  nlohmann::ordered_json j;
  j["n"] = r.n;
  j["modulus"] = to_hex(r.modulus);
  j["kloosterman"] = r.kloosterman;
  nlohmann::ordered_json predicted = nlohmann::ordered_json::object();
  for (const auto& [value, freq] : r.predicted.theta) predicted[std::to_string(value)] = freq;
  nlohmann::ordered_json computed = nlohmann::ordered_json::object();
  for (const auto& [value, freq] : r.computed.counts) computed[std::to_string(value)] = freq;
  j["predicted"] = predicted;
  j["computed"] = computed;
  j["entry_mismatches"] = r.entry_mismatches;
  j["pass"] = r.pass;
  j["entries_checked"] = r.entries_checked;
  j["full_table_checked"] = r.full_table_checked;
  j["kloosterman_direct"] = r.kloosterman_direct;
  j["spectrum_match"] = r.spectrum_match;
  j["uniformity"] = r.uniformity;
  j["predicted_uniformity"] = r.predicted_uniformity;
  j["mod4_checked"] = r.mod4_checked;
  j["mod4_violations"] = r.mod4_violations;
  if (!r.within_hypothesis) j["note"] = "outside theorem hypothesis (n>6)";
  return j;
}

}  // namespace fbct
