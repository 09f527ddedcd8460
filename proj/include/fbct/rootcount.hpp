#pragma once

// Root counting over GF(2^n) for quadratics, depressed cubics t^3 + p t + q,
// and quartics x^4 + a2 x^2 + a1 x + a0 with a0 a1 != 0.
//
// Quartics are classified through the companion cubic G(y) = y^3 + a2 y + a1
// and the traces of w_i = a0 r_i^2 / a1^2 over the roots r_i of G
// (Leonard-Williams):
//   case 1  G = 1+1+1, all Tr(w_i) = 0          quartic 1+1+1+1
//   case 2  G = 1+1+1, one Tr(w_i) = 0, two = 1 quartic 2+2
//   case 3  G = 3                               quartic 1+3
//   case 4  G = 1+2, Tr(w_1) = 0                quartic 1+1+2
//   case 5  G = 1+2, Tr(w_1) = 1                quartic 4
// Configurations outside this list fall back to counting by evaluation.

#include <algorithm>
#include <array>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "fbct/errors.hpp"
#include "fbct/field.hpp"

namespace fbct {

/// Degrees of the irreducible factors, ascending ("1+1+2").
struct FactorPattern {
  std::vector<unsigned> parts;

  unsigned root_count() const { return static_cast<unsigned>(std::count(parts.begin(), parts.end(), 1u)); }

  std::string to_string() const {
    std::string out;
    for (unsigned p : parts) {
      if (!out.empty()) out += '+';
      out += std::to_string(p);
    }
    return out;
  }

  friend bool operator==(const FactorPattern&, const FactorPattern&) = default;
};

/// Roots in GF(2^n) of a*x^2 + b*x + c, a != 0.
///   b = 0                  -> 1 (squaring is bijective)
///   b != 0, Tr(ac/b^2) = 0 -> 2
///   otherwise              -> 0
inline unsigned quadratic_root_count(const Field& field, Word a, Word b, Word c) {
  if (a == 0) throw UsageError("leading coefficient is zero; not a quadratic");
  if (b == 0) return 1;
  return field.trace(field.mul(field.mul(a, c), field.inv(field.sqr(b)))) == 0 ? 2 : 0;
}

/// Roots of t^3 + p t + q, repeated according to multiplicity, ascending.
inline std::vector<Word> cubic_roots(const Field& field, Word p, Word q) {
  std::vector<Word> roots;
  for (Word t : field.elements()) {
    if ((field.mul(field.sqr(t), t) ^ field.mul(p, t) ^ q) != 0) continue;
    // the formal derivative is t^2 + p; (t + r)^3 needs r = 0
    unsigned mult = 1;
    if (field.sqr(t) == p) mult = (t == 0 && q == 0) ? 3 : 2;
    roots.insert(roots.end(), mult, t);
  }
  return roots;
}

/// Factorization pattern of a cubic from its number of roots (with multiplicity).
inline FactorPattern cubic_pattern(std::size_t root_count) {
  switch (root_count) {
    case 3: return {{1, 1, 1}};
    case 1: return {{1, 2}};
    default: return {{3}};
  }
}

struct QuarticShape {
  Word a2 = 0;
  Word a1 = 0;
  Word a0 = 0;

  bool admissible() const { return a0 != 0 && a1 != 0; }
};

struct QuarticClassification {
  FactorPattern quartic;
  FactorPattern cubic;
  std::vector<Word> cubic_roots;      // roots of G
  std::vector<Word> omegas;           // a0 r^2 / a1^2 per root of G
  std::vector<unsigned> omega_traces;
  int listed_case = 0;                 // 1..5, 0 when the fallback was used
  bool degenerate = false;            // G has a repeated root
  bool unlisted = false;              // G splits but the traces match no listed case
};

inline Word eval_quartic(const Field& field, const QuarticShape& q, Word x) {
  const Word x2 = field.sqr(x);
  return field.sqr(x2) ^ field.mul(q.a2, x2) ^ field.mul(q.a1, x) ^ q.a0;
}

inline unsigned quartic_root_count_exhaustive(const Field& field, const QuarticShape& q) {
  unsigned count = 0;
  for (Word x : field.elements()) count += eval_quartic(field, q, x) == 0;
  return count;
}

namespace detail {

using Residue = std::array<Word, 4>;  // polynomial of degree < 4

// r^2 mod x^4 + a2 x^2 + a1 x + a0
inline Residue square_mod_quartic(const Field& field, const QuarticShape& q, const Residue& r) {
  std::array<Word, 7> prod{};
  for (int i = 0; i < 4; ++i) prod[2 * i] = field.sqr(r[i]);  // cross terms cancel in characteristic 2
  for (int d = 6; d >= 4; --d) {
    const Word lead = prod[d];
    if (lead == 0) continue;
    prod[d] = 0;
    prod[d - 2] ^= field.mul(lead, q.a2);
    prod[d - 3] ^= field.mul(lead, q.a1);
    prod[d - 4] ^= field.mul(lead, q.a0);
  }
  return {prod[0], prod[1], prod[2], prod[3]};
}

// Pattern of a separable quartic with the given number of roots. With no
// roots it is 2+2 exactly when x^(q^2) = x modulo the quartic, q = 2^n.
inline FactorPattern quartic_pattern_by_frobenius(const Field& field, const QuarticShape& q, unsigned roots) {
  switch (roots) {
    case 4: return {{1, 1, 1, 1}};
    case 2: return {{1, 1, 2}};
    case 1: return {{1, 3}};
    default: break;
  }
  Residue r{0, 1, 0, 0};
  for (unsigned i = 0; i < 2 * field.degree(); ++i) r = square_mod_quartic(field, q, r);
  return r == Residue{0, 1, 0, 0} ? FactorPattern{{2, 2}} : FactorPattern{{4}};
}

}  // namespace detail

inline QuarticClassification quartic_classify(const Field& field, const QuarticShape& q) {
  if (!q.admissible()) throw UsageError("quartic classification requires a0 * a1 != 0");
  if (!field.contains(q.a0) || !field.contains(q.a1) || !field.contains(q.a2)) {
    throw UsageError("quartic coefficients are not field elements");
  }
  QuarticClassification out;
  out.cubic_roots = cubic_roots(field, q.a2, q.a1);
  out.cubic = cubic_pattern(out.cubic_roots.size());
  out.degenerate = std::adjacent_find(out.cubic_roots.begin(), out.cubic_roots.end()) != out.cubic_roots.end();

  const Word scale = field.mul(q.a0, field.inv(field.sqr(q.a1)));
  for (Word r : out.cubic_roots) {
    const Word w = field.mul(scale, field.sqr(r));
    out.omegas.push_back(w);
    out.omega_traces.push_back(field.trace(w));
  }

  auto fallback = [&] {
    out.listed_case = 0;
    out.quartic = detail::quartic_pattern_by_frobenius(field, q, quartic_root_count_exhaustive(field, q));
  };

  if (out.degenerate) {
    fallback();
    return out;
  }
  const unsigned ones = std::accumulate(out.omega_traces.begin(), out.omega_traces.end(), 0u);
  switch (out.cubic_roots.size()) {
    case 3:
      if (ones == 0) {
        out.listed_case = 1;
        out.quartic = {{1, 1, 1, 1}};
      } else if (ones == 2) {
        out.listed_case = 2;
        out.quartic = {{2, 2}};
      } else {
        out.unlisted = true;
        fallback();
      }
      break;
    case 1:
      if (ones == 0) {
        out.listed_case = 4;
        out.quartic = {{1, 1, 2}};
      } else {
        out.listed_case = 5;
        out.quartic = {{4}};
      }
      break;
    default:
      // irreducible G: one linear factor times an irreducible cubic
      out.listed_case = 3;
      out.quartic = {{1, 3}};
      break;
  }
  return out;
}

inline unsigned quartic_root_count(const Field& field, const QuarticShape& q) {
  return quartic_classify(field, q).quartic.root_count();
}

}  // namespace fbct
