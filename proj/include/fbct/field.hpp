#pragma once

// Arithmetic in GF(2^n), 2 <= n <= 24, polynomial basis.
//
// Elements are n-bit words: bit i is the coefficient of t^i. The modulus is
// stored the same way with bit n set. Inversion maps 0 to 0 everywhere in
// this library, so 1/x is a total function.

#include <array>
#include <bit>
#include <cstdint>
#include <ranges>
#include <string>
#include <string_view>
#include <vector>

#include "fbct/errors.hpp"

namespace fbct {

using Word = std::uint32_t;

inline constexpr unsigned kMinDegree = 2;
inline constexpr unsigned kMaxDegree = 24;

namespace detail {

constexpr int poly_degree(std::uint64_t p) { return p == 0 ? -1 : 63 - std::countl_zero(p); }

constexpr std::uint64_t poly_mod(std::uint64_t a, std::uint64_t m) {
  const int dm = poly_degree(m);
  for (int da = poly_degree(a); da >= dm; da = poly_degree(a)) a ^= m << (da - dm);
  return a;
}

}  // namespace detail

/// Trial division by every polynomial of degree 1..deg/2.
constexpr bool is_irreducible(std::uint64_t poly) {
  const int deg = detail::poly_degree(poly);
  if (deg < 1) return false;
  const std::uint64_t limit = std::uint64_t{1} << (deg / 2 + 1);
  for (std::uint64_t q = 2; q < limit; ++q) {
    if (detail::poly_mod(poly, q) == 0) return false;
  }
  return true;
}

/// Smallest irreducible polynomial of degree n, ordered by integer encoding.
inline std::uint64_t default_modulus(unsigned n) {
  static constexpr std::array<std::uint64_t, kMaxDegree + 1> table = {
      0,        0,        0x7,      0xb,       0x13,      0x25,      0x43,
      0x83,     0x11b,    0x203,    0x409,     0x805,     0x1009,    0x201b,
      0x4021,   0x8003,   0x1002b,  0x20009,   0x40009,   0x80027,   0x100009,
      0x200005, 0x400003, 0x800021, 0x100001b,
  };
  if (n < kMinDegree || n > kMaxDegree) {
    throw UsageError("field degree must be in [2, 24], got " + std::to_string(n));
  }
  return table[n];
}

inline std::string to_hex(std::uint64_t v) {
  static constexpr char digits[] = "0123456789abcdef";
  if (v == 0) return "0x0";
  std::string out;
  while (v != 0) {
    out.insert(out.begin(), digits[v & 0xf]);
    v >>= 4;
  }
  return "0x" + out;
}

/// Accepts "0x1b", "0X1B" or bare "1b".
inline std::uint64_t parse_hex(std::string_view text) {
  if (text.size() >= 2 && text[0] == '0' && (text[1] == 'x' || text[1] == 'X')) text.remove_prefix(2);
  if (text.empty() || text.size() > 16) throw UsageError("malformed hex value");
  std::uint64_t v = 0;
  for (char ch : text) {
    unsigned digit;
    if (ch >= '0' && ch <= '9') digit = static_cast<unsigned>(ch - '0');
    else if (ch >= 'a' && ch <= 'f') digit = static_cast<unsigned>(ch - 'a' + 10);
    else if (ch >= 'A' && ch <= 'F') digit = static_cast<unsigned>(ch - 'A' + 10);
    else throw UsageError("malformed hex value");
    v = (v << 4) | digit;
  }
  return v;
}

/// GF(2^n) defined by a monic irreducible modulus. Immutable value type.
class Field {
 public:
  explicit Field(unsigned n) : Field(n, default_modulus(n)) {}

  Field(unsigned n, std::uint64_t modulus) : n_(n), modulus_(modulus) {
    if (n < kMinDegree || n > kMaxDegree) {
      throw UsageError("field degree must be in [2, 24], got " + std::to_string(n));
    }
    if (detail::poly_degree(modulus) != static_cast<int>(n)) {
      throw UsageError("modulus " + to_hex(modulus) + " does not have degree " + std::to_string(n));
    }
    if (!is_irreducible(modulus)) {
      throw UsageError("modulus " + to_hex(modulus) + " is reducible over GF(2)");
    }
    mask_ = static_cast<Word>((std::uint64_t{1} << n) - 1);
    for (unsigned i = 0; i < n; ++i) {
      if (trace_by_frobenius(Word{1} << i)) trace_mask_ |= Word{1} << i;
    }
  }

  unsigned degree() const { return n_; }
  std::uint64_t modulus() const { return modulus_; }
  std::uint64_t size() const { return std::uint64_t{1} << n_; }
  /// 2^n - 1, the order of the multiplicative group.
  std::uint64_t group_order() const { return size() - 1; }
  Word mask() const { return mask_; }
  bool contains(Word x) const { return (x & ~mask_) == 0; }

  static constexpr Word zero() { return 0; }
  static constexpr Word one() { return 1; }

  static constexpr Word add(Word x, Word y) { return x ^ y; }

  Word mul(Word x, Word y) const {
    std::uint64_t a = x;
    const std::uint64_t top = std::uint64_t{1} << n_;
    Word r = 0;
    while (y != 0) {
      if (y & 1u) r ^= static_cast<Word>(a);
      y >>= 1;
      a <<= 1;
      if (a & top) a ^= modulus_;
    }
    return r;
  }

  Word sqr(Word x) const { return mul(x, x); }

  /// Square-and-multiply. For x != 0 the exponent is reduced mod 2^n - 1;
  /// pow(0, d) = 0 for d > 0 and pow(x, 0) = 1 (including x = 0).
  Word pow(Word x, std::uint64_t d) const {
    if (d == 0) return 1;
    if (x == 0) return 0;
    d %= group_order();
    Word result = 1;
    Word base = x;
    while (d != 0) {
      if (d & 1u) result = mul(result, base);
      base = sqr(base);
      d >>= 1;
    }
    return result;
  }

  /// Multiplicative inverse with inv(0) = 0. Binary extended Euclid; agrees
  /// with pow(x, 2^n - 2) on every element.
  Word inv(Word x) const {
    if (x == 0) return 0;
    std::uint64_t u = x, v = modulus_, g1 = 1, g2 = 0;
    while (u != 1) {
      int j = detail::poly_degree(u) - detail::poly_degree(v);
      if (j < 0) {
        std::swap(u, v);
        std::swap(g1, g2);
        j = -j;
      }
      u ^= v << j;
      g1 ^= g2 << j;
    }
    return static_cast<Word>(g1);
  }

  Word div(Word x, Word y) const { return mul(x, inv(y)); }

  /// Absolute trace Tr(x) = x + x^2 + ... + x^(2^(n-1)), as 0 or 1.
  unsigned trace(Word x) const { return static_cast<unsigned>(std::popcount(x & trace_mask_) & 1); }

  /// x^(2^k) == x, i.e. x lies in the subfield GF(2^k) (as a set; meaningful when k | n).
  bool in_subfield(Word x, unsigned k) const {
    Word y = x;
    for (unsigned i = 0; i < k; ++i) y = sqr(y);
    return y == x;
  }

  /// All 2^n elements in increasing integer order.
  auto elements() const { return std::views::iota(Word{0}, static_cast<Word>(size())); }

  /// Smallest element (by encoding) generating the multiplicative group.
  Word primitive_element() const {
    const std::uint64_t order = group_order();
    std::vector<std::uint64_t> primes;
    std::uint64_t rest = order;
    for (std::uint64_t p = 2; p * p <= rest; ++p) {
      if (rest % p == 0) {
        primes.push_back(p);
        while (rest % p == 0) rest /= p;
      }
    }
    if (rest > 1) primes.push_back(rest);
    for (Word g = 2; g <= mask_; ++g) {
      bool generator = true;
      for (std::uint64_t p : primes) {
        if (pow(g, order / p) == 1) {
          generator = false;
          break;
        }
      }
      if (generator) return g;
    }
    return 1;  // GF(2^n)* is cyclic, unreachable for valid moduli; n=1 is excluded
  }

  friend bool operator==(const Field& a, const Field& b) {
    return a.n_ == b.n_ && a.modulus_ == b.modulus_;
  }

 private:
  unsigned trace_by_frobenius(Word x) const {
    Word acc = 0;
    Word y = x;
    for (unsigned i = 0; i < n_; ++i) {
      acc ^= y;
      y = sqr(y);
    }
    return acc;  // lies in GF(2), so 0 or 1
  }

  unsigned n_;
  std::uint64_t modulus_;
  Word mask_ = 0;
  Word trace_mask_ = 0;
};

/// An element bound to its field. Mixing elements of different fields
/// throws UsageError.
class FieldElement {
 public:
  FieldElement(Field field, Word bits) : field_(field), bits_(bits) {
    if (!field_.contains(bits)) throw UsageError("value " + to_hex(bits) + " is not a field element");
  }

  const Field& field() const { return field_; }
  Word bits() const { return bits_; }
  bool is_zero() const { return bits_ == 0; }

  FieldElement inv() const { return {field_, field_.inv(bits_)}; }
  FieldElement pow(std::uint64_t d) const { return {field_, field_.pow(bits_, d)}; }
  unsigned trace() const { return field_.trace(bits_); }

  friend FieldElement operator+(const FieldElement& x, const FieldElement& y) {
    check_same(x, y);
    return {x.field_, Field::add(x.bits_, y.bits_)};
  }
  friend FieldElement operator*(const FieldElement& x, const FieldElement& y) {
    check_same(x, y);
    return {x.field_, x.field_.mul(x.bits_, y.bits_)};
  }
  friend bool operator==(const FieldElement& x, const FieldElement& y) {
    return x.field_ == y.field_ && x.bits_ == y.bits_;
  }

 private:
  static void check_same(const FieldElement& x, const FieldElement& y) {
    if (!(x.field_ == y.field_)) throw UsageError("elements belong to different fields");
  }

  Field field_;
  Word bits_;
};

}  // namespace fbct
