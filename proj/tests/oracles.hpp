#pragma once

// Test-only reference implementations, deliberately naive and independent
// of the library's code paths.

#include <cstdint>
#include <vector>

namespace oracle {

// Schoolbook carry-less product followed by long division.
inline std::uint32_t mul(unsigned n, std::uint64_t modulus, std::uint32_t x, std::uint32_t y) {
  std::uint64_t prod = 0;
  for (unsigned i = 0; i < 32; ++i) {
    if ((y >> i) & 1u) prod ^= std::uint64_t{x} << i;
  }
  for (int bit = 63; bit >= static_cast<int>(n); --bit) {
    if ((prod >> bit) & 1u) prod ^= modulus << (bit - static_cast<int>(n));
  }
  return static_cast<std::uint32_t>(prod);
}

// x^d by d repeated multiplications.
inline std::uint32_t pow_slow(unsigned n, std::uint64_t modulus, std::uint32_t x, std::uint64_t d) {
  std::uint32_t r = 1;
  for (std::uint64_t i = 0; i < d; ++i) r = mul(n, modulus, r, x);
  return r;
}

// Tr(x) = x + x^2 + ... + x^(2^(n-1)), computed literally.
inline unsigned trace(unsigned n, std::uint64_t modulus, std::uint32_t x) {
  std::uint32_t acc = 0, y = x;
  for (unsigned i = 0; i < n; ++i) {
    acc ^= y;
    y = mul(n, modulus, y, y);
  }
  return acc;
}

// Inverse by searching for the y with x*y = 1; 0 maps to 0.
inline std::uint32_t inv_search(unsigned n, std::uint64_t modulus, std::uint32_t x) {
  if (x == 0) return 0;
  for (std::uint32_t y = 1; y < (1u << n); ++y) {
    if (mul(n, modulus, x, y) == 1) return y;
  }
  return 0;
}

// Every reducible polynomial of degree n is a product of two polynomials of
// degree >= 1; mark them all and return the smallest unmarked one.
inline std::uint64_t smallest_irreducible(unsigned n) {
  std::vector<bool> reducible(std::size_t{1} << (n + 1), false);
  auto clmul = [](std::uint64_t a, std::uint64_t b) {
    std::uint64_t r = 0;
    for (unsigned i = 0; i < 32; ++i)
      if ((b >> i) & 1u) r ^= a << i;
    return r;
  };
  for (unsigned da = 1; da <= n / 2; ++da) {
    const unsigned db = n - da;
    for (std::uint64_t a = std::uint64_t{1} << da; a < (std::uint64_t{2} << da); ++a)
      for (std::uint64_t b = std::uint64_t{1} << db; b < (std::uint64_t{2} << db); ++b) reducible[clmul(a, b)] = true;
  }
  for (std::uint64_t p = std::uint64_t{1} << n; p < (std::uint64_t{2} << n); ++p)
    if (!reducible[p]) return p;
  return 0;
}

}  // namespace oracle
