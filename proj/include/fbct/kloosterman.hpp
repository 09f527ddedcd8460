#pragma once

// Binary Kloosterman sum at 1 and the related character sum
//   S = sum_x (-1)^Tr((x+1)/(x^2+x+1)),
// each computed two ways: a full-field sum and an exact closed form.

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "fbct/errors.hpp"
#include "fbct/field.hpp"

namespace fbct {

using BigInt = boost::multiprecision::cpp_int;

inline constexpr unsigned kMaxCarlitzDegree = 64;

/// K_n(1) = sum over x of (-1)^Tr(x + 1/x), with 1/0 = 0.
inline std::int64_t kloosterman_direct(const Field& field) {
  std::int64_t sum = 0;
  for (Word x : field.elements()) sum += field.trace(x ^ field.inv(x)) ? -1 : 1;
  return sum;
}

/// Carlitz:
///   K_n(1) = 1 + (-1)^(n-1) / 2^(n-1) * sum_{i=0}^{floor(n/2)} (-1)^i C(n, 2i) 7^i
/// in exact integer arithmetic.
inline std::int64_t kloosterman_carlitz(unsigned n) {
  if (n < kMinDegree || n > kMaxCarlitzDegree) {
    throw UsageError("Carlitz evaluation needs 2 <= n <= 64, got " + std::to_string(n));
  }
  BigInt sum = 0;
  BigInt binom = 1;  // C(n, k), advanced one k at a time
  BigInt seven_pow = 1;
  for (unsigned k = 0; k <= n; ++k) {
    if (k % 2 == 0) {
      const unsigned i = k / 2;
      sum += (i % 2 == 0 ? BigInt(1) : BigInt(-1)) * binom * seven_pow;
      seven_pow *= 7;
    }
    binom = binom * (n - k) / (k + 1);
  }
  if ((n - 1) % 2 == 1) sum = -sum;
  const BigInt denom = BigInt(1) << (n - 1);
  if (sum % denom != 0) {
    throw ConsistencyError("Carlitz sum is not divisible by 2^(n-1) for n = " + std::to_string(n));
  }
  return static_cast<std::int64_t>(1 + sum / denom);
}

/// S = sum over x of (-1)^Tr((x+1) / (x^2+x+1)), with 1/0 = 0 at the cube
/// roots of unity (present only for even n).
inline std::int64_t quadratic_character_sum_direct(const Field& field) {
  std::int64_t sum = 0;
  for (Word x : field.elements()) {
    const Word den = field.sqr(x) ^ x ^ 1u;
    sum += field.trace(field.mul(x ^ 1u, field.inv(den))) ? -1 : 1;
  }
  return sum;
}

/// Closed form of the same sum: K_n(1) - 2 for odd n, K_n(1) for even n.
inline std::int64_t quadratic_character_sum_formula(unsigned n) {
  const std::int64_t k = kloosterman_carlitz(n);
  return n % 2 == 1 ? k - 2 : k;
}

}  // namespace fbct
