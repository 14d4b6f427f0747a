#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace flaggraph {

// Group orders and factorials overflow 64 bits well inside the supported
// parameter range (2^15 * 15! already needs 56 bits, (6!)^28 far more),
// so every order-valued quantity is exact arbitrary precision.
using BigInt = boost::multiprecision::cpp_int;

inline BigInt big_factorial(int m) {
  BigInt r = 1;
  for (int i = 2; i <= m; ++i) r *= i;
  return r;
}

inline BigInt big_pow(const BigInt& base, std::int64_t exp) {
  BigInt r = 1, b = base;
  for (std::int64_t e = exp; e > 0; e >>= 1) {
    if (e & 1) r *= b;
    b *= b;
  }
  return r;
}

inline std::string big_to_string(const BigInt& v) { return v.str(); }

}  // namespace flaggraph
