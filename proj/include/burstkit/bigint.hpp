#ifndef BURSTKIT_BIGINT_HPP
#define BURSTKIT_BIGINT_HPP

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace burstkit {

using BigInt = boost::multiprecision::cpp_int;

inline BigInt big_pow(std::uint64_t base, std::uint64_t exp) {
  BigInt r = 1, b = base;
  while (exp > 0) {
    if (exp & 1) r *= b;
    b *= b;
    exp >>= 1;
  }
  return r;
}

inline std::string to_string(const BigInt& v) { return v.str(); }

// a * b, saturating at UINT64_MAX.
inline std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > UINT64_MAX / a) return UINT64_MAX;
  return a * b;
}

inline std::uint64_t sat_pow(std::uint64_t base, std::uint64_t exp) {
  std::uint64_t r = 1;
  while (exp-- > 0) r = sat_mul(r, base);
  return r;
}

}  // namespace burstkit

#endif  // BURSTKIT_BIGINT_HPP
