#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace weaksym {

// Exact rational coefficients. No floating point anywhere in the engine.
using Rat = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

inline std::string rat_to_string(const Rat& r) { return r.str(); }

inline bool rat_is_integer(const Rat& r) { return denominator(r) == 1; }

// gcd of |numerators| over lcm of denominators; gcd(0,0) = 0
inline Rat rat_content_gcd(const Rat& a, const Rat& b) {
  BigInt n = boost::multiprecision::gcd(numerator(a), numerator(b));
  BigInt d = boost::multiprecision::lcm(denominator(a), denominator(b));
  if (d == 0) return Rat(0);
  return Rat(n, d);
}

}  // namespace weaksym
