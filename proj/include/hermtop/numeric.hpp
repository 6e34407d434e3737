#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>

namespace hermtop {

using BigInt = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// cpp_rational's (num, den) constructor rejects negative denominators;
// division normalizes sign and reduces.
inline Rat make_rat(const BigInt& num, const BigInt& den) {
  if (den == 0) throw std::domain_error("make_rat: zero denominator");
  return Rat(num) / Rat(den);
}

inline Rat make_rat(long long num, long long den) {
  return make_rat(BigInt(num), BigInt(den));
}

// Checked int64 arithmetic.  Ring-element coordinates stay small in all
// bounded explorations; a violation means the caller left the supported
// range and must switch to a wider type, so fail loudly.
inline long long checked_ll(__int128 v, const char* what) {
  if (v > static_cast<__int128>(INT64_MAX) || v < static_cast<__int128>(INT64_MIN))
    throw std::overflow_error(std::string("int64 overflow in ") + what);
  return static_cast<long long>(v);
}

inline long long mul_ll(long long a, long long b, const char* what = "mul") {
  return checked_ll(static_cast<__int128>(a) * b, what);
}

inline long long gcd_ll(long long a, long long b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    long long t = a % b;
    a = b;
    b = t;
  }
  return a;
}

// floor division (rounds toward -infinity)
inline long long fdiv_ll(long long a, long long b) {
  long long q = a / b, r = a % b;
  if (r != 0 && ((r < 0) != (b < 0))) --q;
  return q;
}

}  // namespace hermtop
