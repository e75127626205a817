#pragma once

// Exact integer and rational arithmetic used for hypermatrix coefficients.

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace hyperspec {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline double to_double(const Rational& q) { return q.convert_to<double>(); }
inline double to_double(const BigInt& z) { return z.convert_to<double>(); }

/// "p/q", or "p" when the denominator is 1.
inline std::string to_string(const Rational& q) {
  const BigInt& num = boost::multiprecision::numerator(q);
  const BigInt& den = boost::multiprecision::denominator(q);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

inline BigInt ipow(const BigInt& base, unsigned exp) {
  return boost::multiprecision::pow(base, exp);
}

inline Rational rpow(const Rational& base, unsigned exp) {
  Rational r = 1;
  for (unsigned i = 0; i < exp; ++i) r *= base;
  return r;
}

inline BigInt binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  BigInt r = 1;
  for (unsigned i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

/// Integer k-th root of a non-negative integer when it is exact.
inline bool exact_root(const BigInt& value, unsigned k, BigInt& root) {
  if (value < 0 || k == 0) return false;
  if (value < 2 || k == 1) {
    root = value;
    return true;
  }
  BigInt lo = 0;
  BigInt hi = 1;
  while (ipow(hi, k) < value) hi *= 2;
  while (lo < hi) {
    BigInt mid = (lo + hi) / 2;
    if (ipow(mid, k) < value)
      lo = mid + 1;
    else
      hi = mid;
  }
  root = lo;
  return ipow(lo, k) == value;
}

}  // namespace hyperspec
