#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace u6ncay {

// Exact integer type for cyclotomic coefficients and characteristic
// polynomials. Character sums stay small, but Faddeev-LeVerrier
// intermediates exceed 250 bits for the largest graphs handled here.
using BigInt = boost::multiprecision::cpp_int;

// Floor square root, v >= 0.
inline BigInt isqrt(const BigInt& v) { return boost::multiprecision::sqrt(v); }

inline bool is_perfect_square(const BigInt& v, BigInt* root = nullptr) {
  if (v < 0) return false;
  BigInt r = isqrt(v);
  if (r * r != v) return false;
  if (root) *root = r;
  return true;
}

}  // namespace u6ncay
