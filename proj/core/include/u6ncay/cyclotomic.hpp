#pragma once

#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "u6ncay/bigint.hpp"

namespace u6ncay {

// Integer polynomial, coefficients in ascending degree order.
using IntPoly = std::vector<BigInt>;

int euler_totient(int m);

// m-th cyclotomic polynomial Phi_m (monic, ascending coefficients), computed
// by exact division of x^m - 1 by the product of Phi_d over proper divisors
// d of m. Results are cached; the returned reference stays valid.
const IntPoly& cyclotomic_poly(int m);

// Exact quotient num/den for monic den; the division must be remainder-free.
IntPoly poly_div_exact(IntPoly num, const IntPoly& den);

/// An element of Z[w], w = exp(2*pi*i/m), kept in canonical reduced form:
/// a polynomial in w of degree < phi(m), reduced modulo Phi_m. Two values
/// of the same ring are equal iff their coefficient vectors are equal.
class CycValue {
 public:
  CycValue() : m_(1), c_(1) {}

  static CycValue zero(int m);
  static CycValue from_integer(int m, BigInt v);
  // w^e, e taken mod m (negative e allowed).
  static CycValue root_power(int m, long long e);

  int order() const { return m_; }
  const std::vector<BigInt>& coeffs() const { return c_; }
  bool is_zero() const;

  CycValue& operator+=(const CycValue& o);
  CycValue& operator-=(const CycValue& o);
  friend CycValue operator+(CycValue a, const CycValue& b) { return a += b; }
  friend CycValue operator-(CycValue a, const CycValue& b) { return a -= b; }
  friend CycValue operator-(const CycValue& a);
  friend CycValue operator*(const CycValue& a, const CycValue& b);
  // scalar multiple
  friend CycValue operator*(const BigInt& s, const CycValue& a);

  // The integer c iff the reduced form is the constant polynomial c.
  // (Rational algebraic integers are integers, so this is exactly the
  // integer case.)
  std::optional<BigInt> as_integer() const;

  // Evaluation at exp(2*pi*i/m) in double precision.
  std::complex<double> numeric() const;

  // Complex conjugate, exact (w -> w^{-1}).
  CycValue conjugate() const;

  // Rendering as a polynomial in w, e.g. "2w^2 - w + 1".
  std::string str() const;

  friend bool operator==(const CycValue&, const CycValue&) = default;

 private:
  int m_;
  std::vector<BigInt> c_;  // length phi(m)

  static CycValue reduced(int m, std::vector<BigInt> raw);
  static void check_same_ring(const CycValue& a, const CycValue& b);
};

}  // namespace u6ncay
