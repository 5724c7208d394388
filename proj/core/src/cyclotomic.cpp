#include "u6ncay/cyclotomic.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <stdexcept>

namespace u6ncay {

int euler_totient(int m) {
  if (m < 1) throw std::invalid_argument("euler_totient: m must be positive");
  int result = m;
  int x = m;
  for (int p = 2; p * p <= x; ++p) {
    if (x % p == 0) {
      result -= result / p;
      while (x % p == 0) x /= p;
    }
  }
  if (x > 1) result -= result / x;
  return result;
}

IntPoly poly_div_exact(IntPoly num, const IntPoly& den) {
  const int dn = static_cast<int>(num.size()) - 1;
  const int dd = static_cast<int>(den.size()) - 1;
  if (dd < 0 || den[dd] != 1)
    throw std::invalid_argument("poly_div_exact: divisor must be monic");
  if (dn < dd) throw std::invalid_argument("poly_div_exact: degree underflow");
  IntPoly q(dn - dd + 1);
  for (int d = dn; d >= dd; --d) {
    BigInt c = num[d];
    if (c == 0) continue;
    q[d - dd] = c;
    for (int t = 0; t <= dd; ++t) num[d - dd + t] -= c * den[t];
  }
  for (const BigInt& r : num)
    if (r != 0) throw std::logic_error("poly_div_exact: nonzero remainder");
  return q;
}

namespace {

// Fills the cache for m (and its divisors). Caller holds the lock.
const IntPoly& phi_locked(int m, std::map<int, IntPoly>& cache) {
  auto it = cache.find(m);
  if (it != cache.end()) return it->second;
  IntPoly p(m + 1);
  p[0] = -1;
  p[m] = 1;  // x^m - 1
  for (int d = 1; d < m; ++d)
    if (m % d == 0) p = poly_div_exact(std::move(p), phi_locked(d, cache));
  return cache.emplace(m, std::move(p)).first->second;
}

}  // namespace

const IntPoly& cyclotomic_poly(int m) {
  if (m < 1) throw std::invalid_argument("cyclotomic_poly: m must be positive");
  static std::mutex mu;
  static std::map<int, IntPoly> cache;  // node-based: references stay valid
  std::lock_guard<std::mutex> lock(mu);
  return phi_locked(m, cache);
}

CycValue CycValue::zero(int m) {
  if (m < 1) throw std::invalid_argument("CycValue: m must be positive");
  CycValue v;
  v.m_ = m;
  v.c_.assign(euler_totient(m), BigInt(0));
  return v;
}

CycValue CycValue::from_integer(int m, BigInt val) {
  CycValue v = zero(m);
  // phi(1) = 1 and Phi_1 = x - 1, so the constant slot is valid for all m
  // except that in ring m = 1 the basis element is w^0 = 1 as well.
  v.c_[0] = std::move(val);
  return v;
}

CycValue CycValue::reduced(int m, std::vector<BigInt> raw) {
  const IntPoly& phi = cyclotomic_poly(m);
  const int k = static_cast<int>(phi.size()) - 1;  // deg Phi_m
  for (int d = static_cast<int>(raw.size()) - 1; d >= k; --d) {
    if (raw[d] == 0) continue;
    BigInt q = raw[d];
    for (int t = 0; t <= k; ++t) raw[d - k + t] -= q * phi[t];
  }
  raw.resize(k);
  CycValue v;
  v.m_ = m;
  v.c_ = std::move(raw);
  return v;
}

CycValue CycValue::root_power(int m, long long e) {
  if (m < 1) throw std::invalid_argument("CycValue: m must be positive");
  long long r = e % m;
  if (r < 0) r += m;
  std::vector<BigInt> raw(static_cast<std::size_t>(r) + 1);
  raw.back() = 1;
  return reduced(m, std::move(raw));
}

void CycValue::check_same_ring(const CycValue& a, const CycValue& b) {
  if (a.m_ != b.m_)
    throw std::invalid_argument("CycValue: mixed cyclotomic orders " +
                                std::to_string(a.m_) + " and " +
                                std::to_string(b.m_));
}

bool CycValue::is_zero() const {
  for (const BigInt& c : c_)
    if (c != 0) return false;
  return true;
}

CycValue& CycValue::operator+=(const CycValue& o) {
  check_same_ring(*this, o);
  for (std::size_t t = 0; t < c_.size(); ++t) c_[t] += o.c_[t];
  return *this;
}

CycValue& CycValue::operator-=(const CycValue& o) {
  check_same_ring(*this, o);
  for (std::size_t t = 0; t < c_.size(); ++t) c_[t] -= o.c_[t];
  return *this;
}

CycValue operator-(const CycValue& a) {
  CycValue r = a;
  for (BigInt& c : r.c_) c = -c;
  return r;
}

CycValue operator*(const CycValue& a, const CycValue& b) {
  CycValue::check_same_ring(a, b);
  std::vector<BigInt> raw(a.c_.size() + b.c_.size(), BigInt(0));
  for (std::size_t s = 0; s < a.c_.size(); ++s) {
    if (a.c_[s] == 0) continue;
    for (std::size_t t = 0; t < b.c_.size(); ++t) {
      if (b.c_[t] == 0) continue;
      raw[s + t] += a.c_[s] * b.c_[t];
    }
  }
  return CycValue::reduced(a.m_, std::move(raw));
}

CycValue operator*(const BigInt& s, const CycValue& a) {
  CycValue r = a;
  for (BigInt& c : r.c_) c *= s;
  return r;
}

std::optional<BigInt> CycValue::as_integer() const {
  for (std::size_t t = 1; t < c_.size(); ++t)
    if (c_[t] != 0) return std::nullopt;
  return c_[0];
}

std::complex<double> CycValue::numeric() const {
  std::complex<double> acc(0.0, 0.0);
  const double step = 2.0 * std::numbers::pi / static_cast<double>(m_);
  for (std::size_t t = 0; t < c_.size(); ++t) {
    if (c_[t] == 0) continue;
    acc += c_[t].convert_to<double>() *
           std::polar(1.0, step * static_cast<double>(t));
  }
  return acc;
}

CycValue CycValue::conjugate() const {
  std::vector<BigInt> raw(static_cast<std::size_t>(m_), BigInt(0));
  for (std::size_t t = 0; t < c_.size(); ++t) {
    if (c_[t] == 0) continue;
    raw[(m_ - static_cast<int>(t)) % m_] += c_[t];
  }
  return reduced(m_, std::move(raw));
}

std::string CycValue::str() const {
  std::string out;
  for (int t = static_cast<int>(c_.size()) - 1; t >= 0; --t) {
    if (c_[t] == 0) continue;
    const bool first = out.empty();
    BigInt c = c_[t];
    if (c < 0) {
      out += first ? "-" : " - ";
      c = -c;
    } else if (!first) {
      out += " + ";
    }
    if (c != 1 || t == 0) out += c.str();
    if (t >= 1) {
      out += "w";
      if (t > 1) out += "^" + std::to_string(t);
    }
  }
  return out.empty() ? "0" : out;
}

}  // namespace u6ncay
