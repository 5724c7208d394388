#include "u6ncay/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "u6ncay/charpoly.hpp"
#include "u6ncay/jacobi.hpp"

namespace u6ncay {

std::vector<double> Spectrum::expanded() const {
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(6) * n);
  for (const Entry& e : entries)
    for (int t = 0; t < e.multiplicity; ++t) out.push_back(e.value);
  return out;
}

std::string Spectrum::str() const {
  std::ostringstream os;
  os << "{";
  bool first = true;
  for (const Entry& e : entries) {
    if (!first) os << ", ";
    first = false;
    if (e.multiplicity > 1) os << "[";
    if (exact)
      os << e.ivalue;
    else
      os << e.value;
    if (e.multiplicity > 1) os << "]^" << e.multiplicity;
  }
  os << "}";
  return os.str();
}

Spectrum Spectrum::from_integer_multiset(int n, int set_size,
                                         const std::map<long long, int>& mult) {
  Spectrum s;
  s.exact = true;
  s.n = n;
  s.set_size = set_size;
  for (auto it = mult.rbegin(); it != mult.rend(); ++it)
    s.entries.push_back({static_cast<double>(it->first), it->first, it->second});
  return s;
}

bool spectra_agree(const Spectrum& a, const Spectrum& b, double tol) {
  const std::vector<double> va = a.expanded();
  const std::vector<double> vb = b.expanded();
  if (va.size() != vb.size()) return false;
  for (std::size_t t = 0; t < va.size(); ++t)
    if (std::abs(va[t] - vb[t]) > tol) return false;
  return true;
}

bool spectra_equal_exact(const Spectrum& a, const Spectrum& b) {
  if (!a.exact || !b.exact) return false;
  if (a.entries.size() != b.entries.size()) return false;
  for (std::size_t t = 0; t < a.entries.size(); ++t) {
    if (a.entries[t].ivalue != b.entries[t].ivalue ||
        a.entries[t].multiplicity != b.entries[t].multiplicity)
      return false;
  }
  return true;
}

namespace {

Spectrum group_numeric(int n, int set_size, std::vector<double> values) {
  std::sort(values.begin(), values.end(), std::greater<double>());
  Spectrum s;
  s.exact = false;
  s.n = n;
  s.set_size = set_size;
  std::size_t t = 0;
  while (t < values.size()) {
    std::size_t u = t;
    double sum = 0.0;
    while (u < values.size() && values[t] - values[u] <= kEigenvalueGroupTol) {
      sum += values[u];
      ++u;
    }
    Spectrum::Entry e;
    e.multiplicity = static_cast<int>(u - t);
    e.value = sum / e.multiplicity;
    s.entries.push_back(e);
    t = u;
  }
  return s;
}

struct QuadData {
  CycValue s;  // psi_k(S1)
  CycValue q;  // psi_k(S1^2) + psi_k(S2^2)
};

std::vector<QuadData> quad_data(const CharacterTable& table,
                                const std::vector<U6nElement>& s1,
                                const std::vector<U6nElement>& s2) {
  std::vector<QuadData> out;
  out.reserve(table.degree2.size());
  for (const CharRow& psi : table.degree2) {
    QuadData d;
    d.s = char_sum(psi, s1);
    d.q = char_sum_product(psi, s1, s1) + char_sum_product(psi, s2, s2);
    out.push_back(std::move(d));
  }
  return out;
}

}  // namespace

Spectrum babai_spectrum(const ConnectionSet& S) {
  S.validate();
  const int n = S.n;
  const CharacterTable table = char_table(n);
  const std::vector<U6nElement> all = S.elements();
  const auto [s1, s2] = parity_split(S);

  std::vector<CycValue> lambdas;
  lambdas.reserve(table.linear.size());
  for (const CharRow& chi : table.linear) lambdas.push_back(char_sum(chi, all));
  const std::vector<QuadData> quads = quad_data(table, s1, s2);

  // Exact path: every lambda_j an integer, every quadratic with integer
  // coefficients and perfect-square discriminant.
  bool exact = true;
  std::map<long long, int> mult;
  for (const CycValue& lam : lambdas) {
    const auto v = lam.as_integer();
    if (!v) {
      exact = false;
      break;
    }
    mult[v->convert_to<long long>()] += 1;
  }
  if (exact) {
    for (const QuadData& d : quads) {
      const auto s = d.s.as_integer();
      const auto q = d.q.as_integer();
      BigInt root;
      if (!s || !q || !is_perfect_square(2 * *q - *s * *s, &root)) {
        exact = false;
        break;
      }
      // s and sqrt(delta) share parity, so both roots are integers.
      const BigInt mu1 = (*s + root) / 2;
      const BigInt mu2 = (*s - root) / 2;
      mult[mu1.convert_to<long long>()] += 2;
      mult[mu2.convert_to<long long>()] += 2;
    }
  }
  if (exact) return Spectrum::from_integer_multiset(n, S.size(), mult);

  std::vector<double> values;
  values.reserve(static_cast<std::size_t>(6) * n);
  for (const CycValue& lam : lambdas) values.push_back(lam.numeric().real());
  for (const QuadData& d : quads) {
    const double s = d.s.numeric().real();
    const double q = d.q.numeric().real();
    const double disc = std::max(0.0, 2.0 * q - s * s);
    const double r = std::sqrt(disc);
    for (int t = 0; t < 2; ++t) {
      values.push_back((s + r) / 2.0);
      values.push_back((s - r) / 2.0);
    }
  }
  return group_numeric(n, S.size(), std::move(values));
}

Discriminant discriminant(const ConnectionSet& S, int k) {
  S.validate();
  if (k < 0 || k >= S.n)
    throw std::invalid_argument("discriminant: k out of range");
  const CharacterTable table = char_table(S.n);
  const auto [s1, s2] = parity_split(S);
  const CharRow& psi = table.degree2[static_cast<std::size_t>(k)];
  const CycValue s = char_sum(psi, s1);
  const CycValue q = char_sum_product(psi, s1, s1) + char_sum_product(psi, s2, s2);
  return Discriminant{k, BigInt(2) * q - s * s};
}

Spectrum brute_spectrum(const ConnectionSet& S) {
  S.validate();
  const AdjacencyMatrix A = cayley_adjacency(S);
  std::vector<double> dense(A.a.size());
  for (std::size_t t = 0; t < A.a.size(); ++t) dense[t] = A.a[t];
  return group_numeric(S.n, S.size(), jacobi_eigenvalues(std::move(dense), A.dim));
}

std::optional<Spectrum> exact_integer_spectrum(const ConnectionSet& S) {
  S.validate();
  const std::vector<BigInt> poly = characteristic_polynomial(cayley_adjacency(S));
  const auto roots = integer_roots_if_split(poly, S.size());
  if (!roots) return std::nullopt;
  return Spectrum::from_integer_multiset(S.n, S.size(), *roots);
}

}  // namespace u6ncay
