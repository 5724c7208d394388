#include "u6ncay/integrality.hpp"

#include <algorithm>
#include <numeric>

namespace u6ncay {

namespace {

std::string int_or_value(const CycValue& v) {
  const auto i = v.as_integer();
  return i ? i->str() : v.str();
}

CheckItem integer_check(std::string label, const CycValue& v) {
  return CheckItem{std::move(label), int_or_value(v), v.as_integer().has_value()};
}

CheckItem square_check(std::string label, const CycValue& v) {
  const auto i = v.as_integer();
  const bool ok = i && is_perfect_square(*i);
  return CheckItem{std::move(label), int_or_value(v), ok};
}

bool all_ok(const IntegralityReport& rep) {
  auto ok = [](const CheckItem& c) { return c.ok; };
  return std::all_of(rep.linear.begin(), rep.linear.end(), ok) &&
         std::all_of(rep.quadratic.begin(), rep.quadratic.end(), ok) &&
         std::all_of(rep.boolean_checks.begin(), rep.boolean_checks.end(), ok);
}

std::vector<int> mirror_mod(const std::vector<int>& v, int m) {
  std::vector<int> out;
  out.reserve(v.size());
  for (int x : v) out.push_back(((m - x) % m + m) % m);
  std::sort(out.begin(), out.end());
  return out;
}

// chi_j(S2) for every j, plus the 2 psi_k(S2^2) square checks shared by the
// specialized criteria.
void append_s2_checks(IntegralityReport& rep, const CharacterTable& table,
                      const std::vector<U6nElement>& s2, bool with_linear) {
  if (with_linear) {
    for (const CharRow& chi : table.linear)
      rep.linear.push_back(integer_check(
          "chi_" + std::to_string(chi.index) + "(S2)", char_sum(chi, s2)));
  }
  for (const CharRow& psi : table.degree2)
    rep.quadratic.push_back(
        square_check("2*psi_" + std::to_string(psi.index) + "(S2^2)",
                     BigInt(2) * char_sum_product(psi, s2, s2)));
}

}  // namespace

PartitionedSet split(const ConnectionSet& S) {
  S.validate();
  const int n = S.n;
  PartitionedSet P;
  P.s1 = ConnectionSet::empty(n);
  P.s2 = ConnectionSet::empty(n);
  std::vector<int> l_from_b2;
  for (const U6nElement& x : S.elements()) {
    if (x.i % 2 == 0) {
      P.s1.members[static_cast<std::size_t>(x.index())] = true;
      if (x.j == 0) P.R.push_back(x.i / 2);
      if (x.j == 1) P.L.push_back(x.i / 2);
      if (x.j == 2) l_from_b2.push_back((n - x.i / 2) % n);
    } else {
      P.s2.members[static_cast<std::size_t>(x.index())] = true;
      if (x.j == 0) P.H.push_back((x.i - 1) / 2);
    }
  }
  std::sort(l_from_b2.begin(), l_from_b2.end());
  // Inverse closure pairs a^{2l}b with a^{-2l}b^2, so the two reads of L
  // must coincide for any valid S.
  if (l_from_b2 != P.L)
    throw internal_consistency_error("split: mirror shape violated");

  P.sl_symmetric = (P.L == mirror_mod(P.L, n));
  P.s1_in_a2 = P.L.empty();
  P.s1_b_only = P.R.empty();
  P.s1_triples = (P.R == P.L);
  P.s2_triples = true;
  for (int h = 0; h < n; ++h) {
    const bool pure = P.s2.contains(U6nElement::make(n, 2 * h + 1, 0));
    const bool b1 = P.s2.contains(U6nElement::make(n, 2 * h + 1, 1));
    const bool b2 = P.s2.contains(U6nElement::make(n, 2 * h + 1, 2));
    if (pure != b1 || b1 != b2) P.s2_triples = false;
  }
  return P;
}

IntegralityReport is_integral_general(const ConnectionSet& S) {
  S.validate();
  const CharacterTable table = char_table(S.n);
  const std::vector<U6nElement> all = S.elements();
  const auto [s1, s2] = parity_split(S);

  IntegralityReport rep;
  rep.criterion = "general";
  for (const CharRow& chi : table.linear)
    rep.linear.push_back(integer_check(
        "chi_" + std::to_string(chi.index) + "(S)", char_sum(chi, all)));
  for (const CharRow& psi : table.degree2) {
    const std::string k = std::to_string(psi.index);
    const CycValue s = char_sum(psi, s1);
    const CycValue q = char_sum_product(psi, s1, s1) + char_sum_product(psi, s2, s2);
    rep.quadratic.push_back(integer_check("psi_" + k + "(S1)", s));
    rep.quadratic.push_back(integer_check("psi_" + k + "(S1^2)+psi_" + k + "(S2^2)", q));
    rep.quadratic.push_back(square_check("Delta_psi_" + k, BigInt(2) * q - s * s));
  }
  rep.integral = all_ok(rep);
  return rep;
}

std::optional<IntegralityReport> is_integral_refined(const ConnectionSet& S) {
  const PartitionedSet P = split(S);
  if (!P.sl_symmetric) return std::nullopt;
  const int n = S.n;
  const CharacterTable table = char_table(n);
  const CyclicCharacters rho = cyclic_chars(2 * n);
  const std::vector<U6nElement> s2 = P.s2.elements();

  std::vector<int> r2, l2;  // exponents within <a>
  for (int r : P.R) r2.push_back(2 * r);
  for (int l : P.L) l2.push_back(2 * l);

  IntegralityReport rep;
  rep.criterion = "refined";
  for (int j = 0; j < 2 * n; ++j) {
    const CycValue chi_s2 = char_sum(table.linear[static_cast<std::size_t>(j)], s2);
    rep.linear.push_back(integer_check(
        "3*rho_" + std::to_string(j) + "(S_R)+chi_j(S2)",
        BigInt(3) * rho.sum(j, r2) + chi_s2));
    rep.linear.push_back(integer_check(
        "3*rho_" + std::to_string(j) + "(S_L)+chi_j(S2)",
        BigInt(3) * rho.sum(j, l2) + chi_s2));
  }
  append_s2_checks(rep, table, s2, /*with_linear=*/false);
  rep.integral = all_ok(rep);
  return rep;
}

std::optional<IntegralityReport> is_integral_boolean_S1(const ConnectionSet& S) {
  const PartitionedSet P = split(S);
  if (!P.s1_in_a2) return std::nullopt;
  const CharacterTable table = char_table(S.n);

  IntegralityReport rep;
  rep.criterion = "boolean-S1";
  rep.boolean_checks.push_back(
      {"S1 in B(<a^2>)", "", boolean_membership(P.R, S.n)});
  append_s2_checks(rep, table, P.s2.elements(), /*with_linear=*/true);
  rep.integral = all_ok(rep);
  return rep;
}

std::optional<IntegralityReport> is_integral_boolean_SL(const ConnectionSet& S) {
  const PartitionedSet P = split(S);
  if (!P.s1_b_only || !P.sl_symmetric) return std::nullopt;
  const CharacterTable table = char_table(S.n);

  IntegralityReport rep;
  rep.criterion = "boolean-SL";
  rep.boolean_checks.push_back(
      {"S_L in B(<a^2>)", "", boolean_membership(P.L, S.n)});
  append_s2_checks(rep, table, P.s2.elements(), /*with_linear=*/true);
  rep.integral = all_ok(rep);
  return rep;
}

std::optional<IntegralityReport> is_integral_boolean_RH(const ConnectionSet& S) {
  const PartitionedSet P = split(S);
  if (!P.s1_triples || !P.s2_triples) return std::nullopt;
  const CharacterTable table = char_table(S.n);

  std::vector<int> rh;  // S_R u S_H as exponents within <a> of order 2n
  for (int r : P.R) rh.push_back(2 * r);
  for (int h : P.H) rh.push_back(2 * h + 1);

  IntegralityReport rep;
  rep.criterion = "boolean-RH";
  rep.boolean_checks.push_back(
      {"S_R u S_H in B(<a>)", "", boolean_membership(rh, 2 * S.n)});
  append_s2_checks(rep, table, P.s2.elements(), /*with_linear=*/false);
  rep.integral = all_ok(rep);
  return rep;
}

IntegralityReport decide(const ConnectionSet& S) {
  if (auto rep = is_integral_boolean_S1(S)) return *rep;
  if (auto rep = is_integral_boolean_SL(S)) return *rep;
  if (auto rep = is_integral_boolean_RH(S)) return *rep;
  if (auto rep = is_integral_refined(S)) return *rep;
  return is_integral_general(S);
}

std::vector<int> boolean_atom(int m, int d) {
  if (m < 1 || d < 1 || m % d != 0)
    throw std::invalid_argument("boolean_atom: d must divide m");
  std::vector<int> out;
  for (int t = 0; t < m; ++t)
    if (std::gcd(t, m) == m / d) out.push_back(t);
  return out;
}

bool boolean_membership(const std::vector<int>& T, int m) {
  if (m < 1) throw std::invalid_argument("boolean_membership: m must be >= 1");
  std::vector<char> in(static_cast<std::size_t>(m), 0);
  for (int t : T) in[static_cast<std::size_t>(((t % m) + m) % m)] = 1;
  // Union of atoms == closed under "same element order".
  for (int t = 0; t < m; ++t) {
    if (!in[static_cast<std::size_t>(t)]) continue;
    for (int u = 0; u < m; ++u)
      if (std::gcd(u, m) == std::gcd(t, m) && !in[static_cast<std::size_t>(u)])
        return false;
  }
  return true;
}

bool is_integral_set_cyclic(const std::vector<int>& T, int m) {
  if (m < 1) throw std::invalid_argument("is_integral_set_cyclic: m must be >= 1");
  std::vector<int> norm = T;
  for (int& t : norm) t = ((t % m) + m) % m;
  std::sort(norm.begin(), norm.end());
  norm.erase(std::unique(norm.begin(), norm.end()), norm.end());

  const CyclicCharacters rho = cyclic_chars(m);
  bool via_chars = true;
  for (int j = 0; j < m && via_chars; ++j)
    via_chars = rho.sum(j, norm).as_integer().has_value();
  const bool via_boolean = boolean_membership(norm, m);
  if (via_chars != via_boolean)
    throw internal_consistency_error(
        "is_integral_set_cyclic: character test and Boolean-algebra test "
        "disagree for m=" + std::to_string(m));
  return via_chars;
}

}  // namespace u6ncay
