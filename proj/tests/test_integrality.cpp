#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "test_util.hpp"
#include "u6ncay/families.hpp"
#include "u6ncay/integrality.hpp"
#include "u6ncay/search.hpp"
#include "u6ncay/spectral.hpp"

using namespace u6ncay;

namespace {

U6nElement el(int n, int i, int j) { return U6nElement::make(n, i, j); }

ConnectionSet first_family_n2() {
  return ConnectionSet::of(2, {el(2, 2, 0), el(2, 1, 0), el(2, 3, 0),
                               el(2, 1, 1), el(2, 3, 1)});
}

ConnectionSet irrational_n3() {
  return ConnectionSet::of(3, {el(3, 3, 0), el(3, 1, 1), el(3, 5, 1)});
}

}  // namespace

TEST_CASE("split: parity decomposition and index sets") {
  const PartitionedSet P = split(first_family_n2());
  CHECK(P.s1.elements() == std::vector<U6nElement>{el(2, 2, 0)});
  CHECK(P.s2.size() == 4);
  CHECK(P.R == std::vector<int>{1});
  CHECK(P.L.empty());
  CHECK(P.s1_in_a2);
  CHECK(P.sl_symmetric);

  const PartitionedSet E = split(ConnectionSet::empty(3));
  CHECK(E.s1.size() == 0);
  CHECK(E.s2.size() == 0);
  CHECK(E.s1_in_a2);
  CHECK(E.s1_b_only);
  CHECK(E.s1_triples);
  CHECK(E.s2_triples);

  // S = {b, b^2, a^2 b, a^2 b^2} at n = 2: all of S1, L = {0, 1}
  const PartitionedSet Q = split(ConnectionSet::of(
      2, {el(2, 0, 1), el(2, 0, 2), el(2, 2, 1), el(2, 2, 2)}));
  CHECK(Q.s1.size() == 4);
  CHECK(Q.s2.size() == 0);
  CHECK(Q.L == std::vector<int>{0, 1});
  CHECK(Q.R.empty());
  CHECK(Q.s1_b_only);
  CHECK(Q.sl_symmetric);
}

TEST_CASE("general criterion") {
  CHECK(is_integral_general(ConnectionSet::empty(2)).integral);
  CHECK(is_integral_general(first_family_n2()).integral);

  const IntegralityReport bad = is_integral_general(irrational_n3());
  CHECK_FALSE(bad.integral);
  CHECK(bad.criterion == "general");
  // the failure is the non-square discriminant, not a non-integer sum
  for (const CheckItem& item : bad.linear) CHECK(item.ok);
  bool some_square_failed = false;
  for (const CheckItem& item : bad.quadratic)
    if (!item.ok) some_square_failed = true;
  CHECK(some_square_failed);
}

TEST_CASE("general criterion matches the exact oracle") {
  std::mt19937_64 rng(1001);
  for (int n : {1, 2, 3}) {
    for (int iter = 0; iter < 60; ++iter) {
      const ConnectionSet S = random_connection_set(n, rng);
      CHECK(is_integral_general(S).integral ==
            exact_integer_spectrum(S).has_value());
    }
  }
}

TEST_CASE("refined criterion: applicability gate") {
  // S_L = {a^2} at n = 3 is not inverse-closed within <a^2>; gate must stay shut.
  const ConnectionSet asym =
      ConnectionSet::of(3, {el(3, 2, 1), el(3, 4, 2)});  // L = {1}
  CHECK(split(asym).L == std::vector<int>{1});
  CHECK_FALSE(split(asym).sl_symmetric);
  CHECK_FALSE(is_integral_refined(asym).has_value());

  CHECK(is_integral_refined(ConnectionSet::empty(2)).value().integral);
}

TEST_CASE("refined criterion on the cor-3x family shape") {
  const FamilySpec spec = family(FamilyId::cor_3x, 3);
  const auto rep = is_integral_refined(spec.set);
  REQUIRE(rep.has_value());
  CHECK(rep->integral);
  CHECK(rep->criterion == "refined");
}

TEST_CASE("refined criterion agrees with the general one when applicable") {
  std::mt19937_64 rng(555);
  for (int n : {2, 3, 4, 5}) {
    for (int iter = 0; iter < 40; ++iter) {
      const ConnectionSet S = testutil::random_refined_set(n, rng);
      const auto refined = is_integral_refined(S);
      REQUIRE(refined.has_value());
      CHECK(refined->integral == is_integral_general(S).integral);
    }
  }
}

TEST_CASE("boolean membership of cyclic subsets") {
  CHECK(boolean_membership({}, 6));
  CHECK(boolean_membership({0, 1, 2, 3, 4, 5}, 6));
  CHECK(boolean_membership({1, 3}, 4));        // both of order 4
  CHECK_FALSE(boolean_membership({1}, 4));     // misses g^3
  CHECK(boolean_membership({1, 2, 3}, 4));     // atom(4) u atom(2)

  // <a^2> \ {1} for any order
  for (int m : {2, 3, 4, 6, 9}) {
    std::vector<int> T;
    for (int t = 1; t < m; ++t) T.push_back(t);
    CHECK(boolean_membership(T, m));
  }
}

TEST_CASE("atoms") {
  CHECK(boolean_atom(12, 1) == std::vector<int>{0});
  CHECK(boolean_atom(12, 2) == std::vector<int>{6});
  CHECK(boolean_atom(12, 12) == std::vector<int>{1, 5, 7, 11});
  CHECK_THROWS_AS(boolean_atom(12, 5), std::invalid_argument);
}

TEST_CASE("cyclic integral-set test and its cross-check") {
  CHECK(is_integral_set_cyclic({}, 5));
  CHECK(is_integral_set_cyclic({1, 5}, 6));       // atom of order 6
  CHECK_FALSE(is_integral_set_cyclic({1}, 4));    // rho_1 = i
  CHECK(is_integral_set_cyclic({-1, 1}, 6));      // exponents mod m

  // exhaustive agreement for small orders (the lemma, both directions)
  for (int m = 1; m <= 10; ++m) {
    for (unsigned mask = 0; mask < (1u << m); ++mask) {
      std::vector<int> T;
      for (int t = 0; t < m; ++t)
        if (mask >> t & 1) T.push_back(t);
      CHECK(is_integral_set_cyclic(T, m) == boolean_membership(T, m));
    }
  }
}

TEST_CASE("boolean-S1 criterion") {
  const auto rep = is_integral_boolean_S1(first_family_n2());
  REQUIRE(rep.has_value());
  CHECK(rep->integral);
  CHECK(rep->criterion == "boolean-S1");

  // not applicable once S1 has b-parts
  CHECK_FALSE(is_integral_boolean_S1(
                  ConnectionSet::of(2, {el(2, 0, 1), el(2, 0, 2)}))
                  .has_value());
}

TEST_CASE("boolean-SL criterion") {
  // n = 3: S1 = {a^{2r}b, a^{2r}b^2 | 1<=r<=2}, S2 = {a^{2r+1}b | 0<=r<=2}
  std::vector<U6nElement> xs;
  for (int r = 1; r <= 2; ++r) {
    xs.push_back(el(3, 2 * r, 1));
    xs.push_back(el(3, 2 * r, 2));
  }
  for (int r = 0; r <= 2; ++r) xs.push_back(el(3, 2 * r + 1, 1));
  const auto rep = is_integral_boolean_SL(ConnectionSet::of(3, xs));
  REQUIRE(rep.has_value());
  CHECK(rep->integral);
  CHECK(rep->criterion == "boolean-SL");
}

TEST_CASE("boolean-RH criterion") {
  // n = 2: S1 = {a^2, a^2 b, a^2 b^2}, S2 = {a, ab, ab^2, a^3, a^3 b, a^3 b^2}
  std::vector<U6nElement> xs;
  for (int j = 0; j < 3; ++j) xs.push_back(el(2, 2, j));
  for (int i : {1, 3})
    for (int j = 0; j < 3; ++j) xs.push_back(el(2, i, j));
  const ConnectionSet S = ConnectionSet::of(2, xs);

  const auto rep = is_integral_boolean_RH(S);
  REQUIRE(rep.has_value());
  CHECK(rep->integral);
  CHECK(rep->criterion == "boolean-RH");

  const auto exact = exact_integer_spectrum(S);
  REQUIRE(exact.has_value());
  std::map<long long, int> got;
  for (const auto& e : exact->entries) got[e.ivalue] = e.multiplicity;
  CHECK(got == std::map<long long, int>{{9, 1}, {0, 8}, {-3, 3}});
}

TEST_CASE("specialized criteria agree with the general one when applicable") {
  std::mt19937_64 rng(909);
  for (int n : {2, 3, 4}) {
    for (int iter = 0; iter < 80; ++iter) {
      const ConnectionSet S = random_connection_set(n, rng);
      const bool truth = is_integral_general(S).integral;
      if (const auto r = is_integral_boolean_S1(S)) CHECK(r->integral == truth);
      if (const auto r = is_integral_boolean_SL(S)) CHECK(r->integral == truth);
      if (const auto r = is_integral_boolean_RH(S)) CHECK(r->integral == truth);
      if (const auto r = is_integral_refined(S)) CHECK(r->integral == truth);
    }
  }
}

TEST_CASE("decision cascade labels the criterion that fired") {
  CHECK(decide(first_family_n2()).criterion == "boolean-S1");
  // S1 empty keeps the S1 shape applicable; the verdict is still negative
  const IntegralityReport irr = decide(irrational_n3());
  CHECK(irr.criterion == "boolean-S1");
  CHECK_FALSE(irr.integral);
  const ConnectionSet b_pair = ConnectionSet::of(2, {el(2, 0, 1), el(2, 0, 2)});
  CHECK(decide(b_pair).criterion == "boolean-SL");
  // mixed shape with asymmetric S_L falls through to the general criterion
  const ConnectionSet asym = ConnectionSet::of(
      3, {el(3, 2, 0), el(3, 4, 0), el(3, 2, 1), el(3, 4, 2)});
  CHECK(decide(asym).criterion == "general");
}

TEST_CASE("equation identities on refined shapes, exact") {
  std::mt19937_64 rng(321);
  for (int n : {2, 3, 4, 5}) {
    const CharacterTable table = char_table(n);
    const CyclicCharacters rho = cyclic_chars(2 * n);
    for (int iter = 0; iter < 20; ++iter) {
      const ConnectionSet S = testutil::random_refined_set(n, rng);
      const PartitionedSet P = split(S);
      REQUIRE(P.sl_symmetric);

      std::vector<int> r2, l2;
      for (int r : P.R) r2.push_back(2 * r);
      for (int l : P.L) l2.push_back(2 * l);
      const auto s1 = P.s1.elements();
      const auto s2 = P.s2.elements();
      const auto all = S.elements();

      for (int k = 0; k < n; ++k) {
        const CycValue diff = rho.sum(k, r2) - rho.sum(k, l2);
        // psi_k(S1) = 2 (rho_k(S_R) - rho_k(S_L))
        CHECK(char_sum(table.degree2[static_cast<std::size_t>(k)], s1) ==
              BigInt(2) * diff);
        // psi_k(S1^2) = 2 (rho_k(S_R) - rho_k(S_L))^2
        CHECK(char_sum_product(table.degree2[static_cast<std::size_t>(k)], s1, s1) ==
              BigInt(2) * (diff * diff));
      }
      for (int j = 0; j < 2 * n; ++j) {
        // chi_j(S) = rho_j(S_R) + 2 rho_j(S_L) + chi_j(S2)
        const CharRow& chi = table.linear[static_cast<std::size_t>(j)];
        CHECK(char_sum(chi, all) ==
              rho.sum(j, r2) + BigInt(2) * rho.sum(j, l2) + char_sum(chi, s2));
      }
    }
  }
}
