#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "u6ncay/characters.hpp"
#include "u6ncay/search.hpp"

using namespace u6ncay;

namespace {

U6nElement el(int n, int i, int j) { return U6nElement::make(n, i, j); }

}  // namespace

TEST_CASE("table values, n = 2") {
  const CharacterTable t = char_table(2);
  REQUIRE(t.linear.size() == 4);
  REQUIRE(t.degree2.size() == 2);

  // psi_1(a^2) = 2w^2 = -2 (w = i)
  CHECK(t.degree2[1].at(el(2, 2, 0)).as_integer().value() == -2);
  // psi_1(a^1) = 0
  CHECK(t.degree2[1].at(el(2, 1, 0)).is_zero());
  // chi_0 identically 1
  for (int idx = 0; idx < 12; ++idx)
    CHECK(t.linear[0].at(U6nElement::from_index(2, idx)).as_integer().value() == 1);
}

TEST_CASE("degrees: 2n ones and n twos, sum of squares 6n") {
  for (int n = 1; n <= 8; ++n) {
    const CharacterTable t = char_table(n);
    CHECK(t.linear.size() == static_cast<std::size_t>(2 * n));
    CHECK(t.degree2.size() == static_cast<std::size_t>(n));
    int sum = 0;
    for (const CharRow& r : t.linear) sum += r.degree * r.degree;
    for (const CharRow& r : t.degree2) sum += r.degree * r.degree;
    CHECK(sum == 6 * n);
  }
}

TEST_CASE("characters constant on conjugacy classes") {
  for (int n : {1, 2, 3, 5}) {
    const CharacterTable t = char_table(n);
    const ConjugacyClasses cc = conjugacy_classes(n);
    for (const auto& cls : cc.classes) {
      for (const U6nElement& x : cls) {
        for (const CharRow& row : t.linear) CHECK(row.at(x) == row.at(cls.front()));
        for (const CharRow& row : t.degree2) CHECK(row.at(x) == row.at(cls.front()));
      }
    }
  }
}

TEST_CASE("row orthogonality, exact") {
  for (int n : {1, 2, 3, 4, 6}) {
    const CharacterTable t = char_table(n);
    const ConjugacyClasses cc = conjugacy_classes(n);
    std::vector<const CharRow*> rows;
    for (const CharRow& r : t.linear) rows.push_back(&r);
    for (const CharRow& r : t.degree2) rows.push_back(&r);

    for (std::size_t x = 0; x < rows.size(); ++x) {
      for (std::size_t y = x; y < rows.size(); ++y) {
        CycValue acc = CycValue::zero(2 * n);
        for (std::size_t c = 0; c < cc.classes.size(); ++c) {
          const BigInt size(static_cast<long long>(cc.classes[c].size()));
          acc += size * (rows[x]->by_class[c] * rows[y]->by_class[c].conjugate());
        }
        CHECK(acc.as_integer().value() == (x == y ? 6 * n : 0));
      }
    }
  }
}

TEST_CASE("char_sum") {
  const CharacterTable t = char_table(2);

  CHECK(char_sum(t.linear[2], {}).is_zero());  // chi(empty) = 0

  std::vector<U6nElement> non_identity;
  for (int idx = 1; idx < 12; ++idx)
    non_identity.push_back(U6nElement::from_index(2, idx));
  CHECK(char_sum(t.linear[0], non_identity).as_integer().value() == 11);

  // psi_0({a^2 b, a^2 b^2}) = -1 - 1
  CHECK(char_sum(t.degree2[0], {el(2, 2, 1), el(2, 2, 2)}).as_integer().value() ==
        -2);
}

TEST_CASE("char_sum_product") {
  const CharacterTable t = char_table(2);
  CHECK(char_sum_product(t.degree2[0], {}, {el(2, 2, 0)}).is_zero());
  CHECK(char_sum_product(t.degree2[0], {el(2, 2, 0)}, {}).is_zero());

  // A = B = {a, a^3}: the four products are a^2, 1, 1, a^2, all psi_0 = 2.
  const std::vector<U6nElement> A{el(2, 1, 0), el(2, 3, 0)};
  CHECK(char_sum_product(t.degree2[0], A, A).as_integer().value() == 8);

  std::mt19937_64 rng(31);
  for (int iter = 0; iter < 10; ++iter) {
    const auto sa = random_connection_set(2, rng).elements();
    const auto sb = random_connection_set(2, rng).elements();
    CHECK(char_sum_product(t.linear[0], sa, sb).as_integer().value() ==
          static_cast<long long>(sa.size()) * static_cast<long long>(sb.size()));
  }
}

TEST_CASE("character sums over inverse-closed sets are real") {
  std::mt19937_64 rng(77);
  for (int n : {2, 3, 4, 5}) {
    const CharacterTable t = char_table(n);
    for (int iter = 0; iter < 15; ++iter) {
      const auto xs = random_connection_set(n, rng).elements();
      for (const CharRow& row : t.linear) {
        const CycValue s = char_sum(row, xs);
        CHECK(s.conjugate() == s);
        CHECK(std::abs(s.numeric().imag()) < 1e-9);
      }
    }
  }
}

TEST_CASE("cyclic characters") {
  const CyclicCharacters rho = cyclic_chars(4);
  CHECK(rho.value(1, 1) == CycValue::root_power(4, 1));  // rho_1(a) = w
  for (int r = 0; r < 4; ++r)
    CHECK(rho.value(0, r) == CycValue::from_integer(4, 1));  // rho_0 = 1

  CycValue total = CycValue::zero(4);
  for (int r = 0; r < 4; ++r) total += rho.value(1, r);
  CHECK(total.is_zero());

  // rho_j * rho_j' = rho_{j+j'} pointwise
  for (int j = 0; j < 4; ++j)
    for (int jp = 0; jp < 4; ++jp)
      for (int r = 0; r < 4; ++r)
        CHECK(rho.value(j, r) * rho.value(jp, r) == rho.value((j + jp) % 4, r));
}

TEST_CASE("rho_{n+k} equals rho_k on subsets of <a^2>") {
  std::mt19937_64 rng(13);
  for (int n : {2, 3, 4, 6}) {
    const CyclicCharacters rho = cyclic_chars(2 * n);
    for (int iter = 0; iter < 10; ++iter) {
      std::vector<int> T;  // even exponents within <a>
      for (int r = 0; r < n; ++r)
        if (rng() & 1) T.push_back(2 * r);
      for (int k = 0; k < n; ++k) CHECK(rho.sum(n + k, T) == rho.sum(k, T));
    }
  }
}
