#include "u6ncay/characters.hpp"

#include <stdexcept>

namespace u6ncay {

const CycValue& CharRow::at(const U6nElement& x) const {
  if (x.n != n) throw std::invalid_argument("CharRow: element from wrong group");
  return by_class[static_cast<std::size_t>(class_index(x))];
}

CharacterTable char_table(int n) {
  if (n < 1) throw std::invalid_argument("char_table: n must be >= 1");
  const int m = 2 * n;
  CharacterTable t;
  t.n = n;
  t.linear.reserve(static_cast<std::size_t>(2) * n);
  for (int j = 0; j < 2 * n; ++j) {
    CharRow row{n, 1, j, {}};
    row.by_class.reserve(static_cast<std::size_t>(3) * n);
    for (int r = 0; r < n; ++r) {
      CycValue even = CycValue::root_power(m, 2LL * j * r);
      row.by_class.push_back(even);                                  // a^{2r}
      row.by_class.push_back(std::move(even));                       // a^{2r}b
      row.by_class.push_back(CycValue::root_power(m, static_cast<long long>(j) * (2 * r + 1)));
    }
    t.linear.push_back(std::move(row));
  }
  t.degree2.reserve(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) {
    CharRow row{n, 2, k, {}};
    row.by_class.reserve(static_cast<std::size_t>(3) * n);
    for (int r = 0; r < n; ++r) {
      const CycValue w2kr = CycValue::root_power(m, 2LL * k * r);
      row.by_class.push_back(BigInt(2) * w2kr);  // a^{2r}
      row.by_class.push_back(-w2kr);             // a^{2r}b
      row.by_class.push_back(CycValue::zero(m)); // a^{2r+1}
    }
    t.degree2.push_back(std::move(row));
  }
  return t;
}

CycValue char_sum(const CharRow& row, const std::vector<U6nElement>& A) {
  CycValue acc = CycValue::zero(2 * row.n);
  for (const U6nElement& x : A) acc += row.at(x);
  return acc;
}

CycValue char_sum_product(const CharRow& row, const std::vector<U6nElement>& A,
                          const std::vector<U6nElement>& B) {
  CycValue acc = CycValue::zero(2 * row.n);
  for (const U6nElement& x : A)
    for (const U6nElement& y : B) acc += row.at(mul(x, y));
  return acc;
}

CycValue CyclicCharacters::value(int j, long long r) const {
  return CycValue::root_power(m, static_cast<long long>(j) * r);
}

CycValue CyclicCharacters::sum(int j, const std::vector<int>& exponents) const {
  CycValue acc = CycValue::zero(m);
  for (int r : exponents) acc += value(j, r);
  return acc;
}

CyclicCharacters cyclic_chars(int m) {
  if (m < 1) throw std::invalid_argument("cyclic_chars: m must be >= 1");
  return CyclicCharacters{m};
}

}  // namespace u6ncay
