#pragma once

#include <vector>

#include "u6ncay/cyclotomic.hpp"
#include "u6ncay/group.hpp"

namespace u6ncay {

/// One irreducible character of U_{6n}, stored per conjugacy class (3n
/// values, class order as in conjugacy_classes). All values live in the
/// ring of w = exp(pi*i/n), i.e. CycValue order 2n.
struct CharRow {
  int n = 1;
  int degree = 1;  // 1 (chi_j) or 2 (psi_k)
  int index = 0;   // j in 0..2n-1, or k in 0..n-1
  std::vector<CycValue> by_class;

  const CycValue& at(const U6nElement& x) const;
};

/// Character table of U_{6n}: 2n linear rows chi_j and n degree-two rows
/// psi_k, with
///   chi_j(a^{2r}) = w^{2jr},  chi_j(a^{2r}b) = w^{2jr},  chi_j(a^{2r+1}) = w^{j(2r+1)},
///   psi_k(a^{2r}) = 2w^{2kr}, psi_k(a^{2r}b) = -w^{2kr}, psi_k(a^{2r+1}) = 0.
struct CharacterTable {
  int n = 1;
  std::vector<CharRow> linear;   // chi_0 .. chi_{2n-1}
  std::vector<CharRow> degree2;  // psi_0 .. psi_{n-1}
};

CharacterTable char_table(int n);

// chi(A) = sum over A of chi(a); chi(empty) = 0.
CycValue char_sum(const CharRow& row, const std::vector<U6nElement>& A);

// chi(AB) = sum over ordered pairs (a, b) of chi(ab), multiset semantics.
CycValue char_sum_product(const CharRow& row, const std::vector<U6nElement>& A,
                          const std::vector<U6nElement>& B);

/// Irreducible characters of a cyclic group <g> of order m:
/// rho_j(g^r) = z^{jr} with z = exp(2*pi*i/m). For <a> of order 2n this is
/// rho_j(a^r) = w^{jr}; for <a^2> of order n, rho_k(a^{2r}) = w^{2kr}.
struct CyclicCharacters {
  int m = 1;

  CycValue value(int j, long long r) const;
  // rho_j(T) for T given as a list of exponents of g.
  CycValue sum(int j, const std::vector<int>& exponents) const;
};

CyclicCharacters cyclic_chars(int m);

}  // namespace u6ncay
