#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace u6ncay {

/// An element a^i b^j of U_{6n} = <a, b | a^{2n} = b^3 = 1, a^{-1}ba = b^{-1}>
/// in canonical form: 0 <= i < 2n, 0 <= j < 3.
struct U6nElement {
  int n = 1;
  int i = 0;
  int j = 0;

  // Canonicalizes arbitrary exponents; throws for n < 1.
  static U6nElement make(int n, long long i, long long j);
  static U6nElement identity(int n) { return make(n, 0, 0); }

  bool is_identity() const { return i == 0 && j == 0; }

  // Fixed element encoding used for matrices, bitsets and file layouts.
  int index() const { return 3 * i + j; }
  static U6nElement from_index(int n, int index);

  friend bool operator==(const U6nElement&, const U6nElement&) = default;
};

// (a^{i1} b^{j1})(a^{i2} b^{j2}) = a^{i1+i2} b^{e*j1+j2}, e = (-1)^{i2};
// derived once from b a^i = a^i b^{(-1)^i}. Throws on mismatched n.
U6nElement mul(const U6nElement& x, const U6nElement& y);
U6nElement inv(const U6nElement& x);
int order(const U6nElement& x);

/// Inverse-closed, identity-free subset of U_{6n} (plain data; factories
/// validate, ops revalidate where the contract demands it).
struct ConnectionSet {
  int n = 1;
  std::vector<bool> members;  // 6n bits, slot 3i+j

  static ConnectionSet empty(int n);
  static ConnectionSet of(int n, const std::vector<U6nElement>& xs);

  int size() const;
  bool contains(const U6nElement& x) const;
  std::vector<U6nElement> elements() const;  // ascending element index

  bool valid(std::string* why = nullptr) const;
  void validate() const;  // throws std::invalid_argument

  friend bool operator==(const ConnectionSet&, const ConnectionSet&) = default;
};

// Members with even / odd exponent of a, as element lists.
std::pair<std::vector<U6nElement>, std::vector<U6nElement>> parity_split(
    const ConnectionSet& S);

/// The 3n conjugacy classes, for r = 0..n-1 in the fixed order
/// {a^{2r}}, {a^{2r}b, a^{2r}b^2}, {a^{2r+1}, a^{2r+1}b, a^{2r+1}b^2},
/// listed as class index 3r, 3r+1, 3r+2.
struct ConjugacyClasses {
  int n = 1;
  std::vector<std::vector<U6nElement>> classes;
};

ConjugacyClasses conjugacy_classes(int n);
int class_index(const U6nElement& x);

// True iff the subgroup closure of S is all of U_{6n}; equals connectivity
// of the Cayley graph. Breadth-first closure from the identity.
bool generates(const ConnectionSet& S);

struct AdjacencyMatrix {
  int dim = 0;
  std::vector<std::uint8_t> a;  // row-major 0/1

  std::uint8_t at(int r, int c) const { return a[static_cast<std::size_t>(r) * dim + c]; }
};

// A[h][g] = 1 iff h = s*g for some s in S. Symmetric exactly when S = S^{-1}.
AdjacencyMatrix cayley_adjacency(const ConnectionSet& S);

// Element text format: "a^i*b^j" (also "1", "a^i", "b^j", bare "a"/"b");
// set literal: comma-separated element list.
U6nElement parse_element(int n, std::string_view token);
std::string format_element(const U6nElement& x);
ConnectionSet parse_set(int n, std::string_view literal);
std::string format_set(const ConnectionSet& S);

}  // namespace u6ncay
