#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "u6ncay/characters.hpp"
#include "u6ncay/group.hpp"

namespace u6ncay {

/// Multiset of adjacency eigenvalues, grouped with multiplicities and
/// sorted descending. Exact-integer kind carries the values in `ivalue`;
/// numeric kind carries doubles grouped at tolerance 1e-7.
struct Spectrum {
  struct Entry {
    double value = 0.0;
    long long ivalue = 0;  // meaningful when exact
    int multiplicity = 0;
  };

  bool exact = false;
  std::vector<Entry> entries;
  int n = 0;
  int set_size = 0;

  // One value per vertex (6n total), descending.
  std::vector<double> expanded() const;
  // "{5, [3]^2, [-1]^8, -3}"
  std::string str() const;

  static Spectrum from_integer_multiset(int n, int set_size,
                                        const std::map<long long, int>& mult);
};

// Multiset agreement of expanded spectra within tol (pairing sorted lists).
bool spectra_agree(const Spectrum& a, const Spectrum& b, double tol);
// Exact multiset equality; both spectra must be exact-integer kind.
bool spectra_equal_exact(const Spectrum& a, const Spectrum& b);

constexpr double kEigenvalueGroupTol = 1e-7;

/// Character-based spectrum: lambda_j = chi_j(S) with multiplicity 1, and
/// for each psi_k the two roots of
///   x^2 - psi_k(S1) x + (psi_k(S1)^2 - (psi_k(S1^2)+psi_k(S2^2)))/2 = 0
/// with multiplicity 2 each (larger root first). Exact-integer kind when
/// every eigenvalue reduces to an integer, numeric otherwise.
/// Throws std::invalid_argument if S is not a valid connection set.
Spectrum babai_spectrum(const ConnectionSet& S);

/// Delta_psi_k(S) = 2(psi_k(S1^2) + psi_k(S2^2)) - psi_k(S1)^2, exact.
struct Discriminant {
  int k = 0;
  CycValue value;
};

Discriminant discriminant(const ConnectionSet& S, int k);

// Independent numeric oracle: dense Jacobi on the adjacency matrix,
// eigenvalues grouped at 1e-7.
Spectrum brute_spectrum(const ConnectionSet& S);

// Independent exact oracle: integer characteristic polynomial
// (Faddeev-LeVerrier), then integer-root extraction over [-|S|, |S|].
// Nonempty iff the Cayley graph is integral.
std::optional<Spectrum> exact_integer_spectrum(const ConnectionSet& S);

}  // namespace u6ncay
