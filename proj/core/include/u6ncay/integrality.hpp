#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "u6ncay/characters.hpp"
#include "u6ncay/group.hpp"

namespace u6ncay {

// Raised when two routes that must agree by theorem disagree at runtime
// (a bug, never an input problem). The CLI maps it to exit code 2.
class internal_consistency_error : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Parity decomposition of a connection set:
///   S1 = members with even a-exponent, S2 = members with odd a-exponent.
/// Inverse closure forces S1 = {a^{2r} | r in R} u {a^{2l}b, a^{-2l}b^2 | l in L},
/// so R and L are always defined. H collects the pure-a odd exponents.
struct PartitionedSet {
  ConnectionSet s1, s2;
  std::vector<int> R;  // r in 0..n-1 with a^{2r} in S (0 never occurs: 1 not in S)
  std::vector<int> L;  // l in 0..n-1 with a^{2l}b in S
  std::vector<int> H;  // h in 0..n-1 with a^{2h+1} in S

  bool sl_symmetric = false;  // S_L = S_L^{-1} within <a^2>
  bool s1_in_a2 = false;      // L empty: S1 subset of <a^2> \ {1}
  bool s1_b_only = false;     // R empty
  bool s1_triples = false;    // R == L: S1 = {a^{2r}, a^{2r}b, a^{-2r}b^2 | r in R}
  bool s2_triples = false;    // S2 a union of {a^{2h+1}, a^{2h+1}b, a^{2h+1}b^2}
};

PartitionedSet split(const ConnectionSet& S);

struct CheckItem {
  std::string label;
  std::string value;
  bool ok = false;
};

/// Verdict plus per-character diagnostics. `criterion` names the decision
/// rule that produced the verdict: general | refined | boolean-S1 |
/// boolean-SL | boolean-RH | oracle.
struct IntegralityReport {
  bool integral = false;
  std::string criterion;
  std::vector<CheckItem> linear;          // per-j checks
  std::vector<CheckItem> quadratic;       // per-k discriminant checks
  std::vector<CheckItem> boolean_checks;  // Boolean-algebra memberships
};

// Always-applicable criterion: chi_j(S), psi_k(S1), psi_k(S1^2)+psi_k(S2^2)
// all integers and every Delta_psi_k(S) a perfect square.
IntegralityReport is_integral_general(const ConnectionSet& S);

// Cyclic-character version; applicable only when S_L = S_L^{-1}. Checks
// 3 rho_j(S_R)+chi_j(S2) and 3 rho_j(S_L)+chi_j(S2) integral for all j and
// 2 psi_k(S2^2) a perfect square for all k. nullopt when inapplicable.
std::optional<IntegralityReport> is_integral_refined(const ConnectionSet& S);

// Boolean-algebra criteria, each gated on its shape hypothesis:
//  (S1) S1 subset of <a^2> \ {1}:       S1 in B(<a^2>), chi_j(S2) integral,
//                                       2 psi_k(S2^2) a perfect square;
//  (SL) S1 = {a^{2l}b, a^{-2l}b^2} with S_L = S_L^{-1}:
//                                       S_L in B(<a^2>), same two conditions;
//  (RH) S1, S2 both unions of triples:  S_R u S_H in B(<a>) and
//                                       2 psi_k(S2^2) a perfect square.
std::optional<IntegralityReport> is_integral_boolean_S1(const ConnectionSet& S);
std::optional<IntegralityReport> is_integral_boolean_SL(const ConnectionSet& S);
std::optional<IntegralityReport> is_integral_boolean_RH(const ConnectionSet& S);

// Decision cascade: boolean-S1, boolean-SL, boolean-RH, refined, general.
// The report records which criterion fired.
IntegralityReport decide(const ConnectionSet& S);

// T as exponents of a generator of the cyclic group of order m. Membership
// in the Boolean algebra B(Z_m): T must be a union of atoms, the atom for a
// divisor d of m being the set of elements of order exactly d.
bool boolean_membership(const std::vector<int>& T, int m);

// Elements of multiplicative order exactly d, as exponents: gcd(t, m) = m/d.
std::vector<int> boolean_atom(int m, int d);

// True iff rho_j(T) is an integer for every j. Also computes
// boolean_membership(T, m); by the Boolean-algebra equivalence for abelian
// groups the two must agree, and a disagreement throws
// internal_consistency_error.
bool is_integral_set_cyclic(const std::vector<int>& T, int m);

}  // namespace u6ncay
