#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "u6ncay/group.hpp"
#include "u6ncay/spectral.hpp"

namespace u6ncay {

/// The four explicit integral families. Parameters: cor-3x takes p > 2
/// (group parameter n = 2p); the 4-* families take n > 1.
enum class FamilyId { cor_3x, four_first, four_second, four_third };

// Accepts "cor-3x", "4-first", "4-second", "4-third" (and the long forms
// "cor-4-first" etc.).
std::optional<FamilyId> parse_family_id(std::string_view token);
std::string family_id_name(FamilyId id);

struct FamilySpec {
  FamilyId id = FamilyId::four_first;
  int parameter = 0;  // p for cor-3x, n otherwise
  int n = 0;
  ConnectionSet set;
  Spectrum predicted;  // exact-integer kind, closed-form in the parameter
};

// Builds the connection set exactly as stated, with its predicted spectrum:
//   cor-3x:   S1 = <a^4>\{1} u {a^{2l}b, a^{-2l}b^2 | 1<=l<=n-1},
//             S2 = {a^{2r+1}b | 0<=r<=n-1};      (7p-3)-regular on 12p vertices
//   4-first:  S1 = <a^2>\{1}, S2 = {a^{2r+1}, a^{2r+1}b};      (3n-1)-regular
//   4-second: S1 = {a^{2r}b, a^{2r}b^2 | 1<=r<=n-1}, S2 = {a^{2r+1}b};
//   4-third:  S1 = {a^{2r}, a^{2r}b, a^{2r}b^2 | 1<=r<=n-1},
//             S2 = {a^{2h+1}, a^{2h+1}b, a^{2h+1}b^2 | 0<=h<=n-1}.
// Throws std::invalid_argument for out-of-range parameters.
FamilySpec family(FamilyId id, int parameter);

// True iff babai_spectrum, exact_integer_spectrum and the predicted
// spectrum coincide as multisets and the set generates the group. On
// mismatch `detail` (when given) receives the spectra side by side.
bool verify_family(const FamilySpec& spec, std::string* detail = nullptr);

// Entry-wise test of A^2 = k I + lambda A + mu (J - I - A); v must equal
// the vertex count 6n.
bool srg_check(const ConnectionSet& S, int v, int k, int lambda, int mu);

}  // namespace u6ncay
