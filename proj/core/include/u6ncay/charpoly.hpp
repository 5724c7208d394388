#pragma once

#include <map>
#include <optional>

#include "u6ncay/bigint.hpp"
#include "u6ncay/group.hpp"

namespace u6ncay {

// Characteristic polynomial det(xI - A) of a 0/1 matrix, exact integer
// arithmetic throughout (Faddeev-LeVerrier; the 0/1 structure makes every
// matrix product a sum of rows, so no bigint multiplications occur).
// Coefficients ascending, length dim+1, monic.
std::vector<BigInt> characteristic_polynomial(const AdjacencyMatrix& A);

// Strips integer roots r with |r| <= bound by exact synthetic division.
// Returns the root -> multiplicity map iff the polynomial splits completely
// over the integers, otherwise nullopt.
std::optional<std::map<long long, int>> integer_roots_if_split(
    std::vector<BigInt> poly, long long bound);

}  // namespace u6ncay
