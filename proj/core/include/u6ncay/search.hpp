#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "u6ncay/group.hpp"
#include "u6ncay/spectral.hpp"

namespace u6ncay {

/// Orbits {x, x^{-1}} of the non-identity elements, sorted by least element
/// index. Unions of orbits are exactly the inverse-closed identity-free
/// subsets, so enumeration over orbit masks is duplicate-free.
struct OrbitList {
  int n = 1;
  std::vector<std::vector<int>> orbits;  // element indices, 1 or 2 per orbit

  ConnectionSet set_for_mask(std::uint64_t mask) const;
};

OrbitList inversion_orbits(int n);

// Each orbit included with probability 1/2, bits drawn from rng.
ConnectionSet random_connection_set(int n, std::mt19937_64& rng);

/// Streams every inverse-closed identity-free subset exactly once, in
/// orbit-mask order (mask 0, 1, 2, ...). Refuses when the orbit count
/// exceeds the cap.
class ConnectionSetEnumerator {
 public:
  enum class Filter { all, connected_only };

  explicit ConnectionSetEnumerator(int n, Filter filter = Filter::all,
                                   int orbit_cap = 24);

  std::optional<ConnectionSet> next();

  int orbit_count() const { return static_cast<int>(orbits_.orbits.size()); }
  std::uint64_t total() const { return std::uint64_t{1} << orbit_count(); }

 private:
  OrbitList orbits_;
  Filter filter_;
  std::uint64_t next_mask_ = 0;
  bool done_ = false;
};

struct CensusRow {
  std::string set;  // canonical listing
  int size = 0;
  bool connected = false;
  bool integral = false;
  std::string criterion;
  std::optional<Spectrum> spectrum;  // present when integral
};

struct CensusOptions {
  bool connected_only = false;
  std::optional<int> sample_count;  // nullopt: exhaustive
  std::uint64_t seed = 0;
  int orbit_cap = 24;
};

// Classifies each set via the integrality cascade and re-checks the verdict
// against the exact characteristic-polynomial oracle; a disagreement throws
// internal_consistency_error. Sampling is reproducible per seed.
std::vector<CensusRow> census(int n, const CensusOptions& options = {});

}  // namespace u6ncay
