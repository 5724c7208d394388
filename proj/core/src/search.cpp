#include "u6ncay/search.hpp"

#include <stdexcept>

#include "u6ncay/integrality.hpp"

namespace u6ncay {

OrbitList inversion_orbits(int n) {
  if (n < 1) throw std::invalid_argument("inversion_orbits: n must be >= 1");
  OrbitList list;
  list.n = n;
  std::vector<bool> seen(static_cast<std::size_t>(6) * n, false);
  for (int idx = 1; idx < 6 * n; ++idx) {
    if (seen[static_cast<std::size_t>(idx)]) continue;
    const U6nElement x = U6nElement::from_index(n, idx);
    const int inv_idx = inv(x).index();
    seen[static_cast<std::size_t>(idx)] = true;
    seen[static_cast<std::size_t>(inv_idx)] = true;
    if (inv_idx == idx)
      list.orbits.push_back({idx});
    else
      list.orbits.push_back({idx, inv_idx});
  }
  return list;
}

ConnectionSet OrbitList::set_for_mask(std::uint64_t mask) const {
  ConnectionSet s = ConnectionSet::empty(n);
  for (std::size_t t = 0; t < orbits.size(); ++t) {
    if (!(mask >> t & 1)) continue;
    for (int idx : orbits[t]) s.members[static_cast<std::size_t>(idx)] = true;
  }
  return s;
}

ConnectionSet random_connection_set(int n, std::mt19937_64& rng) {
  const OrbitList list = inversion_orbits(n);
  ConnectionSet s = ConnectionSet::empty(n);
  std::uint64_t word = 0;
  for (std::size_t t = 0; t < list.orbits.size(); ++t) {
    if (t % 64 == 0) word = rng();
    if (!(word >> (t % 64) & 1)) continue;
    for (int idx : list.orbits[t]) s.members[static_cast<std::size_t>(idx)] = true;
  }
  return s;
}

ConnectionSetEnumerator::ConnectionSetEnumerator(int n, Filter filter,
                                                 int orbit_cap)
    : orbits_(inversion_orbits(n)), filter_(filter) {
  if (orbit_count() > orbit_cap)
    throw std::invalid_argument(
        "enumerate: 2^" + std::to_string(orbit_count()) +
        " inverse-closed subsets exceed the cap of 2^" +
        std::to_string(orbit_cap) + " (orbit count " +
        std::to_string(orbit_count()) + ")");
}

std::optional<ConnectionSet> ConnectionSetEnumerator::next() {
  while (!done_) {
    ConnectionSet s = orbits_.set_for_mask(next_mask_);
    if (next_mask_ + 1 == total())
      done_ = true;
    else
      ++next_mask_;
    if (filter_ == Filter::connected_only && !generates(s)) continue;
    return s;
  }
  return std::nullopt;
}

std::vector<CensusRow> census(int n, const CensusOptions& options) {
  std::vector<ConnectionSet> sets;
  if (options.sample_count) {
    std::mt19937_64 rng(options.seed);
    for (int t = 0; t < *options.sample_count; ++t) {
      ConnectionSet s = random_connection_set(n, rng);
      if (options.connected_only && !generates(s)) continue;
      sets.push_back(std::move(s));
    }
  } else {
    ConnectionSetEnumerator en(n,
                               options.connected_only
                                   ? ConnectionSetEnumerator::Filter::connected_only
                                   : ConnectionSetEnumerator::Filter::all,
                               options.orbit_cap);
    while (auto s = en.next()) sets.push_back(std::move(*s));
  }

  std::vector<CensusRow> rows;
  rows.reserve(sets.size());
  for (const ConnectionSet& s : sets) {
    const IntegralityReport rep = decide(s);
    std::optional<Spectrum> oracle = exact_integer_spectrum(s);
    if (rep.integral != oracle.has_value())
      throw internal_consistency_error(
          "census: cascade verdict disagrees with the exact spectrum oracle "
          "for S = {" + format_set(s) + "}, n = " + std::to_string(n));
    CensusRow row;
    row.set = format_set(s);
    row.size = s.size();
    row.connected = generates(s);
    row.integral = rep.integral;
    row.criterion = rep.criterion;
    if (rep.integral) row.spectrum = std::move(oracle);
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace u6ncay
