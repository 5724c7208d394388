#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "u6ncay/integrality.hpp"
#include "u6ncay/search.hpp"

using namespace u6ncay;

TEST_CASE("inversion orbits") {
  // n = 1: three involutions {a}, {ab}, {ab^2} plus the pair {b, b^2}
  const OrbitList o1 = inversion_orbits(1);
  CHECK(o1.orbits.size() == 4);

  // n = 2: one involution {a^2} and five pairs
  const OrbitList o2 = inversion_orbits(2);
  CHECK(o2.orbits.size() == 6);

  for (int n : {1, 2, 3, 5}) {
    const OrbitList list = inversion_orbits(n);
    std::set<int> covered;
    for (const auto& orbit : list.orbits) {
      for (int idx : orbit) {
        CHECK(covered.insert(idx).second);  // no overlaps
        const U6nElement x = U6nElement::from_index(n, idx);
        // orbit closed under inversion
        bool has_inverse = false;
        for (int other : orbit)
          if (other == inv(x).index()) has_inverse = true;
        CHECK(has_inverse);
      }
    }
    CHECK(covered.size() == static_cast<std::size_t>(6 * n - 1));
    CHECK_FALSE(covered.contains(0));
  }
}

TEST_CASE("exhaustive enumeration") {
  ConnectionSetEnumerator en(1);
  CHECK(en.orbit_count() == 4);
  CHECK(en.total() == 16);
  std::set<std::string> seen;
  int count = 0;
  while (auto s = en.next()) {
    CHECK(s->valid());
    CHECK(seen.insert(format_set(*s)).second);
    ++count;
  }
  CHECK(count == 16);

  ConnectionSetEnumerator en2(2);
  int count2 = 0;
  while (en2.next()) ++count2;
  CHECK(count2 == 64);  // 2^6 inversion orbits
}

TEST_CASE("connected-only filter") {
  ConnectionSetEnumerator all(1), conn(1, ConnectionSetEnumerator::Filter::connected_only);
  int total = 0, connected = 0;
  while (auto s = all.next()) {
    if (generates(*s)) ++connected;
    ++total;
  }
  int filtered = 0;
  while (auto s = conn.next()) {
    CHECK(generates(*s));
    ++filtered;
  }
  CHECK(total == 16);
  CHECK(filtered == connected);
  CHECK(filtered > 0);
}

TEST_CASE("orbit cap refusal names the computed count") {
  // n = 9 has 3 involutions and 25 pairs: 28 orbits
  try {
    ConnectionSetEnumerator en(9);
    FAIL("expected refusal");
  } catch (const std::invalid_argument& e) {
    CHECK(std::string(e.what()).find("28") != std::string::npos);
  }
}

TEST_CASE("random sets are valid and seeded draws reproduce") {
  std::mt19937_64 a(7), b(7), c(8);
  bool all_equal = true;
  for (int iter = 0; iter < 50; ++iter) {
    const ConnectionSet x = random_connection_set(3, a);
    const ConnectionSet y = random_connection_set(3, b);
    const ConnectionSet z = random_connection_set(3, c);
    CHECK(x.valid());
    CHECK(x == y);
    if (!(x == z)) all_equal = false;
  }
  CHECK_FALSE(all_equal);
}

TEST_CASE("census of U_6: every one of the 16 sets is integral") {
  const std::vector<CensusRow> rows = census(1);
  REQUIRE(rows.size() == 16);
  for (const CensusRow& r : rows) {
    CHECK(r.integral);  // cross-checked against the exact oracle inside census
    REQUIRE(r.spectrum.has_value());
    CHECK(r.spectrum->exact);
    int mults = 0;
    for (const auto& e : r.spectrum->entries) mults += e.multiplicity;
    CHECK(mults == 6);
  }
  // the empty set row
  CHECK(rows.front().set == "");
  CHECK(rows.front().size == 0);
  CHECK_FALSE(rows.front().connected);
}

TEST_CASE("sampling is reproducible and consistent") {
  CensusOptions opts;
  opts.sample_count = 60;
  opts.seed = 42;
  const auto a = census(2, opts);
  const auto b = census(2, opts);
  REQUIRE(a.size() == b.size());
  for (std::size_t t = 0; t < a.size(); ++t) {
    CHECK(a[t].set == b[t].set);
    CHECK(a[t].integral == b[t].integral);
    CHECK(a[t].criterion == b[t].criterion);
  }

  opts.seed = 43;
  const auto c = census(2, opts);
  bool identical = a.size() == c.size();
  if (identical)
    for (std::size_t t = 0; t < a.size(); ++t)
      if (a[t].set != c[t].set) identical = false;
  CHECK_FALSE(identical);
}

TEST_CASE("census rows carry the firing criterion") {
  CensusOptions opts;
  opts.sample_count = 40;
  opts.seed = 3;
  for (const CensusRow& r : census(3, opts)) {
    CHECK((r.criterion == "general" || r.criterion == "refined" ||
           r.criterion == "boolean-S1" || r.criterion == "boolean-SL" ||
           r.criterion == "boolean-RH"));
  }
}

TEST_CASE("connected-only sampling filters rows") {
  CensusOptions opts;
  opts.sample_count = 30;
  opts.seed = 11;
  opts.connected_only = true;
  for (const CensusRow& r : census(2, opts)) CHECK(r.connected);
}
