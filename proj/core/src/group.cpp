#include "u6ncay/group.hpp"

#include <charconv>
#include <deque>
#include <stdexcept>

namespace u6ncay {

namespace {

long long floor_mod(long long v, long long m) {
  long long r = v % m;
  return r < 0 ? r + m : r;
}

void check_same_group(const U6nElement& x, const U6nElement& y) {
  if (x.n != y.n)
    throw std::invalid_argument("U6n: mixed group parameters " +
                                std::to_string(x.n) + " and " +
                                std::to_string(y.n));
}

}  // namespace

U6nElement U6nElement::make(int n, long long i, long long j) {
  if (n < 1) throw std::invalid_argument("U6n: n must be >= 1");
  U6nElement x;
  x.n = n;
  x.i = static_cast<int>(floor_mod(i, 2LL * n));
  x.j = static_cast<int>(floor_mod(j, 3));
  return x;
}

U6nElement U6nElement::from_index(int n, int index) {
  if (index < 0 || index >= 6 * n)
    throw std::invalid_argument("U6n: element index out of range");
  return make(n, index / 3, index % 3);
}

U6nElement mul(const U6nElement& x, const U6nElement& y) {
  check_same_group(x, y);
  const int eps = (y.i % 2 == 0) ? 1 : -1;
  return U6nElement::make(x.n, static_cast<long long>(x.i) + y.i,
                          static_cast<long long>(eps) * x.j + y.j);
}

U6nElement inv(const U6nElement& x) {
  // (a^i b^j)^{-1} = a^{-i} b^{-(-1)^i j}
  const int eps = (x.i % 2 == 0) ? 1 : -1;
  return U6nElement::make(x.n, -static_cast<long long>(x.i),
                          static_cast<long long>(-eps) * x.j);
}

int order(const U6nElement& x) {
  U6nElement acc = x;
  int k = 1;
  while (!acc.is_identity()) {
    acc = mul(acc, x);
    ++k;
  }
  return k;
}

ConnectionSet ConnectionSet::empty(int n) {
  if (n < 1) throw std::invalid_argument("ConnectionSet: n must be >= 1");
  ConnectionSet s;
  s.n = n;
  s.members.assign(static_cast<std::size_t>(6) * n, false);
  return s;
}

ConnectionSet ConnectionSet::of(int n, const std::vector<U6nElement>& xs) {
  ConnectionSet s = empty(n);
  for (const U6nElement& x : xs) {
    if (x.n != n)
      throw std::invalid_argument("ConnectionSet: element from wrong group");
    s.members[static_cast<std::size_t>(x.index())] = true;
  }
  s.validate();
  return s;
}

int ConnectionSet::size() const {
  int c = 0;
  for (bool b : members) c += b ? 1 : 0;
  return c;
}

bool ConnectionSet::contains(const U6nElement& x) const {
  return x.n == n && members[static_cast<std::size_t>(x.index())];
}

std::vector<U6nElement> ConnectionSet::elements() const {
  std::vector<U6nElement> out;
  for (int idx = 0; idx < static_cast<int>(members.size()); ++idx)
    if (members[static_cast<std::size_t>(idx)])
      out.push_back(U6nElement::from_index(n, idx));
  return out;
}

bool ConnectionSet::valid(std::string* why) const {
  if (n < 1 || members.size() != static_cast<std::size_t>(6) * n) {
    if (why) *why = "membership vector has wrong length";
    return false;
  }
  if (members[0]) {
    if (why) *why = "identity element is a member";
    return false;
  }
  for (int idx = 0; idx < 6 * n; ++idx) {
    if (!members[static_cast<std::size_t>(idx)]) continue;
    const U6nElement x = U6nElement::from_index(n, idx);
    if (!members[static_cast<std::size_t>(inv(x).index())]) {
      if (why) *why = "not inverse-closed at " + format_element(x);
      return false;
    }
  }
  return true;
}

void ConnectionSet::validate() const {
  std::string why;
  if (!valid(&why)) throw std::invalid_argument("ConnectionSet: " + why);
}

std::pair<std::vector<U6nElement>, std::vector<U6nElement>> parity_split(
    const ConnectionSet& S) {
  std::vector<U6nElement> even, odd;
  for (const U6nElement& x : S.elements()) (x.i % 2 == 0 ? even : odd).push_back(x);
  return {std::move(even), std::move(odd)};
}

int class_index(const U6nElement& x) {
  if (x.i % 2 == 0) return 3 * (x.i / 2) + (x.j == 0 ? 0 : 1);
  return 3 * ((x.i - 1) / 2) + 2;
}

ConjugacyClasses conjugacy_classes(int n) {
  if (n < 1) throw std::invalid_argument("conjugacy_classes: n must be >= 1");
  ConjugacyClasses cc;
  cc.n = n;
  cc.classes.resize(static_cast<std::size_t>(3) * n);
  for (int r = 0; r < n; ++r) {
    cc.classes[3 * r] = {U6nElement::make(n, 2 * r, 0)};
    cc.classes[3 * r + 1] = {U6nElement::make(n, 2 * r, 1),
                             U6nElement::make(n, 2 * r, 2)};
    cc.classes[3 * r + 2] = {U6nElement::make(n, 2 * r + 1, 0),
                             U6nElement::make(n, 2 * r + 1, 1),
                             U6nElement::make(n, 2 * r + 1, 2)};
  }
  // Conjugation closure under the generators (which suffices: a, b generate).
  const U6nElement a = U6nElement::make(n, 1, 0);
  const U6nElement b = U6nElement::make(n, 0, 1);
  for (const auto& cls : cc.classes) {
    for (const U6nElement& x : cls) {
      for (const U6nElement& g : {a, b}) {
        const U6nElement y = mul(mul(inv(g), x), g);
        if (class_index(y) != class_index(x))
          throw std::logic_error("conjugacy_classes: closure check failed");
      }
    }
  }
  return cc;
}

bool generates(const ConnectionSet& S) {
  S.validate();
  const int total = 6 * S.n;
  std::vector<bool> seen(static_cast<std::size_t>(total), false);
  std::deque<U6nElement> queue{U6nElement::identity(S.n)};
  seen[0] = true;
  int reached = 1;
  const std::vector<U6nElement> gens = S.elements();
  while (!queue.empty()) {
    const U6nElement g = queue.front();
    queue.pop_front();
    for (const U6nElement& s : gens) {
      const U6nElement h = mul(s, g);
      if (!seen[static_cast<std::size_t>(h.index())]) {
        seen[static_cast<std::size_t>(h.index())] = true;
        ++reached;
        queue.push_back(h);
      }
    }
  }
  return reached == total;
}

AdjacencyMatrix cayley_adjacency(const ConnectionSet& S) {
  const int dim = 6 * S.n;
  AdjacencyMatrix A;
  A.dim = dim;
  A.a.assign(static_cast<std::size_t>(dim) * dim, 0);
  for (int gi = 0; gi < dim; ++gi) {
    const U6nElement g = U6nElement::from_index(S.n, gi);
    for (const U6nElement& s : S.elements()) {
      const int hi = mul(s, g).index();
      A.a[static_cast<std::size_t>(hi) * dim + gi] = 1;
    }
  }
  return A;
}

namespace {

long long parse_int(std::string_view s) {
  long long v = 0;
  const char* first = s.data();
  const char* last = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc() || ptr != last)
    throw std::invalid_argument("bad integer '" + std::string(s) + "'");
  return v;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

// "a", "b", "a^3", "b^-1"
void parse_factor(std::string_view part, long long& ai, long long& bj,
                  bool& saw_a, bool& saw_b) {
  part = trim(part);
  if (part.empty()) throw std::invalid_argument("empty factor");
  const char base = part.front();
  if (base != 'a' && base != 'b')
    throw std::invalid_argument("factor must start with 'a' or 'b'");
  part.remove_prefix(1);
  long long e = 1;
  if (!part.empty()) {
    if (part.front() != '^')
      throw std::invalid_argument("expected '^' after generator");
    e = parse_int(trim(part.substr(1)));
  }
  if (base == 'a') {
    if (saw_a || saw_b) throw std::invalid_argument("'a' factor out of order");
    saw_a = true;
    ai = e;
  } else {
    if (saw_b) throw std::invalid_argument("repeated 'b' factor");
    saw_b = true;
    bj = e;
  }
}

}  // namespace

U6nElement parse_element(int n, std::string_view token) {
  token = trim(token);
  if (token.empty())
    throw std::invalid_argument("parse_element: empty token");
  if (token == "1") return U6nElement::identity(n);
  long long ai = 0, bj = 0;
  bool saw_a = false, saw_b = false;
  std::size_t pos = 0;
  while (pos <= token.size()) {
    const std::size_t star = token.find('*', pos);
    const std::string_view part =
        token.substr(pos, star == std::string_view::npos ? star : star - pos);
    parse_factor(part, ai, bj, saw_a, saw_b);
    if (star == std::string_view::npos) break;
    pos = star + 1;
  }
  return U6nElement::make(n, ai, bj);
}

std::string format_element(const U6nElement& x) {
  if (x.is_identity()) return "1";
  std::string out;
  if (x.i != 0) out += "a^" + std::to_string(x.i);
  if (x.j != 0) {
    if (!out.empty()) out += "*";
    out += "b^" + std::to_string(x.j);
  }
  return out;
}

ConnectionSet parse_set(int n, std::string_view literal) {
  std::vector<U6nElement> xs;
  std::string_view rest = trim(literal);
  while (!rest.empty()) {
    const std::size_t comma = rest.find(',');
    xs.push_back(parse_element(n, rest.substr(0, comma)));
    if (comma == std::string_view::npos) break;
    rest = rest.substr(comma + 1);
    if (trim(rest).empty())
      throw std::invalid_argument("parse_set: trailing comma");
  }
  return ConnectionSet::of(n, xs);
}

std::string format_set(const ConnectionSet& S) {
  std::string out;
  for (const U6nElement& x : S.elements()) {
    if (!out.empty()) out += ",";
    out += format_element(x);
  }
  return out;
}

}  // namespace u6ncay
