#include "u6ncay/charpoly.hpp"

#include <stdexcept>

namespace u6ncay {

std::vector<BigInt> characteristic_polynomial(const AdjacencyMatrix& A) {
  const int N = A.dim;
  std::vector<std::vector<int>> nbr(static_cast<std::size_t>(N));
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j)
      if (A.at(i, j)) nbr[static_cast<std::size_t>(i)].push_back(j);

  // det(xI - A) = x^N + c[1] x^{N-1} + ... + c[N] via
  //   M_1 = I,  c_k = -tr(A M_k)/k,  M_{k+1} = A M_k + c_k I.
  std::vector<BigInt> M(static_cast<std::size_t>(N) * N), B(M.size());
  for (int i = 0; i < N; ++i) M[static_cast<std::size_t>(i) * N + i] = 1;
  std::vector<BigInt> c(static_cast<std::size_t>(N) + 1);
  c[0] = 1;

  for (int k = 1; k <= N; ++k) {
    for (int i = 0; i < N; ++i) {
      const auto& row = nbr[static_cast<std::size_t>(i)];
      for (int j = 0; j < N; ++j) {
        BigInt acc = 0;
        for (int t : row) acc += M[static_cast<std::size_t>(t) * N + j];
        B[static_cast<std::size_t>(i) * N + j] = std::move(acc);
      }
    }
    BigInt tr = 0;
    for (int i = 0; i < N; ++i) tr += B[static_cast<std::size_t>(i) * N + i];
    c[static_cast<std::size_t>(k)] = -tr / k;  // exact by construction
    M.swap(B);
    for (int i = 0; i < N; ++i)
      M[static_cast<std::size_t>(i) * N + i] += c[static_cast<std::size_t>(k)];
  }

  std::vector<BigInt> poly(static_cast<std::size_t>(N) + 1);
  for (int k = 0; k <= N; ++k)
    poly[static_cast<std::size_t>(N - k)] = std::move(c[static_cast<std::size_t>(k)]);
  return poly;
}

namespace {

BigInt eval_at(const std::vector<BigInt>& poly, long long r) {
  BigInt acc = 0;
  for (std::size_t d = poly.size(); d-- > 0;) acc = acc * r + poly[d];
  return acc;
}

// poly := poly / (x - r); the division must be exact.
void divide_by_root(std::vector<BigInt>& poly, long long r) {
  const std::size_t deg = poly.size() - 1;
  std::vector<BigInt> q(deg);
  BigInt carry = poly[deg];
  for (std::size_t d = deg; d-- > 0;) {
    q[d] = carry;
    carry = poly[d] + carry * r;
  }
  if (carry != 0) throw std::logic_error("divide_by_root: nonzero remainder");
  poly = std::move(q);
}

}  // namespace

std::optional<std::map<long long, int>> integer_roots_if_split(
    std::vector<BigInt> poly, long long bound) {
  if (poly.empty() || poly.back() == 0)
    throw std::invalid_argument("integer_roots_if_split: bad polynomial");
  std::map<long long, int> mult;
  for (long long r = -bound; r <= bound; ++r) {
    while (poly.size() > 1 && eval_at(poly, r) == 0) {
      divide_by_root(poly, r);
      ++mult[r];
    }
  }
  if (poly.size() != 1) return std::nullopt;  // an irreducible factor remains
  return mult;
}

}  // namespace u6ncay
