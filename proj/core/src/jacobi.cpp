#include "u6ncay/jacobi.hpp"

#include <cmath>
#include <stdexcept>

namespace u6ncay {

std::vector<double> jacobi_eigenvalues(std::vector<double> a, int dim) {
  if (dim < 0 || a.size() != static_cast<std::size_t>(dim) * dim)
    throw std::invalid_argument("jacobi_eigenvalues: bad dimensions");
  if (dim == 0) return {};
  auto at = [&](int r, int c) -> double& {
    return a[static_cast<std::size_t>(r) * dim + c];
  };

  double norm = 0.0;
  for (double v : a) norm += v * v;
  const double stop = 1e-28 * (norm + 1.0);

  const int max_sweeps = 100;
  for (int sweep = 0; sweep < max_sweeps; ++sweep) {
    double off = 0.0;
    for (int p = 0; p < dim; ++p)
      for (int q = p + 1; q < dim; ++q) off += at(p, q) * at(p, q);
    if (off <= stop) break;

    for (int p = 0; p < dim; ++p) {
      for (int q = p + 1; q < dim; ++q) {
        const double apq = at(p, q);
        if (apq == 0.0) continue;
        const double app = at(p, p);
        const double aqq = at(q, q);
        const double theta = (aqq - app) / (2.0 * apq);
        double t = 1.0 / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        if (theta < 0.0) t = -t;
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;

        for (int r = 0; r < dim; ++r) {
          if (r == p || r == q) continue;
          const double arp = at(r, p);
          const double arq = at(r, q);
          at(r, p) = at(p, r) = c * arp - s * arq;
          at(r, q) = at(q, r) = s * arp + c * arq;
        }
        at(p, p) = app - t * apq;
        at(q, q) = aqq + t * apq;
        at(p, q) = at(q, p) = 0.0;
      }
    }
  }

  std::vector<double> eig(static_cast<std::size_t>(dim));
  for (int r = 0; r < dim; ++r) eig[static_cast<std::size_t>(r)] = at(r, r);
  return eig;
}

}  // namespace u6ncay
