#pragma once

#include <vector>

namespace u6ncay {

// Eigenvalues of a dense symmetric matrix (row-major, dim*dim) by cyclic
// Jacobi rotations. Returned unsorted; accuracy is near machine precision
// for the matrix sizes used here.
std::vector<double> jacobi_eigenvalues(std::vector<double> a, int dim);

}  // namespace u6ncay
