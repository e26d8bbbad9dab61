#pragma once

#include <complex>
#include <vector>

#include "grioli/matrix.hpp"

namespace grioli {

// Eigendecomposition of a symmetric matrix: A = V diag(values) V^T.
// values are sorted descending; columns of vectors are orthonormal.
struct SymEig {
  std::vector<double> values;
  Mat vectors;
};

// Cyclic Jacobi rotations on (A + A^T)/2; accurate for the small dimensions
// in scope. Throws NoConvergenceError if the sweep cap is ever hit.
SymEig sym_eig(const Mat& a);

// All eigenvalues of a general real matrix, via Householder reduction to
// Hessenberg form followed by complex shifted-QR iteration. Values only,
// in no particular order.
std::vector<std::complex<double>> eigenvalues(const Mat& a);

}  // namespace grioli
