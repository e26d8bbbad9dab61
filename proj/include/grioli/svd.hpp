#pragma once

#include <vector>

#include "grioli/matrix.hpp"

namespace grioli {

// A = U diag(sigma) V^T with sigma sorted descending and U, V orthogonal.
// Signs are fixed so the largest-magnitude entry of each right singular
// vector is positive, which makes the factors reproducible.
struct Svd {
  Mat u;
  std::vector<double> sigma;
  Mat v;
};

// One-sided cyclic Jacobi. Sweeps stop when every off-diagonal Gram entry
// of the rotated columns is below 1e-14 * ||A||_F^2.
Svd jacobi_svd(const Mat& a);

std::vector<double> singular_values(const Mat& a);

enum class NormKind { frobenius, spectral, nuclear };

// Unitarily invariant norms, computed from the singular values.
double ui_norm(const Mat& a, NormKind kind);

}  // namespace grioli
