#pragma once

#include <vector>

#include "grioli/matrix.hpp"
#include "grioli/rotation.hpp"
#include "grioli/spd.hpp"
#include "grioli/svd.hpp"

namespace grioli {

// F = R U with R orthogonal and U symmetric positive definite. When
// det F < 0 the orthogonal factor has det -1; `proper` is false and
// rotation() refuses. The stretch spectrum holds Delta_i = lambda_i(U) - 1,
// sorted descending.
struct PolarFactors {
  Mat orthogonal;
  bool proper;
  SpdMatrix stretch;
  std::vector<double> stretch_spectrum;

  RotationMatrix rotation() const;  // throws NonOrientationError if !proper
};

// SVD route: F = W S V^T gives R = W V^T, U = V S V^T.
// Throws SingularError unless |det F| > 1e-12 * ||F||_F^n.
PolarFactors polar_svd(const Mat& f);

// Newton route: X <- (g X + g^{-1} X^{-T})/2 with determinant scaling
// g = |det X|^{-1/n}, stopping at a 1e-14 relative step or 100 iterations.
// Requires det F > 0.
PolarFactors polar_newton(const Mat& f);

// Delta_i = eigenvalue_i - 1, sorted descending.
std::vector<double> stretch_spectrum(const SpdMatrix& u);

}  // namespace grioli
