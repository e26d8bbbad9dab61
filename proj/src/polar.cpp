#include "grioli/polar.hpp"

#include <cmath>

#include "grioli/errors.hpp"

namespace grioli {

RotationMatrix PolarFactors::rotation() const {
  if (!proper) {
    throw NonOrientationError(
        "orthogonal polar factor has det -1; not a rotation");
  }
  return RotationMatrix::from_matrix(orthogonal);
}

namespace {

void check_invertible(const Mat& f) {
  const double d = det(f);
  const double norm = f.frobenius_norm();
  if (std::abs(d) <= 1e-12 * std::pow(norm, f.dim())) {
    throw SingularError("matrix is numerically singular");
  }
}

std::vector<double> spectrum_from(const std::vector<double>& eigenvalues) {
  std::vector<double> delta(eigenvalues.size());
  for (std::size_t i = 0; i < delta.size(); ++i) {
    delta[i] = eigenvalues[i] - 1.0;
  }
  return delta;
}

}  // namespace

PolarFactors polar_svd(const Mat& f) {
  check_invertible(f);
  const Svd svd = jacobi_svd(f);
  const Mat r = svd.u * svd.v.transpose();
  SpdMatrix u = SpdMatrix::from_eigensystem(svd.sigma, svd.v);
  std::vector<double> delta = spectrum_from(u.eigenvalues());
  return PolarFactors{r, det(f) > 0.0, std::move(u), std::move(delta)};
}

PolarFactors polar_newton(const Mat& f) {
  check_invertible(f);
  if (det(f) < 0.0) {
    throw NonOrientationError("newton polar iteration requires det F > 0");
  }
  const int n = f.dim();
  Mat x = f;
  bool converged = false;
  for (int iter = 0; iter < 100; ++iter) {
    const double g = std::pow(std::abs(det(x)), -1.0 / n);
    const Mat next = 0.5 * (g * x + (1.0 / g) * inverse(x).transpose());
    const double step = (next - x).frobenius_norm();
    const double size = x.frobenius_norm();
    x = next;
    if (step <= 1e-14 * size) {
      converged = true;
      break;
    }
  }
  if (!converged) {
    throw NoConvergenceError("polar newton iteration exceeded 100 steps");
  }
  SpdMatrix u = SpdMatrix::from_matrix(sym_part(x.transpose() * f));
  std::vector<double> delta = spectrum_from(u.eigenvalues());
  return PolarFactors{x, true, std::move(u), std::move(delta)};
}

std::vector<double> stretch_spectrum(const SpdMatrix& u) {
  std::vector<double> delta(u.eigenvalues().size());
  for (std::size_t i = 0; i < delta.size(); ++i) {
    delta[i] = u.eigenvalues()[i] - 1.0;
  }
  return delta;
}

}  // namespace grioli
