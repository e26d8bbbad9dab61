#include "grioli/matfunc.hpp"

#include <cmath>
#include <limits>

#include "grioli/eig.hpp"
#include "grioli/errors.hpp"

namespace grioli {

Mat mat_exp(const Mat& a) {
  const int n = a.dim();
  const double norm = a.frobenius_norm();
  int s = 0;
  double scaled = norm;
  while (scaled > 0.5) {
    scaled *= 0.5;
    ++s;
  }
  Mat t = a * std::ldexp(1.0, -s);

  Mat sum = Mat::identity(n) + t;
  Mat term = t;
  for (int k = 2; k <= 30; ++k) {
    term = term * t;
    term *= 1.0 / k;
    sum += term;
    if (term.frobenius_norm() <= 1e-18 * sum.frobenius_norm()) break;
  }
  for (int k = 0; k < s; ++k) sum = sum * sum;
  return sum;
}

Mat principal_sqrt(const Mat& a) {
  const int n = a.dim();
  const Mat id = Mat::identity(n);
  Mat m = a;
  Mat y = a;
  double defect = (m - id).frobenius_norm();
  for (int iter = 0; iter < 60 && defect > 1e-14; ++iter) {
    // Determinant scaling accelerates the early iterations; it fades out
    // automatically as det(M) -> 1.
    double g = 1.0;
    if (defect > 1e-2) {
      const double d = std::abs(det(m));
      if (d > 1e-300) g = std::pow(d, -1.0 / (2.0 * n));
    }
    const Mat minv = inverse(m);
    const Mat ynew = 0.5 * (g * y + (1.0 / g) * (y * minv));
    m = 0.5 * (id + 0.5 * ((g * g) * m + (1.0 / (g * g)) * minv));
    const double step = (ynew - y).frobenius_norm();
    y = ynew;
    defect = (m - id).frobenius_norm();
    if (step <= 1e-15 * y.frobenius_norm()) break;  // stalled at roundoff
  }
  if (defect > 1e-8) {
    throw NoConvergenceError("denman-beavers square root did not converge");
  }
  return y;
}

Mat principal_log(const Mat& m) {
  const int n = m.dim();
  const double scale = m.frobenius_norm();
  const double tol = 1e-10 * scale;
  if (!(scale > 0.0)) throw SingularError("zero matrix has no logarithm");

  for (const auto& lambda : eigenvalues(m)) {
    if (std::abs(lambda) <= tol) {
      throw SingularError("matrix has a (near-)zero eigenvalue");
    }
    if (lambda.real() < 0.0 && std::abs(lambda.imag()) <= tol) {
      throw BranchCutError(
          "eigenvalue on the negative real axis; principal logarithm "
          "undefined");
    }
  }

  const Mat id = Mat::identity(n);
  Mat t = m;
  int k = 0;
  while ((t - id).frobenius_norm() >= 0.25) {
    if (++k > 60) throw NoConvergenceError("inverse scaling stalled");
    t = principal_sqrt(t);
  }

  // Gregory series: log T = 2 atanh(Z) with Z = (T - I)(T + I)^{-1};
  // ||Z|| < 0.143 here, so a few odd powers reach machine precision.
  const Mat z = (t - id) * inverse(t + id);
  const Mat z2 = z * z;
  Mat term = z;
  Mat sum = z;
  for (int j = 3; j <= 41; j += 2) {
    term = term * z2;
    sum += (1.0 / j) * term;
    if (term.frobenius_norm() <= 1e-18 * (1.0 + sum.frobenius_norm())) break;
  }
  return std::ldexp(2.0, k) * sum;
}

}  // namespace grioli
