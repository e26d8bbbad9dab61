#include "grioli/rotation.hpp"

#include <array>
#include <cmath>
#include <numbers>

#include "grioli/errors.hpp"

namespace grioli {

RotationMatrix RotationMatrix::from_matrix(const Mat& m) {
  const int n = m.dim();
  const Mat defect = m.transpose() * m - Mat::identity(n);
  if (defect.frobenius_norm() > 1e-12) {
    throw InvalidArgument("matrix is not orthogonal");
  }
  if (std::abs(det(m) - 1.0) > 1e-12) {
    throw NonOrientationError("orthogonal matrix has det != +1");
  }
  return RotationMatrix(m, Unchecked{});
}

RotationMatrix RotationMatrix::identity(int dim) {
  return RotationMatrix(Mat::identity(dim), Unchecked{});
}

AxisAngle::AxisAngle(const Vec3& v) : w(v) {
  if (!v.is_finite() || v.norm() > std::numbers::pi + 1e-12) {
    throw InvalidArgument("axis-angle magnitude must be <= pi");
  }
}

Mat rodrigues(const Vec3& w) {
  const double theta = w.norm();
  // sin(t)/t and (1-cos(t))/t^2, series for small angles.
  double a, b;
  if (theta < 1e-4) {
    const double t2 = theta * theta;
    a = 1.0 - t2 / 6.0 * (1.0 - t2 / 20.0);
    b = 0.5 - t2 / 24.0 * (1.0 - t2 / 30.0);
  } else {
    a = std::sin(theta) / theta;
    b = (1.0 - std::cos(theta)) / (theta * theta);
  }
  Mat k(3);
  k(0, 1) = -w.z;
  k(0, 2) = w.y;
  k(1, 0) = w.z;
  k(1, 2) = -w.x;
  k(2, 0) = -w.y;
  k(2, 1) = w.x;
  return Mat::identity(3) + a * k + b * (k * k);
}

RotationMatrix exp_so3(const AxisAngle& w) {
  return RotationMatrix(rodrigues(w.w), RotationMatrix::Unchecked{});
}

AxisAngle log_so3(const RotationMatrix& r) {
  if (r.dim() != 3) throw InvalidArgument("log_so3 needs a 3x3 rotation");
  const Mat& m = r.mat();
  const Vec3 vee{0.5 * (m(2, 1) - m(1, 2)), 0.5 * (m(0, 2) - m(2, 0)),
                 0.5 * (m(1, 0) - m(0, 1))};
  const double s = vee.norm();                  // sin(theta)
  const double c = 0.5 * (m.trace() - 1.0);     // cos(theta)
  const double theta = std::atan2(s, c);

  if (theta < 1e-8) {
    return AxisAngle(vee);  // w = vee * (1 + O(theta^2))
  }
  if (c > -0.999) {
    return AxisAngle(vee * (theta / s));
  }
  // Near a half turn sin(theta) loses accuracy; recover the axis from the
  // symmetric part, sym R = cos I + (1-cos) nn^T. The largest diagonal
  // entry gives one component through a well-conditioned square root, the
  // off-diagonal products give the other two at full accuracy.
  const double one_minus_c = 1.0 - c;
  int imax = 0;
  for (int i = 1; i < 3; ++i)
    if (m(i, i) > m(imax, imax)) imax = i;
  Vec3 n;
  n[imax] = std::sqrt(std::max(0.0, (m(imax, imax) - c) / one_minus_c));
  for (int i = 0; i < 3; ++i) {
    if (i == imax) continue;
    n[i] = 0.5 * (m(imax, i) + m(i, imax)) / (one_minus_c * n[imax]);
  }
  if (vee[imax] < 0.0) n = -n;
  const double norm = n.norm();
  return AxisAngle(n * (theta / (norm > 0.0 ? norm : 1.0)));
}

RotationMatrix haar_rotation(int dim, std::uint64_t seed) {
  Prng rng(seed);
  return haar_rotation(dim, rng);
}

RotationMatrix haar_rotation(int dim, Prng& rng) {
  Mat g(dim);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) g(i, j) = rng.normal();

  // Householder QR; Q gets the sign convention diag(R) > 0.
  Mat q = Mat::identity(dim);
  for (int c = 0; c < dim; ++c) {
    double norm = 0.0;
    for (int r = c; r < dim; ++r) norm += g(r, c) * g(r, c);
    norm = std::sqrt(norm);
    if (norm <= 1e-300) continue;
    std::array<double, kMaxDim> u{};
    const double alpha = (g(c, c) >= 0.0) ? -norm : norm;
    u[c] = g(c, c) - alpha;
    for (int r = c + 1; r < dim; ++r) u[r] = g(r, c);
    double unorm2 = 0.0;
    for (int r = c; r < dim; ++r) unorm2 += u[r] * u[r];
    if (unorm2 <= 1e-300) continue;
    for (int j = 0; j < dim; ++j) {
      double s = 0.0;
      for (int r = c; r < dim; ++r) s += u[r] * g(r, j);
      s *= 2.0 / unorm2;
      for (int r = c; r < dim; ++r) g(r, j) -= s * u[r];
    }
    for (int j = 0; j < dim; ++j) {
      double s = 0.0;
      for (int r = c; r < dim; ++r) s += u[r] * q(j, r);
      s *= 2.0 / unorm2;
      for (int r = c; r < dim; ++r) q(j, r) -= s * u[r];
    }
  }
  for (int c = 0; c < dim; ++c) {
    if (g(c, c) < 0.0) {
      for (int r = 0; r < dim; ++r) q(r, c) = -q(r, c);
    }
  }
  // Right-multiplication by a fixed reflection maps the det = -1 component
  // of O(dim) onto SO(dim) without disturbing the Haar distribution.
  if (det(q) < 0.0) {
    for (int r = 0; r < dim; ++r) q(r, dim - 1) = -q(r, dim - 1);
  }
  return RotationMatrix(q, RotationMatrix::Unchecked{});
}

}  // namespace grioli
