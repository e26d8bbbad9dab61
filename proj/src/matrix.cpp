#include "grioli/matrix.hpp"

#include <algorithm>
#include <cmath>

#include "grioli/errors.hpp"

namespace grioli {

namespace {

void check_dim(int dim) {
  if (dim < kMinDim || dim > kMaxDim) {
    throw InvalidArgument("matrix dimension must be in [2, 8], got " +
                          std::to_string(dim));
  }
}

}  // namespace

Mat::Mat(int dim) : dim_(dim) { check_dim(dim); }

Mat Mat::identity(int dim) {
  Mat m(dim);
  for (int i = 0; i < dim; ++i) m(i, i) = 1.0;
  return m;
}

Mat Mat::from_rows(const std::vector<std::vector<double>>& rows) {
  const int n = static_cast<int>(rows.size());
  check_dim(n);
  Mat m(n);
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(rows[i].size()) != n) {
      throw InvalidArgument("matrix rows must all have length " +
                            std::to_string(n));
    }
    for (int j = 0; j < n; ++j) {
      if (!std::isfinite(rows[i][j])) {
        throw InvalidArgument("matrix entries must be finite");
      }
      m(i, j) = rows[i][j];
    }
  }
  return m;
}

Mat& Mat::operator+=(const Mat& o) {
  for (int k = 0; k < dim_ * dim_; ++k) e_[k] += o.e_[k];
  return *this;
}

Mat& Mat::operator-=(const Mat& o) {
  for (int k = 0; k < dim_ * dim_; ++k) e_[k] -= o.e_[k];
  return *this;
}

Mat& Mat::operator*=(double s) {
  for (int k = 0; k < dim_ * dim_; ++k) e_[k] *= s;
  return *this;
}

Mat Mat::transpose() const {
  Mat t(dim_);
  for (int i = 0; i < dim_; ++i)
    for (int j = 0; j < dim_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

double Mat::trace() const {
  double t = 0.0;
  for (int i = 0; i < dim_; ++i) t += (*this)(i, i);
  return t;
}

double Mat::frobenius_norm() const {
  double s = 0.0;
  for (int k = 0; k < dim_ * dim_; ++k) s += e_[k] * e_[k];
  return std::sqrt(s);
}

double Mat::max_abs() const {
  double m = 0.0;
  for (int k = 0; k < dim_ * dim_; ++k) m = std::max(m, std::abs(e_[k]));
  return m;
}

bool Mat::is_finite() const {
  for (int k = 0; k < dim_ * dim_; ++k)
    if (!std::isfinite(e_[k])) return false;
  return true;
}

Vec3 Mat::operator*(const Vec3& v) const {
  Vec3 r;
  for (int i = 0; i < 3; ++i)
    r[i] = (*this)(i, 0) * v.x + (*this)(i, 1) * v.y + (*this)(i, 2) * v.z;
  return r;
}

Mat operator+(Mat a, const Mat& b) { return a += b; }
Mat operator-(Mat a, const Mat& b) { return a -= b; }
Mat operator*(Mat a, double s) { return a *= s; }
Mat operator*(double s, Mat a) { return a *= s; }

Mat operator*(const Mat& a, const Mat& b) {
  const int n = a.dim();
  Mat c(n);
  for (int i = 0; i < n; ++i) {
    for (int k = 0; k < n; ++k) {
      const double aik = a(i, k);
      for (int j = 0; j < n; ++j) c(i, j) += aik * b(k, j);
    }
  }
  return c;
}

std::pair<Mat, Mat> split(const Mat& a) {
  const int n = a.dim();
  Mat s(n), w(n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      s(i, j) = 0.5 * (a(i, j) + a(j, i));
      w(i, j) = 0.5 * (a(i, j) - a(j, i));
    }
  }
  return {s, w};
}

Mat sym_part(const Mat& a) { return split(a).first; }
Mat skw_part(const Mat& a) { return split(a).second; }

namespace {

// LU with partial pivoting; returns false if a pivot is exactly zero.
bool lu_decompose(Mat& a, std::array<int, kMaxDim>& perm, int& sign) {
  const int n = a.dim();
  sign = 1;
  for (int i = 0; i < n; ++i) perm[i] = i;
  for (int c = 0; c < n; ++c) {
    int pivot = c;
    double best = std::abs(a(c, c));
    for (int r = c + 1; r < n; ++r) {
      if (std::abs(a(r, c)) > best) {
        best = std::abs(a(r, c));
        pivot = r;
      }
    }
    if (best == 0.0) return false;
    if (pivot != c) {
      for (int j = 0; j < n; ++j) std::swap(a(c, j), a(pivot, j));
      std::swap(perm[c], perm[pivot]);
      sign = -sign;
    }
    for (int r = c + 1; r < n; ++r) {
      a(r, c) /= a(c, c);
      const double f = a(r, c);
      for (int j = c + 1; j < n; ++j) a(r, j) -= f * a(c, j);
    }
  }
  return true;
}

}  // namespace

double det(const Mat& a) {
  Mat lu = a;
  std::array<int, kMaxDim> perm;
  int sign;
  if (!lu_decompose(lu, perm, sign)) return 0.0;
  double d = sign;
  for (int i = 0; i < a.dim(); ++i) d *= lu(i, i);
  return d;
}

Mat inverse(const Mat& a) {
  const int n = a.dim();
  Mat lu = a;
  std::array<int, kMaxDim> perm;
  int sign;
  if (!lu_decompose(lu, perm, sign)) {
    throw SingularError("matrix is singular, cannot invert");
  }
  Mat inv(n);
  for (int col = 0; col < n; ++col) {
    std::array<double, kMaxDim> b{};
    for (int i = 0; i < n; ++i) b[i] = (perm[i] == col) ? 1.0 : 0.0;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < i; ++j) b[i] -= lu(i, j) * b[j];
    for (int i = n - 1; i >= 0; --i) {
      for (int j = i + 1; j < n; ++j) b[i] -= lu(i, j) * b[j];
      b[i] /= lu(i, i);
    }
    for (int i = 0; i < n; ++i) inv(i, col) = b[i];
  }
  return inv;
}

}  // namespace grioli
