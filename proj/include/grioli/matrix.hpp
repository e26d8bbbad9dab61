#pragma once

#include <array>
#include <cmath>
#include <utility>
#include <vector>

namespace grioli {

inline constexpr int kMinDim = 2;
inline constexpr int kMaxDim = 8;

struct Vec3 {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  double& operator[](int i) { return (&x)[i]; }
  double operator[](int i) const { return (&x)[i]; }

  Vec3 operator+(const Vec3& o) const { return {x + o.x, y + o.y, z + o.z}; }
  Vec3 operator-(const Vec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
  Vec3 operator-() const { return {-x, -y, -z}; }
  Vec3 operator*(double s) const { return {x * s, y * s, z * s}; }
  Vec3& operator+=(const Vec3& o) {
    x += o.x;
    y += o.y;
    z += o.z;
    return *this;
  }

  double squared_norm() const { return x * x + y * y + z * z; }
  double norm() const { return std::sqrt(squared_norm()); }
  bool is_finite() const {
    return std::isfinite(x) && std::isfinite(y) && std::isfinite(z);
  }
};

inline Vec3 operator*(double s, const Vec3& v) { return v * s; }
inline double dot(const Vec3& a, const Vec3& b) {
  return a.x * b.x + a.y * b.y + a.z * b.z;
}

// Dense real square matrix, row-major, dimension 2..8.
class Mat {
 public:
  explicit Mat(int dim);  // zero matrix; throws InvalidArgument for bad dim

  static Mat identity(int dim);
  // Validates squareness, dimension range and finiteness of every entry.
  static Mat from_rows(const std::vector<std::vector<double>>& rows);

  int dim() const { return dim_; }

  double& operator()(int i, int j) { return e_[i * dim_ + j]; }
  double operator()(int i, int j) const { return e_[i * dim_ + j]; }

  Mat& operator+=(const Mat& o);
  Mat& operator-=(const Mat& o);
  Mat& operator*=(double s);

  Mat transpose() const;
  double trace() const;
  double frobenius_norm() const;
  double max_abs() const;
  bool is_finite() const;

  // Matrix-vector product, dim 3 only.
  Vec3 operator*(const Vec3& v) const;

 private:
  int dim_;
  std::array<double, kMaxDim * kMaxDim> e_{};
};

Mat operator+(Mat a, const Mat& b);
Mat operator-(Mat a, const Mat& b);
Mat operator*(Mat a, double s);
Mat operator*(double s, Mat a);
Mat operator*(const Mat& a, const Mat& b);

// Symmetric / skew-symmetric splitting: A = sym + skw.
std::pair<Mat, Mat> split(const Mat& a);
Mat sym_part(const Mat& a);
Mat skw_part(const Mat& a);

double det(const Mat& a);
Mat inverse(const Mat& a);  // throws SingularError

}  // namespace grioli
