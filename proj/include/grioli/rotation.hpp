#pragma once

#include <cstdint>

#include "grioli/matrix.hpp"
#include "grioli/rng.hpp"

namespace grioli {

// Proper orthogonal matrix. Construction through from_matrix checks
// ||R^T R - I||_F <= 1e-12 and |det R - 1| <= 1e-12.
class RotationMatrix {
 public:
  RotationMatrix() : mat_(Mat::identity(3)) {}

  static RotationMatrix from_matrix(const Mat& m);
  static RotationMatrix identity(int dim);

  const Mat& mat() const { return mat_; }
  int dim() const { return mat_.dim(); }

 private:
  struct Unchecked {};
  RotationMatrix(const Mat& m, Unchecked) : mat_(m) {}
  Mat mat_;

  friend RotationMatrix exp_so3(const struct AxisAngle& w);
  friend RotationMatrix haar_rotation(int dim, Prng& rng);
};

// Rotation vector w: rotation by |w| radians about w/|w|, with |w| <= pi.
struct AxisAngle {
  Vec3 w;
  explicit AxisAngle(const Vec3& v);
  double angle() const { return w.norm(); }
};

// Rodrigues formula; valid for any magnitude. Raw chart for optimizers.
Mat rodrigues(const Vec3& w);

RotationMatrix exp_so3(const AxisAngle& w);

// Inverse of exp_so3; the returned magnitude lies in [0, pi].
AxisAngle log_so3(const RotationMatrix& r);

// Haar-distributed rotation: Gaussian matrix -> QR with the diagonal of R
// made positive -> det-corrected onto SO(dim). Deterministic per seed.
RotationMatrix haar_rotation(int dim, std::uint64_t seed);
RotationMatrix haar_rotation(int dim, Prng& rng);

}  // namespace grioli
