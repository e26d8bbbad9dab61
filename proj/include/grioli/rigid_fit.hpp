#pragma once

#include <cstdint>
#include <functional>
#include <utility>
#include <variant>

#include "grioli/matrix.hpp"
#include "grioli/quadrature.hpp"
#include "grioli/rotation.hpp"

namespace grioli {

// Tangent model of a deformation at the ball center p*:
// S(x) = translation + linear * (x - p*), where translation is the image
// point S(p*).
struct AffineMap {
  Mat linear;
  Vec3 translation;
  AffineMap(const Mat& a, const Vec3& p);  // requires a 3x3 linear part
  Vec3 apply(const Vec3& x, const Vec3& center) const;
};

// Rigid motion stored in the uncentered form S'(x) = translation + R x.
// The centered form around a point c, S'(x) = c + t' + R (x - c), is what
// the closed-form distance uses internally; the two helpers convert.
struct RigidMotion {
  RotationMatrix rotation;
  Vec3 translation;

  static RigidMotion centered(const RotationMatrix& r, const Vec3& t_prime,
                              const Vec3& center);
  Vec3 centered_translation(const Vec3& center) const;
  Vec3 apply(const Vec3& x) const;
};

struct FitResult {
  RigidMotion best;
  double min_distance;
  Vec3 residual_translation;  // t'' at the optimum (zero)
  Mat relative_rotation;      // R^T R' at the optimum (identity)
};

// Squared L2 distance of the affine map and the rigid motion over the
// ball, evaluated by the closed form
//   (4 pi rho^3 / 3) |t''|^2
//   + (4 pi rho^5 / 15) sum_s [ (1+D_s)^2 + 1 - 2 (1+D_s) r_ss ],
// with t'' the rotated translation mismatch and r_ss the diagonal of the
// relative rotation expressed in the stretch eigenbasis.
// Throws NonOrientationError if det(linear) <= 0.
double distance_to_rigid(const AffineMap& s, const RigidMotion& motion,
                         const BallDomain& ball);

// The minimizer: rotation = polar factor of the linear part, translation
// mapping the ball center to its image; minimum (4 pi rho^5/15) sum D_s^2.
FitResult best_rigid(const AffineMap& s, const BallDomain& ball);

// Linearized problem: best skew approximation of a displacement gradient.
// Returns (skw grad_u, (4 pi rho^5 / 15) ||sym grad_u||_F^2).
std::pair<Mat, double> best_skew(const Mat& grad_u, const BallDomain& ball);

struct HaarSampler {
  long long count;
  std::uint64_t seed;
};
// Cartesian lattice over the axis-angle ball |w| <= pi, clipped to the
// ball; the identity is always included as a candidate.
struct GridSampler {
  int resolution;
};
using RotationSampler = std::variant<HaarSampler, GridSampler>;

// Brute-force check of the argmin: evaluates the rigid distance at
// t' = p - p* over sampled rotations and returns the best candidate found.
// Ties break on lexicographic rotation entries, so the result is
// deterministic for a fixed sampler.
std::pair<RigidMotion, double> min_over_rotations_oracle(
    const AffineMap& s, const BallDomain& ball,
    const RotationSampler& sampler);

using VectorField = std::function<Vec3(const Vec3&)>;

// Central-difference gradient of a displacement field at a point.
// Throws NonFiniteError if the field returns NaN/Inf.
Mat fd_gradient(const VectorField& field, const Vec3& p, double h);

}  // namespace grioli
