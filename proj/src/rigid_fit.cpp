#include "grioli/rigid_fit.hpp"

#include <array>
#include <cmath>
#include <numbers>

#include "grioli/errors.hpp"
#include "grioli/polar.hpp"
#include "grioli/rng.hpp"

namespace grioli {

namespace {

constexpr double kPi = std::numbers::pi;

double ball_coeff3(double rho) { return 4.0 / 3.0 * kPi * std::pow(rho, 3); }
double ball_coeff5(double rho) { return 4.0 / 15.0 * kPi * std::pow(rho, 5); }

// Everything about S that the per-rotation evaluation reuses.
struct FitContext {
  Mat rotation;              // polar factor R
  Mat eigvecs;               // eigenvectors V of the stretch U
  std::array<double, 3> d;   // stretch eigenvalues 1 + Delta_s
  double stretch_term;       // sum (1+Delta_s)^2 + 3
  Vec3 image_offset;         // p - p*
};

FitContext make_context(const AffineMap& s, const Vec3& center) {
  if (det(s.linear) <= 0.0) {
    throw NonOrientationError("affine map must preserve orientation");
  }
  const PolarFactors pf = polar_svd(s.linear);
  FitContext ctx{pf.orthogonal, pf.stretch.eigenvectors(), {}, 3.0,
                 s.translation - center};
  for (int i = 0; i < 3; ++i) {
    ctx.d[i] = pf.stretch.eigenvalues()[i];
    ctx.stretch_term += ctx.d[i] * ctx.d[i];
  }
  return ctx;
}

double distance_with_context(const FitContext& ctx, const Mat& r_prime,
                             const Vec3& t_prime, const BallDomain& ball) {
  const Vec3 mismatch = ctx.image_offset - t_prime;
  const Vec3 t2 = ctx.rotation.transpose() * mismatch;

  // Diagonal of V^T (R^T R') V: s-th entries pair the s-th columns of
  // R V and R' V.
  const Mat rv = ctx.rotation * ctx.eigvecs;
  const Mat rpv = r_prime * ctx.eigvecs;
  double cross = 0.0;
  for (int s = 0; s < 3; ++s) {
    double rss = 0.0;
    for (int i = 0; i < 3; ++i) rss += rv(i, s) * rpv(i, s);
    cross += ctx.d[s] * rss;
  }
  return ball_coeff3(ball.radius) * t2.squared_norm() +
         ball_coeff5(ball.radius) * std::abs(ctx.stretch_term - 2.0 * cross);
}

}  // namespace

AffineMap::AffineMap(const Mat& a, const Vec3& p) : linear(a), translation(p) {
  if (a.dim() != 3) throw InvalidArgument("affine map must be 3x3");
  if (!p.is_finite()) throw InvalidArgument("image point must be finite");
}

Vec3 AffineMap::apply(const Vec3& x, const Vec3& center) const {
  return translation + linear * (x - center);
}

RigidMotion RigidMotion::centered(const RotationMatrix& r,
                                  const Vec3& t_prime, const Vec3& center) {
  return RigidMotion{r, center + t_prime - r.mat() * center};
}

Vec3 RigidMotion::centered_translation(const Vec3& center) const {
  return translation + rotation.mat() * center - center;
}

Vec3 RigidMotion::apply(const Vec3& x) const {
  return translation + rotation.mat() * x;
}

double distance_to_rigid(const AffineMap& s, const RigidMotion& motion,
                         const BallDomain& ball) {
  const FitContext ctx = make_context(s, ball.center);
  return distance_with_context(ctx, motion.rotation.mat(),
                               motion.centered_translation(ball.center),
                               ball);
}

FitResult best_rigid(const AffineMap& s, const BallDomain& ball) {
  const FitContext ctx = make_context(s, ball.center);
  const RotationMatrix r = RotationMatrix::from_matrix(ctx.rotation);
  const RigidMotion best = RigidMotion::centered(r, ctx.image_offset,
                                                 ball.center);
  double min_distance = 0.0;
  for (int i = 0; i < 3; ++i) {
    const double delta = ctx.d[i] - 1.0;
    min_distance += delta * delta;
  }
  min_distance *= ball_coeff5(ball.radius);

  const Vec3 residual = ctx.rotation.transpose() *
                        (ctx.image_offset -
                         best.centered_translation(ball.center));
  const Mat relative = ctx.rotation.transpose() * r.mat();
  return FitResult{best, min_distance, residual, relative};
}

std::pair<Mat, double> best_skew(const Mat& grad_u, const BallDomain& ball) {
  if (grad_u.dim() != 3) throw InvalidArgument("gradient must be 3x3");
  const auto [sym, skw] = split(grad_u);
  const double fro = sym.frobenius_norm();
  return {skw, ball_coeff5(ball.radius) * fro * fro};
}

std::pair<RigidMotion, double> min_over_rotations_oracle(
    const AffineMap& s, const BallDomain& ball,
    const RotationSampler& sampler) {
  const FitContext ctx = make_context(s, ball.center);
  const Vec3 t_prime = ctx.image_offset;

  Mat best_r = Mat::identity(3);
  double best_value = distance_with_context(ctx, best_r, t_prime, ball);

  const auto consider = [&](const Mat& r) {
    const double value = distance_with_context(ctx, r, t_prime, ball);
    if (value < best_value) {
      best_value = value;
      best_r = r;
      return;
    }
    if (value == best_value) {  // lexicographic tie-break
      for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
          if (r(i, j) == best_r(i, j)) continue;
          if (r(i, j) < best_r(i, j)) best_r = r;
          return;
        }
      }
    }
  };

  if (const auto* haar = std::get_if<HaarSampler>(&sampler)) {
    Prng rng(haar->seed);
    for (long long i = 0; i < haar->count; ++i) {
      consider(haar_rotation(3, rng).mat());
    }
  } else {
    const int res = std::get<GridSampler>(sampler).resolution;
    if (res < 2) throw InvalidArgument("grid resolution must be >= 2");
    const double step = 2.0 * kPi / (res - 1);
    for (int i = 0; i < res; ++i) {
      for (int j = 0; j < res; ++j) {
        for (int k = 0; k < res; ++k) {
          const Vec3 w{-kPi + i * step, -kPi + j * step, -kPi + k * step};
          if (w.squared_norm() > kPi * kPi) continue;
          consider(rodrigues(w));
        }
      }
    }
  }

  const RigidMotion motion = RigidMotion::centered(
      RotationMatrix::from_matrix(best_r), t_prime, ball.center);
  return {motion, best_value};
}

Mat fd_gradient(const VectorField& field, const Vec3& p, double h) {
  if (!(h > 0.0) || !std::isfinite(h)) {
    throw InvalidArgument("step size must be positive");
  }
  Mat grad(3);
  for (int j = 0; j < 3; ++j) {
    Vec3 dp;
    dp[j] = h;
    const Vec3 fp = field(p + dp);
    const Vec3 fm = field(p - dp);
    if (!fp.is_finite() || !fm.is_finite()) {
      throw NonFiniteError("field returned NaN/Inf");
    }
    for (int i = 0; i < 3; ++i) grad(i, j) = (fp[i] - fm[i]) / (2.0 * h);
  }
  return grad;
}

}  // namespace grioli
