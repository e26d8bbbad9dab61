#pragma once

#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

#include "grioli/matrix.hpp"

namespace grioli {

// Ball B_rho(center) in R^3.
struct BallDomain {
  Vec3 center;
  double radius;
  BallDomain(const Vec3& c, double rho);
  double volume() const;
};

enum class QuadScheme { gauss, monte_carlo };

// Gauss: tensor product of Gauss-Legendre nodes in r and cos(theta) with a
// uniform trapezoid rule in phi (exact for trigonometric polynomials).
// Monte Carlo: seeded rejection sampling from the bounding cube; each
// sample index owns a counter-based substream, so estimates are
// independent of evaluation order.
struct QuadratureSpec {
  QuadScheme scheme = QuadScheme::gauss;
  int radial_order = 8;
  int polar_order = 8;
  int azimuthal_order = 16;
  long long sample_count = 1000000;
  std::uint64_t seed = 0;

  static QuadratureSpec gauss(int radial, int polar, int azimuthal);
  static QuadratureSpec monte_carlo(long long samples, std::uint64_t seed);
  void validate() const;  // orders >= 2, sample_count >= 1
};

using ScalarField = std::function<double(const Vec3&)>;

// Closed forms for the degree-2 integrands in scope; dimension 3 only.

// Integral of h_i h_j over the ball (h = offset from the center):
// (4 pi rho^5 / 15) I.
Mat moment_tensor_ball(const BallDomain& ball);

// Integral of <Z h, h> over the ball: (4 pi rho^5 / 15) tr Z.
double integral_quadform_ball(const Mat& z, const BallDomain& ball);

// Integral of |Z h|^2 over the ball: (4 pi rho^5 / 15) ||Z||_F^2.
double integral_sqnorm_ball(const Mat& z, const BallDomain& ball);

// Integral of <Z h, h>^2 over the unit sphere:
// (4 pi / 15) (2 ||sym Z||_F^2 + (tr Z)^2).
double integral_quadform_sq_sphere(const Mat& z);

// Quadrature oracles. f receives absolute points of the domain.
double quad_ball(const ScalarField& f, const BallDomain& ball,
                 const QuadratureSpec& spec);
double quad_sphere(const ScalarField& f, const QuadratureSpec& spec);

// Gauss-Legendre nodes and weights on [-1, 1].
std::pair<std::vector<double>, std::vector<double>> gauss_legendre(int order);

}  // namespace grioli
