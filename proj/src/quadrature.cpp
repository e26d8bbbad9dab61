#include "grioli/quadrature.hpp"

#include <cmath>
#include <numbers>

#include "grioli/errors.hpp"
#include "grioli/rng.hpp"

namespace grioli {

namespace {

constexpr double kPi = std::numbers::pi;

void check_dim3(const Mat& z) {
  if (z.dim() != 3) {
    throw InvalidArgument("ball and sphere identities are 3-dimensional");
  }
}

}  // namespace

BallDomain::BallDomain(const Vec3& c, double rho) : center(c), radius(rho) {
  if (!c.is_finite() || !std::isfinite(rho) || rho <= 0.0) {
    throw InvalidArgument("ball needs a finite center and radius > 0");
  }
}

double BallDomain::volume() const {
  return 4.0 / 3.0 * kPi * radius * radius * radius;
}

QuadratureSpec QuadratureSpec::gauss(int radial, int polar, int azimuthal) {
  QuadratureSpec spec;
  spec.scheme = QuadScheme::gauss;
  spec.radial_order = radial;
  spec.polar_order = polar;
  spec.azimuthal_order = azimuthal;
  spec.validate();
  return spec;
}

QuadratureSpec QuadratureSpec::monte_carlo(long long samples,
                                           std::uint64_t seed) {
  QuadratureSpec spec;
  spec.scheme = QuadScheme::monte_carlo;
  spec.sample_count = samples;
  spec.seed = seed;
  spec.validate();
  return spec;
}

void QuadratureSpec::validate() const {
  if (scheme == QuadScheme::gauss) {
    if (radial_order < 2 || polar_order < 2 || azimuthal_order < 2) {
      throw InvalidArgument("gauss orders must be >= 2");
    }
  } else if (sample_count < 1) {
    throw InvalidArgument("sample_count must be >= 1");
  }
}

Mat moment_tensor_ball(const BallDomain& ball) {
  const double rho = ball.radius;
  const double c = 4.0 * kPi * std::pow(rho, 5) / 15.0;
  return c * Mat::identity(3);
}

double integral_quadform_ball(const Mat& z, const BallDomain& ball) {
  check_dim3(z);
  return 4.0 * kPi * std::pow(ball.radius, 5) / 15.0 * z.trace();
}

double integral_sqnorm_ball(const Mat& z, const BallDomain& ball) {
  check_dim3(z);
  const double fro = z.frobenius_norm();
  return 4.0 * kPi * std::pow(ball.radius, 5) / 15.0 * fro * fro;
}

double integral_quadform_sq_sphere(const Mat& z) {
  check_dim3(z);
  const double sym_fro = sym_part(z).frobenius_norm();
  const double tr = z.trace();
  return 4.0 * kPi / 15.0 * (2.0 * sym_fro * sym_fro + tr * tr);
}

std::pair<std::vector<double>, std::vector<double>> gauss_legendre(
    int order) {
  if (order < 1) throw InvalidArgument("gauss order must be >= 1");
  std::vector<double> x(order), w(order);
  const int m = (order + 1) / 2;
  for (int i = 0; i < m; ++i) {
    // Newton iteration from the Chebyshev estimate of the i-th root.
    double z = std::cos(kPi * (i + 0.75) / (order + 0.5));
    double pp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = 0.0;
      for (int j = 0; j < order; ++j) {
        const double p2 = p1;
        p1 = p0;
        p0 = ((2.0 * j + 1.0) * z * p1 - j * p2) / (j + 1.0);
      }
      pp = order * (z * p0 - p1) / (z * z - 1.0);
      const double dz = p0 / pp;
      z -= dz;
      if (std::abs(dz) < 1e-15) break;
    }
    x[i] = -z;
    x[order - 1 - i] = z;
    w[i] = 2.0 / ((1.0 - z * z) * pp * pp);
    w[order - 1 - i] = w[i];
  }
  return {x, w};
}

double quad_ball(const ScalarField& f, const BallDomain& ball,
                 const QuadratureSpec& spec) {
  spec.validate();
  const double rho = ball.radius;

  if (spec.scheme == QuadScheme::monte_carlo) {
    const Prng base(spec.seed);
    double sum = 0.0;
    for (long long i = 0; i < spec.sample_count; ++i) {
      Prng sub = base.fork(static_cast<std::uint64_t>(i));
      Vec3 h;
      do {
        h = {rho * sub.uniform(-1.0, 1.0), rho * sub.uniform(-1.0, 1.0),
             rho * sub.uniform(-1.0, 1.0)};
      } while (h.squared_norm() > rho * rho);
      const double v = f(ball.center + h);
      if (!std::isfinite(v)) {
        throw NonFiniteError("integrand returned NaN/Inf");
      }
      sum += v;
    }
    return ball.volume() * sum / static_cast<double>(spec.sample_count);
  }

  const auto [xr, wr] = gauss_legendre(spec.radial_order);
  const auto [xu, wu] = gauss_legendre(spec.polar_order);
  const int nphi = spec.azimuthal_order;
  double sum = 0.0;
  for (int ir = 0; ir < spec.radial_order; ++ir) {
    const double r = 0.5 * rho * (xr[ir] + 1.0);
    const double wr_scaled = 0.5 * rho * wr[ir] * r * r;
    for (int iu = 0; iu < spec.polar_order; ++iu) {
      const double cos_t = xu[iu];
      const double sin_t = std::sqrt(std::max(0.0, 1.0 - cos_t * cos_t));
      for (int ip = 0; ip < nphi; ++ip) {
        const double phi = 2.0 * kPi * ip / nphi;
        const Vec3 h{r * sin_t * std::cos(phi), r * sin_t * std::sin(phi),
                     r * cos_t};
        const double v = f(ball.center + h);
        if (!std::isfinite(v)) {
          throw NonFiniteError("integrand returned NaN/Inf");
        }
        sum += wr_scaled * wu[iu] * (2.0 * kPi / nphi) * v;
      }
    }
  }
  return sum;
}

double quad_sphere(const ScalarField& f, const QuadratureSpec& spec) {
  spec.validate();

  if (spec.scheme == QuadScheme::monte_carlo) {
    const Prng base(spec.seed);
    double sum = 0.0;
    for (long long i = 0; i < spec.sample_count; ++i) {
      Prng sub = base.fork(static_cast<std::uint64_t>(i));
      Vec3 h;
      double norm;
      do {
        h = {sub.normal(), sub.normal(), sub.normal()};
        norm = h.norm();
      } while (norm < 1e-8);
      const double v = f(h * (1.0 / norm));
      if (!std::isfinite(v)) {
        throw NonFiniteError("integrand returned NaN/Inf");
      }
      sum += v;
    }
    return 4.0 * kPi * sum / static_cast<double>(spec.sample_count);
  }

  const auto [xu, wu] = gauss_legendre(spec.polar_order);
  const int nphi = spec.azimuthal_order;
  double sum = 0.0;
  for (int iu = 0; iu < spec.polar_order; ++iu) {
    const double cos_t = xu[iu];
    const double sin_t = std::sqrt(std::max(0.0, 1.0 - cos_t * cos_t));
    for (int ip = 0; ip < nphi; ++ip) {
      const double phi = 2.0 * kPi * ip / nphi;
      const Vec3 h{sin_t * std::cos(phi), sin_t * std::sin(phi), cos_t};
      const double v = f(h);
      if (!std::isfinite(v)) {
        throw NonFiniteError("integrand returned NaN/Inf");
      }
      sum += wu[iu] * (2.0 * kPi / nphi) * v;
    }
  }
  return sum;
}

}  // namespace grioli
