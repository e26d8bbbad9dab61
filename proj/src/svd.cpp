#include "grioli/svd.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numeric>

#include "grioli/errors.hpp"

namespace grioli {

Svd jacobi_svd(const Mat& a) {
  const int n = a.dim();
  Mat b = a;  // columns become U * diag(sigma)
  Mat v = Mat::identity(n);

  const double fro2 = a.frobenius_norm() * a.frobenius_norm();
  const double tol = 1e-14 * std::max(fro2, 1e-300);

  for (int sweep = 0; sweep < 64; ++sweep) {
    bool rotated = false;
    for (int p = 0; p < n; ++p) {
      for (int q = p + 1; q < n; ++q) {
        double app = 0.0, aqq = 0.0, apq = 0.0;
        for (int k = 0; k < n; ++k) {
          app += b(k, p) * b(k, p);
          aqq += b(k, q) * b(k, q);
          apq += b(k, p) * b(k, q);
        }
        if (std::abs(apq) <= tol) continue;
        rotated = true;

        const double theta = (aqq - app) / (2.0 * apq);
        const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                         (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (int k = 0; k < n; ++k) {
          const double bkp = b(k, p), bkq = b(k, q);
          b(k, p) = c * bkp - s * bkq;
          b(k, q) = s * bkp + c * bkq;
        }
        for (int k = 0; k < n; ++k) {
          const double vkp = v(k, p), vkq = v(k, q);
          v(k, p) = c * vkp - s * vkq;
          v(k, q) = s * vkp + c * vkq;
        }
      }
    }
    if (!rotated) break;
    if (sweep == 63) throw NoConvergenceError("jacobi SVD stalled");
  }

  std::array<double, kMaxDim> sig{};
  for (int j = 0; j < n; ++j) {
    double s = 0.0;
    for (int k = 0; k < n; ++k) s += b(k, j) * b(k, j);
    sig[j] = std::sqrt(s);
  }

  std::array<int, kMaxDim> order{};
  std::iota(order.begin(), order.begin() + n, 0);
  std::sort(order.begin(), order.begin() + n,
            [&](int i, int j) { return sig[i] > sig[j]; });

  Svd out{Mat(n), std::vector<double>(n), Mat(n)};
  const double tiny = 1e-300;
  for (int j = 0; j < n; ++j) {
    const int c = order[j];
    out.sigma[j] = sig[c];
    const double inv = (sig[c] > tiny) ? 1.0 / sig[c] : 0.0;
    for (int i = 0; i < n; ++i) {
      out.u(i, j) = b(i, c) * inv;
      out.v(i, j) = v(i, c);
    }
  }

  // Columns of U belonging to (numerically) zero singular values carry no
  // information; complete them to an orthonormal basis.
  for (int j = 0; j < n; ++j) {
    if (out.sigma[j] > tiny) continue;
    for (int e = 0; e < n; ++e) {
      std::array<double, kMaxDim> cand{};
      cand[e] = 1.0;
      for (int c = 0; c < j; ++c) {
        double proj = 0.0;
        for (int i = 0; i < n; ++i) proj += out.u(i, c) * cand[i];
        for (int i = 0; i < n; ++i) cand[i] -= proj * out.u(i, c);
      }
      double norm = 0.0;
      for (int i = 0; i < n; ++i) norm += cand[i] * cand[i];
      norm = std::sqrt(norm);
      if (norm > 0.5) {
        for (int i = 0; i < n; ++i) out.u(i, j) = cand[i] / norm;
        break;
      }
    }
  }

  // Deterministic sign convention.
  for (int j = 0; j < n; ++j) {
    int imax = 0;
    for (int i = 1; i < n; ++i)
      if (std::abs(out.v(i, j)) > std::abs(out.v(imax, j))) imax = i;
    if (out.v(imax, j) < 0.0) {
      for (int i = 0; i < n; ++i) {
        out.v(i, j) = -out.v(i, j);
        out.u(i, j) = -out.u(i, j);
      }
    }
  }
  return out;
}

std::vector<double> singular_values(const Mat& a) {
  return jacobi_svd(a).sigma;
}

double ui_norm(const Mat& a, NormKind kind) {
  const std::vector<double> sig = singular_values(a);
  switch (kind) {
    case NormKind::frobenius: {
      double s = 0.0;
      for (double x : sig) s += x * x;
      return std::sqrt(s);
    }
    case NormKind::spectral:
      return sig.front();
    case NormKind::nuclear: {
      double s = 0.0;
      for (double x : sig) s += x;
      return s;
    }
  }
  throw InvalidArgument("unknown norm kind");
}

}  // namespace grioli
