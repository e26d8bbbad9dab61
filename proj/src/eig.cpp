#include "grioli/eig.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numeric>

#include "grioli/errors.hpp"

namespace grioli {

SymEig sym_eig(const Mat& a) {
  const int n = a.dim();
  Mat d = sym_part(a);
  Mat v = Mat::identity(n);

  const double scale = std::max(d.frobenius_norm(), 1e-300);
  const double tol = 1e-15 * scale;

  for (int sweep = 0; sweep < 64; ++sweep) {
    double off = 0.0;
    for (int p = 0; p < n; ++p)
      for (int q = p + 1; q < n; ++q) off += d(p, q) * d(p, q);
    if (std::sqrt(2.0 * off) <= tol) break;
    if (sweep == 63) throw NoConvergenceError("jacobi eigensolver stalled");

    for (int p = 0; p < n; ++p) {
      for (int q = p + 1; q < n; ++q) {
        const double apq = d(p, q);
        if (std::abs(apq) <= 1e-300) continue;
        const double theta = (d(q, q) - d(p, p)) / (2.0 * apq);
        const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                         (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (int k = 0; k < n; ++k) {
          const double dkp = d(k, p), dkq = d(k, q);
          d(k, p) = c * dkp - s * dkq;
          d(k, q) = s * dkp + c * dkq;
        }
        for (int k = 0; k < n; ++k) {
          const double dpk = d(p, k), dqk = d(q, k);
          d(p, k) = c * dpk - s * dqk;
          d(q, k) = s * dpk + c * dqk;
        }
        for (int k = 0; k < n; ++k) {
          const double vkp = v(k, p), vkq = v(k, q);
          v(k, p) = c * vkp - s * vkq;
          v(k, q) = s * vkp + c * vkq;
        }
      }
    }
  }

  std::array<int, kMaxDim> order{};
  std::iota(order.begin(), order.begin() + n, 0);
  std::sort(order.begin(), order.begin() + n,
            [&](int i, int j) { return d(i, i) > d(j, j); });

  SymEig out{std::vector<double>(n), Mat(n)};
  for (int j = 0; j < n; ++j) {
    out.values[j] = d(order[j], order[j]);
    for (int i = 0; i < n; ++i) out.vectors(i, j) = v(i, order[j]);
  }
  return out;
}

namespace {

using cplx = std::complex<double>;

struct CMat {
  int n;
  std::array<cplx, kMaxDim * kMaxDim> e{};
  cplx& operator()(int i, int j) { return e[i * n + j]; }
  cplx operator()(int i, int j) const { return e[i * n + j]; }
};

// Householder reduction of a real matrix to upper Hessenberg form.
Mat to_hessenberg(Mat h) {
  const int n = h.dim();
  for (int c = 0; c < n - 2; ++c) {
    double norm = 0.0;
    for (int r = c + 1; r < n; ++r) norm += h(r, c) * h(r, c);
    norm = std::sqrt(norm);
    if (norm <= 1e-300) continue;

    std::array<double, kMaxDim> u{};
    const double alpha = (h(c + 1, c) >= 0.0) ? -norm : norm;
    u[c + 1] = h(c + 1, c) - alpha;
    for (int r = c + 2; r < n; ++r) u[r] = h(r, c);
    double unorm2 = 0.0;
    for (int r = c + 1; r < n; ++r) unorm2 += u[r] * u[r];
    if (unorm2 <= 1e-300) continue;

    // H = I - 2 u u^T / (u^T u); apply from both sides.
    for (int j = 0; j < n; ++j) {
      double s = 0.0;
      for (int r = c + 1; r < n; ++r) s += u[r] * h(r, j);
      s *= 2.0 / unorm2;
      for (int r = c + 1; r < n; ++r) h(r, j) -= s * u[r];
    }
    for (int i = 0; i < n; ++i) {
      double s = 0.0;
      for (int r = c + 1; r < n; ++r) s += h(i, r) * u[r];
      s *= 2.0 / unorm2;
      for (int r = c + 1; r < n; ++r) h(i, r) -= s * u[r];
    }
  }
  return h;
}

void eig_2x2(cplx a, cplx b, cplx c, cplx d, cplx& l1, cplx& l2) {
  const cplx tr = a + d;
  const cplx disc = std::sqrt(tr * tr * 0.25 - (a * d - b * c));
  l1 = tr * 0.5 + disc;
  l2 = tr * 0.5 - disc;
}

// Givens rotation zeroing g in [f; g]: [c, s; -conj(s), c], c real.
void make_givens(cplx f, cplx g, double& c, cplx& s) {
  const double af = std::abs(f), ag = std::abs(g);
  if (ag == 0.0) {
    c = 1.0;
    s = 0.0;
    return;
  }
  if (af == 0.0) {
    c = 0.0;
    s = std::conj(g) / ag;
    return;
  }
  const double denom = std::hypot(af, ag);
  c = af / denom;
  s = (f / af) * std::conj(g) / denom;
}

}  // namespace

std::vector<std::complex<double>> eigenvalues(const Mat& a) {
  const int n = a.dim();
  const Mat hr = to_hessenberg(a);
  CMat h{n, {}};
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) h(i, j) = hr(i, j);

  std::vector<cplx> lambda(n);
  int hi = n - 1;
  int stagnant = 0;
  const double eps = 1e-16;

  int guard = 0;
  while (hi >= 0) {
    if (++guard > 40 * n * n) {
      throw NoConvergenceError("hessenberg QR iteration stalled");
    }
    // Deflate converged trailing entries.
    if (hi == 0) {
      lambda[0] = h(0, 0);
      break;
    }
    if (std::abs(h(hi, hi - 1)) <=
        eps * (std::abs(h(hi, hi)) + std::abs(h(hi - 1, hi - 1)))) {
      lambda[hi] = h(hi, hi);
      --hi;
      stagnant = 0;
      continue;
    }

    // Active block [lo, hi].
    int lo = hi;
    while (lo > 0 &&
           std::abs(h(lo, lo - 1)) >
               eps * (std::abs(h(lo, lo)) + std::abs(h(lo - 1, lo - 1)))) {
      --lo;
    }
    if (hi - lo == 1) {
      cplx l1, l2;
      eig_2x2(h(lo, lo), h(lo, hi), h(hi, lo), h(hi, hi), l1, l2);
      lambda[hi] = l1;
      lambda[lo] = l2;
      hi = lo - 1;
      stagnant = 0;
      continue;
    }

    // Wilkinson shift from the trailing 2x2; occasionally an exceptional
    // shift to break symmetry-induced stalls.
    cplx shift;
    if (++stagnant % 12 == 0) {
      shift = cplx(std::abs(h(hi, hi - 1).real()) +
                       std::abs(h(hi - 1, hi - 2).real()),
                   0.0);
    } else {
      cplx l1, l2;
      eig_2x2(h(hi - 1, hi - 1), h(hi - 1, hi), h(hi, hi - 1), h(hi, hi), l1,
              l2);
      shift = (std::abs(l1 - h(hi, hi)) < std::abs(l2 - h(hi, hi))) ? l1 : l2;
    }

    // QR step on the shifted block: Q^H (H - sI) = R, then H <- R Q + sI.
    for (int i = lo; i <= hi; ++i) h(i, i) -= shift;
    std::array<double, kMaxDim> cs{};
    std::array<cplx, kMaxDim> sn{};
    for (int k = lo; k < hi; ++k) {
      make_givens(h(k, k), h(k + 1, k), cs[k], sn[k]);
      for (int j = k; j <= hi; ++j) {
        const cplx t1 = h(k, j), t2 = h(k + 1, j);
        h(k, j) = cs[k] * t1 + sn[k] * t2;
        h(k + 1, j) = -std::conj(sn[k]) * t1 + cs[k] * t2;
      }
    }
    for (int k = lo; k < hi; ++k) {
      const int top = std::min(k + 2, hi);
      for (int i = lo; i <= top; ++i) {
        const cplx t1 = h(i, k), t2 = h(i, k + 1);
        h(i, k) = cs[k] * t1 + std::conj(sn[k]) * t2;
        h(i, k + 1) = -sn[k] * t1 + cs[k] * t2;
      }
    }
    for (int i = lo; i <= hi; ++i) h(i, i) += shift;
  }

  return lambda;
}

}  // namespace grioli
