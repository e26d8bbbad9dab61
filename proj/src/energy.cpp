#include "grioli/energy.hpp"

#include <cmath>

#include "grioli/errors.hpp"
#include "grioli/matfunc.hpp"

namespace grioli {

EnergyWeights::EnergyWeights(double mu_, double mu_c_) : mu(mu_), mu_c(mu_c_) {
  if (!(mu > 0.0) || !std::isfinite(mu)) {
    throw InvalidArgument("mu must be positive");
  }
  if (!(mu_c >= 0.0) || !std::isfinite(mu_c)) {
    throw InvalidArgument("mu_c must be nonnegative");
  }
}

namespace {

double weighted_split_norm(const Mat& a, const EnergyWeights& w) {
  const auto [sym, skw] = split(a);
  const double s = sym.frobenius_norm();
  const double k = skw.frobenius_norm();
  return w.mu * s * s + w.mu_c * k * k;
}

}  // namespace

double log_energy(const Mat& f, const RotationMatrix& q,
                  const EnergyWeights& w) {
  if (f.dim() != q.dim()) throw InvalidArgument("dimension mismatch");
  return weighted_split_norm(principal_log(q.mat().transpose() * f), w);
}

double euclidean_energy(const Mat& f, const RotationMatrix& q,
                        const EnergyWeights& w) {
  if (f.dim() != q.dim()) throw InvalidArgument("dimension mismatch");
  const Mat e = q.mat().transpose() * f - Mat::identity(f.dim());
  return weighted_split_norm(e, w);
}

}  // namespace grioli
