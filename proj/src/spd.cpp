#include "grioli/spd.hpp"

#include <cmath>

#include "grioli/eig.hpp"
#include "grioli/errors.hpp"

namespace grioli {

namespace {

Mat assemble(const std::vector<double>& values, const Mat& vectors) {
  const int n = vectors.dim();
  Mat d(n);
  for (int i = 0; i < n; ++i) d(i, i) = values[i];
  return sym_part(vectors * d * vectors.transpose());
}

}  // namespace

SpdMatrix::SpdMatrix(Mat m, std::vector<double> values, Mat vectors)
    : mat_(std::move(m)),
      values_(std::move(values)),
      vectors_(std::move(vectors)) {}

SpdMatrix SpdMatrix::from_matrix(const Mat& a) {
  const double defect = (a - a.transpose()).frobenius_norm();
  if (defect > 1e-12 * std::max(1.0, a.frobenius_norm())) {
    throw NotSpdError("matrix is not symmetric");
  }
  SymEig eig = sym_eig(a);
  if (eig.values.back() <= 1e-12 * eig.values.front()) {
    throw NotSpdError("matrix is not positive definite");
  }
  return SpdMatrix(sym_part(a), std::move(eig.values),
                   std::move(eig.vectors));
}

SpdMatrix SpdMatrix::from_eigensystem(const std::vector<double>& values,
                                      const Mat& vectors) {
  if (static_cast<int>(values.size()) != vectors.dim()) {
    throw InvalidArgument("eigensystem size mismatch");
  }
  for (double v : values) {
    if (!(v > 0.0) || !std::isfinite(v)) {
      throw NotSpdError("eigenvalues must be positive and finite");
    }
  }
  return SpdMatrix(assemble(values, vectors), values, vectors);
}

SpdMatrix spd_sqrt(const SpdMatrix& a) {
  std::vector<double> roots(a.eigenvalues().size());
  for (std::size_t i = 0; i < roots.size(); ++i) {
    roots[i] = std::sqrt(a.eigenvalues()[i]);
  }
  return SpdMatrix::from_eigensystem(roots, a.eigenvectors());
}

Mat spd_log(const SpdMatrix& a) {
  const int n = a.dim();
  Mat d(n);
  for (int i = 0; i < n; ++i) d(i, i) = std::log(a.eigenvalues()[i]);
  return sym_part(a.eigenvectors() * d * a.eigenvectors().transpose());
}

}  // namespace grioli
