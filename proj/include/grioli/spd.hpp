#pragma once

#include <vector>

#include "grioli/matrix.hpp"

namespace grioli {

// Symmetric positive definite matrix with its eigendecomposition attached.
// Eigenvalues are sorted descending; eigenvector columns are orthonormal.
class SpdMatrix {
 public:
  // Throws NotSpdError if the symmetry defect exceeds 1e-12 (relative to
  // max(1, ||A||_F)) or min eigenvalue <= 1e-12 * max eigenvalue.
  static SpdMatrix from_matrix(const Mat& a);
  // Assembles V diag(values) V^T from a ready eigensystem (values > 0,
  // orthonormal columns); used where the decomposition is already known.
  static SpdMatrix from_eigensystem(const std::vector<double>& values,
                                    const Mat& vectors);

  const Mat& mat() const { return mat_; }
  const std::vector<double>& eigenvalues() const { return values_; }
  const Mat& eigenvectors() const { return vectors_; }
  int dim() const { return mat_.dim(); }

 private:
  SpdMatrix(Mat m, std::vector<double> values, Mat vectors);
  Mat mat_;
  std::vector<double> values_;
  Mat vectors_;
};

// Principal square root: same eigenvectors, square-rooted eigenvalues.
SpdMatrix spd_sqrt(const SpdMatrix& a);

// Symmetric logarithm: same eigenvectors, log eigenvalues.
Mat spd_log(const SpdMatrix& a);

}  // namespace grioli
