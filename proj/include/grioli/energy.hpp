#pragma once

#include "grioli/matrix.hpp"
#include "grioli/rotation.hpp"

namespace grioli {

// Weights of the symmetric and skew parts of a strain measure.
struct EnergyWeights {
  double mu;
  double mu_c;
  EnergyWeights(double mu_, double mu_c_);  // mu > 0, mu_c >= 0
};

// mu ||sym Log(Q^T F)||_F^2 + mu_c ||skw Log(Q^T F)||_F^2 with the
// principal logarithm; BranchCutError propagates from there.
double log_energy(const Mat& f, const RotationMatrix& q,
                  const EnergyWeights& w);

// mu ||sym(Q^T F - I)||_F^2 + mu_c ||skw(Q^T F - I)||_F^2.
double euclidean_energy(const Mat& f, const RotationMatrix& q,
                        const EnergyWeights& w);

}  // namespace grioli
