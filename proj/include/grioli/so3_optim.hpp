#pragma once

#include <cstdint>

#include "grioli/energy.hpp"
#include "grioli/matrix.hpp"
#include "grioli/rotation.hpp"

namespace grioli {

enum class EnergyKind { log, euclidean };

struct OptimizerConfig {
  int haar_starts = 30;
  std::uint64_t seed = 0;
  double simplex_tol = 1e-10;  // Nelder-Mead stops below this diameter
  int max_iter = 5000;         // per start
};

struct OptimizationReport {
  RotationMatrix argmin;
  double min_value = 0.0;
  double polar_value = 0.0;  // objective at the polar factor
  double gap = 0.0;          // polar_value - min_value
  int starts_used = 0;
  bool converged = false;    // the winning start met the simplex tolerance
};

// Multi-start Nelder-Mead over axis-angle coordinates. Starts at the polar
// factor, the identity, and `haar_starts` Haar rotations; for the log
// objective, branch-cut points evaluate to +inf. The winner is the smallest
// (value, start index) pair, so results are deterministic per seed.
// Requires n = 3 and det F > 0.
OptimizationReport minimize_over_so3(EnergyKind kind, const Mat& f,
                                     const EnergyWeights& w,
                                     const OptimizerConfig& config = {});

struct LogOptimalityReport {
  OptimizationReport opt;
  double closed_form;  // mu ||log U||_F^2
  double deviation;    // |min_value - closed_form|
};

// Runs the optimizer on the log energy and asserts the minimum matches
// mu ||log U||_F^2 within 1e-6 * (1 + min) with a nonnegative gap at the
// polar factor. AssertionError carries F, the weights and the report.
LogOptimalityReport verify_log_optimality(const Mat& f,
                                          const EnergyWeights& w,
                                          const OptimizerConfig& config = {});

struct CounterexampleSearch {
  std::uint64_t seed = 1;
  int trials = 500;
};

struct Counterexample {
  Mat f;
  OptimizationReport report;
  int trial_index;
};

// Random search for a deformation where the polar factor fails to minimize
// the weighted Euclidean energy. Trials draw F = R0 * U0 with U0 biased
// toward strongly anisotropic stretch (eigenvalues in [0.1, 5], ratio
// >= 10); a hit is a relative gap above 1e-3. Throws NotFoundError after
// the trial budget (the expected outcome when mu_c >= mu).
Counterexample find_euclidean_counterexample(
    const EnergyWeights& w, const CounterexampleSearch& search = {},
    const OptimizerConfig& config = {});

}  // namespace grioli
