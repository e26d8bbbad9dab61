#pragma once

#include "grioli/matrix.hpp"

namespace grioli {

// Matrix exponential by scaling and squaring with a truncated Taylor sum.
Mat mat_exp(const Mat& a);

// Principal square root via the product form of the Denman-Beavers
// iteration. Requires no eigenvalue on the closed negative real axis;
// callers are expected to have checked (principal_log does).
Mat principal_sqrt(const Mat& a);

// Principal matrix logarithm by inverse scaling and squaring: repeated
// principal square roots until ||X - I||_F < 0.25, then a Gregory series,
// then scaling back by 2^k. The spectrum of the result has imaginary parts
// in (-pi, pi).
//
// Throws SingularError if some eigenvalue is within 1e-10 * ||M||_F of
// zero, BranchCutError if one lies on the negative real axis (imaginary
// part below the same tolerance).
Mat principal_log(const Mat& m);

}  // namespace grioli
