#pragma once

#include "robinson/matrix.hpp"

namespace robinson {

// One-pass Robinson rounding of a 0/1 matrix: cell (i, j), i <= j, becomes
// black iff the upper-right corner above it holds at least t ones
// (ur(i, j) >= t). The first and last row and column always come out white
// because their corners are empty. The black region is convex towards the
// diagonal, so the output is Robinson for every threshold t > 0.
BinaryMask robinson_approx_binary(const BinaryMask& a, double t);

// Threshold making the rounding above safe without any preprocessing, for a
// unit-diagonal matrix with gamma1 value eps: n^2 * sqrt(4 * eps). The
// rounded result then sits within 2^(9/2) * eps^(1/4) + 5/n of the input.
double threshold_corollary(double eps, int n);

// Smaller threshold used after the inversion-removing preprocessing pass:
// 4^(-2/3) * eps^(2/3) * n^2. The combined distance is at most
// 26 * eps^(1/3). Strictly below threshold_corollary for 0 < eps < 1.
double threshold_theorem(double eps, int n);

}  // namespace robinson
