#pragma once

#include <cstdint>
#include <vector>

#include "robinson/matrix.hpp"

namespace robinson {

// gamma1 measures how far a symmetric matrix is from Robinson form:
//
//   gamma1(A) = n^-3 * sum over i < k < j of
//               max(A[i][j] - A[i][k], 0) + max(A[i][j] - A[k][j], 0).
//
// It is zero exactly on Robinson matrices, lies in [0, 1), ignores the
// diagonal, and for a binary non-Robinson matrix is at least n^-3.

// Literal triple loop, O(n^3). Binary inputs are accumulated in integers and
// divided once, so the result is exact; real inputs use compensated
// summation above n = 500.
double gamma1_direct(const SymmetricMatrix& a);
double gamma1_direct(const BinaryMask& a);

// Cuts the matrix into its distinct-value layers and scores each binary
// layer in O(n^2) with row prefix sums, O(m n^2) total for m distinct
// values. Exact on binary inputs; agrees with gamma1_direct to 1e-12 on
// real ones.
double gamma1_fast(const SymmetricMatrix& a);
double gamma1_fast(const BinaryMask& a);

namespace detail {

// n^3 * gamma1 of a 0/1 matrix as an exact integer, via per-row zero counts.
std::uint64_t gamma1_count(const BinaryMask& a);

// n^3 * gamma1 by the literal triple loop, exact integer.
std::uint64_t gamma1_count_direct(const BinaryMask& a);

// gamma1 of an arbitrary symmetric real grid (entries need not lie in
// [0, 1]); used to score difference matrices A - R.
double gamma1_grid(const std::vector<std::vector<double>>& grid);

}  // namespace detail

}  // namespace robinson
