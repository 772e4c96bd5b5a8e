#pragma once

#include <cstdint>
#include <vector>

#include "robinson/matrix.hpp"

namespace robinson {

// One inversion repair recorded by preprocess. Counts are taken in the
// matrix as it stood when the cell was toggled; gamma counts are the exact
// integers n^3 * gamma1.
struct ToggleRecord {
    int i = 0, j = 0;
    std::uint32_t ur_count = 0;
    std::uint32_t ll_count = 0;
    std::uint64_t gamma_count_before = 0;
    std::uint64_t gamma_count_after = 0;
    std::uint64_t cells_changed = 0;  // over the full matrix, mirrors included
};

struct ToggleTrace {
    std::vector<ToggleRecord> toggles;
    double gamma_before = 0;  // gamma1 of the input
    double gamma_after = 0;   // gamma1 of the output
    double l1_moved = 0;      // l1 distance from input to output
};

struct PreprocessResult {
    BinaryMask matrix;
    ToggleTrace trace;
};

// Empties the corner above (i, j) and fills the triangle below it: cells
// {(r, s) : r < i, j < s} become 0 and {(r, s) : i <= r <= s <= j} become 1,
// mirrored across the diagonal. Requires 1 <= i <= j <= n. Never increases
// gamma1.
BinaryMask toggle(const BinaryMask& a, int i, int j);

// Single pass over cells (i, j), i <= j, in row-major order. A cell whose
// corner count ur and triangle count ll both reach t is inverted and gets
// toggled; counts are rebuilt from the current matrix before each test.
// After the pass no cell has both counts at t or above, each toggle drops
// n^3 * gamma1 by at least ur * ll / n, and the total movement satisfies
// l1_moved <= (4 n^2 / t) * (gamma_before - gamma_after).
PreprocessResult preprocess(const BinaryMask& a, double t);

// Rescan helper: true iff no cell has ur(i, j) >= t and ll(i, j) >= t.
bool satisfies_corner_condition(const BinaryMask& a, double t);

}  // namespace robinson
