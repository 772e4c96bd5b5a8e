#pragma once

#include <vector>

#include "robinson/matrix.hpp"

namespace robinson {

// Cut decomposition of a symmetric matrix by its distinct entry values
// 0 = s_0 < s_1 < ... < s_m: layer k is the 0/1 mask of entries >= s_k and
// carries weight w_k = s_k - s_{k-1}. The layers are nested (each contains
// the next) and the weighted sum reproduces the matrix exactly; gamma1
// distributes across the layers with the same weights.
struct Layering {
    int n = 0;
    std::vector<double> levels;      // size m + 1, levels[0] == 0
    std::vector<double> weights;     // size m
    std::vector<BinaryMask> layers;  // size m

    int layer_count() const { return static_cast<int>(layers.size()); }
};

Layering decompose(const SymmetricMatrix& a);

// Inverse of decompose. Validates shape, strictly increasing levels starting
// at 0, and nesting; the reconstruction is exact because each cell's value
// is the level of the deepest layer containing it.
SymmetricMatrix recombine(const Layering& l);

// Rounds every entry to the nearest multiple of step (ties away from zero),
// clamped to [0, 1]. Requires 0 < step <= 1.
SymmetricMatrix quantize(const SymmetricMatrix& a, double step);

}  // namespace robinson
