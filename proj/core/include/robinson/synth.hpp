#pragma once

#include <cstdint>

#include "robinson/matrix.hpp"

namespace robinson {

enum class NoiseModel { flip, uniform };

// Robinson similarity of n sorted uniform points on [0, 1] under the
// non-increasing kernel g(d) = ceil(levels * (1 - d)) / levels, clamped to
// [0, 1]. Unit diagonal, at most levels + 1 distinct values, gamma1
// exactly 0. Deterministic per seed.
SymmetricMatrix random_robinson(int n, int levels, std::uint64_t seed);

// flip: each off-diagonal entry of a 0/1 matrix flips with probability
// level, mirrored. uniform: adds independent noise uniform on
// [-level, level] per cell pair, clamped to [0, 1]. level 0 returns the
// input exactly. Deterministic per (seed, cell).
SymmetricMatrix add_noise(const SymmetricMatrix& a, double level, std::uint64_t seed,
                          NoiseModel model);

struct PlantedInstance {
    SymmetricMatrix clean;     // Robinson, in the hidden order
    SymmetricMatrix noisy;     // clean plus noise, in the hidden order
    SymmetricMatrix shuffled;  // noisy reordered by truth; the instance to solve
    Permutation truth;
    int levels = 0;
    double noise_level = 0;
    std::uint64_t seed = 0;
};

// random_robinson, uniform noise, then a random reordering, with the truth
// recorded: shuffled == apply_permutation(noisy, truth).
PlantedInstance planted_instance(int n, int levels, double noise_level, std::uint64_t seed);

}  // namespace robinson
