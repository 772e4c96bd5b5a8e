#include "robinson/synth.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "robinson/rng.hpp"

namespace robinson {

namespace {

// Stable per-cell counters: cell (i, j), i <= j, gets its upper-triangle
// rank; point and shuffle streams use tagged sub-seeds.
std::uint64_t cell_counter(int n, int i, int j) {
    std::uint64_t row = static_cast<std::uint64_t>(i - 1);
    std::uint64_t col = static_cast<std::uint64_t>(j - i);
    return row * static_cast<std::uint64_t>(n) - row * (row - 1) / 2 + col;
}

constexpr std::uint64_t kPointsTag = 0x706f696e74ULL;
constexpr std::uint64_t kShuffleTag = 0x73687566ULL;

}  // namespace

SymmetricMatrix random_robinson(int n, int levels, std::uint64_t seed) {
    if (n < 1) throw ValidationError("dimension must be positive");
    if (levels < 1) throw ValidationError("levels must be positive");

    std::vector<double> points(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        points[static_cast<std::size_t>(i)] =
            rng::uniform(rng::mix(seed) ^ kPointsTag, static_cast<std::uint64_t>(i));
    std::sort(points.begin(), points.end());

    SymmetricMatrix a(n);
    for (int i = 1; i <= n; ++i) {
        for (int j = i; j <= n; ++j) {
            double d = std::abs(points[static_cast<std::size_t>(i - 1)] -
                                points[static_cast<std::size_t>(j - 1)]);
            double v = std::ceil(levels * (1 - d)) / levels;
            a.set(i, j, std::clamp(v, 0.0, 1.0));
        }
    }
    return a;
}

SymmetricMatrix add_noise(const SymmetricMatrix& a, double level, std::uint64_t seed,
                          NoiseModel model) {
    if (!(level >= 0) || level > 1) throw ValidationError("noise level must lie in [0, 1]");
    if (model == NoiseModel::flip && !is_binary(a))
        throw ValidationError("flip noise needs a 0/1 matrix");
    int n = a.size();

    SymmetricMatrix out = a;
    for (int i = 1; i <= n; ++i) {
        for (int j = i; j <= n; ++j) {
            std::uint64_t c = cell_counter(n, i, j);
            if (model == NoiseModel::flip) {
                if (i == j) continue;
                if (rng::uniform(seed, c) < level) out.set(i, j, a.at(i, j) == 1.0 ? 0.0 : 1.0);
            } else {
                if (level == 0) continue;
                double u = rng::uniform(seed, c);
                out.set(i, j, std::clamp(a.at(i, j) + (2 * u - 1) * level, 0.0, 1.0));
            }
        }
    }
    return out;
}

PlantedInstance planted_instance(int n, int levels, double noise_level, std::uint64_t seed) {
    PlantedInstance inst;
    inst.levels = levels;
    inst.noise_level = noise_level;
    inst.seed = seed;
    inst.clean = random_robinson(n, levels, seed);
    inst.noisy = add_noise(inst.clean, noise_level, rng::mix(seed), NoiseModel::uniform);

    std::vector<int> images = Permutation::identity(n).images();
    CounterRng rng(rng::mix(seed) ^ kShuffleTag);
    for (int i = n - 1; i >= 1; --i) {
        int j = static_cast<int>(rng.next_below(static_cast<std::uint64_t>(i) + 1));
        std::swap(images[static_cast<std::size_t>(i)], images[static_cast<std::size_t>(j)]);
    }
    inst.truth = Permutation::of_images(std::move(images));
    inst.shuffled = apply_permutation(inst.noisy, inst.truth);
    return inst;
}

}  // namespace robinson
