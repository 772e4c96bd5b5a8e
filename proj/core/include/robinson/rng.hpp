#pragma once

#include <cstdint>

namespace robinson {

// Counter-based deterministic randomness. Every draw is a pure function of
// (seed, counter), so parallel and serial evaluation orders agree and
// sub-streams can be split by hashing a tag into the seed.
namespace rng {

inline std::uint64_t mix(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

inline std::uint64_t keyed(std::uint64_t seed, std::uint64_t counter) {
    return mix(mix(seed) ^ mix(counter ^ 0x6a09e667f3bcc909ULL));
}

// Uniform in [0, 1), 53 mantissa bits.
inline double uniform(std::uint64_t seed, std::uint64_t counter) {
    return static_cast<double>(keyed(seed, counter) >> 11) * 0x1p-53;
}

}  // namespace rng

// Sequential stream over the keyed generator; the stream identity is the
// seed, the position is the counter.
class CounterRng {
public:
    explicit CounterRng(std::uint64_t seed) : seed_(seed) {}

    std::uint64_t next_u64() { return rng::keyed(seed_, counter_++); }

    double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1p-53; }

    // Uniform in {0, .., bound - 1}, bound >= 1, rejection sampled.
    std::uint64_t next_below(std::uint64_t bound) {
        std::uint64_t limit = ~std::uint64_t{0} - ~std::uint64_t{0} % bound;
        std::uint64_t x = next_u64();
        while (x >= limit) x = next_u64();
        return x % bound;
    }

private:
    std::uint64_t seed_;
    std::uint64_t counter_ = 0;
};

}  // namespace robinson
