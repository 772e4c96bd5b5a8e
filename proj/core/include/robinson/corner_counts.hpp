#pragma once

#include <cstdint>
#include <vector>

#include "robinson/matrix.hpp"

namespace robinson {

// Per-cell census of a symmetric 0/1 matrix, for 1 <= a <= b <= n:
//
//   ur(a, b): ones in the upper-right corner {(i, j) : i < a, b < j},
//             the cells strictly above row a and strictly right of column b;
//   ll(a, b): zeros in the triangle {(i, j) : a <= i <= j <= b} around the
//             diagonal.
//
// Out-of-range cells and cells with a > b report zero for both.
class CornerCounts {
public:
    CornerCounts() = default;
    explicit CornerCounts(int n)
        : n_(n),
          ur_(static_cast<std::size_t>(n) * n, 0),
          ll_(static_cast<std::size_t>(n) * n, 0) {}

    int size() const { return n_; }

    std::uint32_t ur(int a, int b) const { return in_range(a, b) ? ur_[idx(a, b)] : 0; }
    std::uint32_t ll(int a, int b) const { return in_range(a, b) ? ll_[idx(a, b)] : 0; }

    void set_ur(int a, int b, std::uint32_t v) { ur_[idx(a, b)] = v; }
    void set_ll(int a, int b, std::uint32_t v) { ll_[idx(a, b)] = v; }

private:
    bool in_range(int a, int b) const { return a >= 1 && b >= a && b <= n_; }
    std::size_t idx(int a, int b) const {
        return static_cast<std::size_t>(a - 1) * n_ + (b - 1);
    }

    int n_ = 0;
    std::vector<std::uint32_t> ur_;
    std::vector<std::uint32_t> ll_;
};

// Builds both tables in one O(n^2) pass: ur from a 2D ones-prefix of the full
// matrix, ll from the triangle recurrence
//   ll(a, b) = ll(a+1, b) + ll(a, b-1) - ll(a+1, b-1) + [A[a][b] == 0].
CornerCounts corner_counts(const BinaryMask& a);

}  // namespace robinson
