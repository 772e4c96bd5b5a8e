#include "robinson/gamma.hpp"

#include <algorithm>
#include <cmath>

namespace robinson {
namespace detail {

std::uint64_t gamma1_count_direct(const BinaryMask& a) {
    int n = a.size();
    std::uint64_t count = 0;
    for (int i = 1; i <= n; ++i)
        for (int k = i + 1; k <= n; ++k)
            for (int j = k + 1; j <= n; ++j) {
                if (a.at(i, j) && !a.at(i, k)) ++count;
                if (a.at(i, j) && !a.at(k, j)) ++count;
            }
    return count;
}

std::uint64_t gamma1_count(const BinaryMask& a) {
    int n = a.size();
    // zeros[r][c] = zeros in row r among columns 1..c, rows at stride n + 1.
    std::vector<std::uint32_t> zeros(static_cast<std::size_t>(n) * (n + 1), 0);
    auto z = [&](int r, int c) -> std::uint32_t& {
        return zeros[static_cast<std::size_t>(r - 1) * (n + 1) + c];
    };
    for (int r = 1; r <= n; ++r)
        for (int c = 1; c <= n; ++c) z(r, c) = z(r, c - 1) + (a.at(r, c) ? 0u : 1u);

    // A one at (i, j), i < j, pays one unit for every zero strictly between
    // i and j in row i and in row j.
    std::uint64_t count = 0;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 2; j <= n; ++j) {
            if (!a.at(i, j)) continue;
            count += z(i, j - 1) - z(i, i);
            count += z(j, j - 1) - z(j, i);
        }
    return count;
}

double gamma1_grid(const std::vector<std::vector<double>>& grid) {
    int n = static_cast<int>(grid.size());
    double sum = 0, comp = 0;
    auto add = [&](double v) {
        double y = v - comp;
        double t = sum + y;
        comp = (t - sum) - y;
        sum = t;
    };
    for (int i = 0; i < n; ++i)
        for (int k = i + 1; k < n; ++k)
            for (int j = k + 1; j < n; ++j) {
                double far = grid[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
                double row = far - grid[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)];
                double col = far - grid[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)];
                if (row > 0) add(row);
                if (col > 0) add(col);
            }
    double n3 = static_cast<double>(n) * n * n;
    return sum / n3;
}

}  // namespace detail

double gamma1_direct(const BinaryMask& a) {
    int n = a.size();
    double n3 = static_cast<double>(n) * n * n;
    return static_cast<double>(detail::gamma1_count_direct(a)) / n3;
}

double gamma1_direct(const SymmetricMatrix& a) {
    if (is_binary(a)) return gamma1_direct(mask_from_matrix(a));
    int n = a.size();
    double sum = 0, comp = 0;
    bool compensate = n > 500;
    for (int i = 1; i <= n; ++i)
        for (int k = i + 1; k <= n; ++k)
            for (int j = k + 1; j <= n; ++j) {
                double far = a.at(i, j);
                double v = std::max(far - a.at(i, k), 0.0) + std::max(far - a.at(k, j), 0.0);
                if (compensate) {
                    double y = v - comp;
                    double t = sum + y;
                    comp = (t - sum) - y;
                    sum = t;
                } else {
                    sum += v;
                }
            }
    double n3 = static_cast<double>(n) * n * n;
    return sum / n3;
}

double gamma1_fast(const BinaryMask& a) {
    int n = a.size();
    double n3 = static_cast<double>(n) * n * n;
    return static_cast<double>(detail::gamma1_count(a)) / n3;
}

double gamma1_fast(const SymmetricMatrix& a) {
    int n = a.size();

    std::vector<double> levels;
    levels.reserve(static_cast<std::size_t>(n) * (n + 1) / 2);
    for (int i = 1; i <= n; ++i)
        for (int j = i; j <= n; ++j) levels.push_back(a.at(i, j));
    std::sort(levels.begin(), levels.end());
    levels.erase(std::unique(levels.begin(), levels.end()), levels.end());

    double acc = 0;
    double prev = 0;
    double n3 = static_cast<double>(n) * n * n;
    for (double s : levels) {
        if (s == 0.0) continue;
        std::uint64_t count = detail::gamma1_count(mask_from_threshold(a, s));
        acc += (s - prev) * static_cast<double>(count);
        prev = s;
    }
    return acc / n3;
}

}  // namespace robinson
