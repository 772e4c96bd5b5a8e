#include "robinson/corner_counts.hpp"

namespace robinson {

CornerCounts corner_counts(const BinaryMask& a) {
    int n = a.size();
    CornerCounts c(n);

    // prefix[r][col] = ones in rows 1..r, columns 1..col; row r stored at
    // offset r * (n + 1) so row 0 is an all-zero border.
    std::vector<std::uint32_t> prefix(static_cast<std::size_t>(n + 1) * (n + 1), 0);
    auto pre = [&](int r, int col) -> std::uint32_t& {
        return prefix[static_cast<std::size_t>(r) * (n + 1) + col];
    };
    for (int r = 1; r <= n; ++r) {
        std::uint32_t row_acc = 0;
        for (int col = 1; col <= n; ++col) {
            row_acc += a.at(r, col) ? 1u : 0u;
            pre(r, col) = pre(r - 1, col) + row_acc;
        }
    }

    for (int x = 1; x <= n; ++x)
        for (int b = x; b <= n; ++b)
            c.set_ur(x, b, pre(x - 1, n) - pre(x - 1, b));

    for (int x = n; x >= 1; --x) {
        for (int b = x; b <= n; ++b) {
            c.set_ll(x, b, c.ll(x + 1, b) + c.ll(x, b - 1) - c.ll(x + 1, b - 1) +
                               (a.at(x, b) ? 0u : 1u));
        }
    }
    return c;
}

}  // namespace robinson
