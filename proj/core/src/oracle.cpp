#include "robinson/oracle.hpp"

#include <algorithm>
#include <numeric>

#include "robinson/gamma.hpp"

namespace robinson {

std::vector<BinaryMask> enumerate_robinson_binary(int n) {
    if (n < 1 || n > 5) throw ValidationError("enumeration supports 1 <= n <= 5 only");
    int cells = n * (n + 1) / 2;
    std::vector<BinaryMask> out;
    for (std::uint32_t bits = 0; bits < (std::uint32_t{1} << cells); ++bits) {
        BinaryMask m(n);
        int c = 0;
        for (int i = 1; i <= n; ++i)
            for (int j = i; j <= n; ++j, ++c)
                if ((bits >> c) & 1u) m.set(i, j, true);
        if (is_robinson(m)) out.push_back(std::move(m));
    }
    return out;
}

BinaryFitResult best_robinson_binary(const BinaryMask& a) {
    int n = a.size();
    std::uint64_t best = ~std::uint64_t{0};
    BinaryFitResult res;
    for (const BinaryMask& r : enumerate_robinson_binary(n)) {
        std::uint64_t d = diff_count(a, r);
        if (d < best) {
            best = d;
            res.witnesses.clear();
        }
        if (d == best) res.witnesses.push_back(r);
    }
    res.best_objective = static_cast<double>(best) / (static_cast<double>(n) * n);

    // No Robinson matrix can sit below the gamma1 / 4 floor:
    // best / n^2 >= count / (4 n^3), exactly 4 n best >= count in integers.
    std::uint64_t count = detail::gamma1_count(a);
    if (4 * static_cast<std::uint64_t>(n) * best < count)
        throw InternalError("enumeration beat the lower bound");
    return res;
}

SeriationFitResult best_seriation(const SymmetricMatrix& a) {
    int n = a.size();
    if (n < 1 || n > 8) throw ValidationError("exhaustive seriation supports 1 <= n <= 8 only");

    std::vector<int> images(static_cast<std::size_t>(n));
    std::iota(images.begin(), images.end(), 1);

    bool first = true;
    double best = 0;
    std::vector<Permutation> witnesses;
    do {
        Permutation p = Permutation::of_images(images);
        double g = gamma1_fast(apply_permutation(a, p));
        if (first || g < best) {
            first = false;
            best = g;
            witnesses.clear();
        }
        if (g == best) witnesses.push_back(std::min(p, p.reversed()));
    } while (std::next_permutation(images.begin(), images.end()));

    std::sort(witnesses.begin(), witnesses.end());
    witnesses.erase(std::unique(witnesses.begin(), witnesses.end()), witnesses.end());
    return SeriationFitResult{best, std::move(witnesses)};
}

}  // namespace robinson
