#include "robinson/preprocess.hpp"

#include "robinson/corner_counts.hpp"
#include "robinson/gamma.hpp"

namespace robinson {

BinaryMask toggle(const BinaryMask& a, int i, int j) {
    int n = a.size();
    if (i < 1 || j < i || j > n) throw ValidationError("toggle cell out of range");
    BinaryMask r = a;
    for (int s = j + 1; s <= n; ++s)
        for (int x = 1; x < i; ++x) r.set(x, s, false);
    for (int x = i; x <= j; ++x)
        for (int s = x; s <= j; ++s) r.set(x, s, true);
    return r;
}

PreprocessResult preprocess(const BinaryMask& a, double t) {
    if (!(t > 0)) throw ValidationError("threshold must be positive");
    int n = a.size();
    double n2 = static_cast<double>(n) * n;
    double n3 = n2 * n;

    PreprocessResult res{a, {}};
    std::uint64_t gamma_count = detail::gamma1_count(res.matrix);
    res.trace.gamma_before = static_cast<double>(gamma_count) / n3;

    CornerCounts counts = corner_counts(res.matrix);
    for (int i = 1; i <= n; ++i) {
        for (int j = i; j <= n; ++j) {
            std::uint32_t ur = counts.ur(i, j);
            std::uint32_t ll = counts.ll(i, j);
            if (static_cast<double>(ur) < t || static_cast<double>(ll) < t) continue;

            BinaryMask next = toggle(res.matrix, i, j);
            ToggleRecord rec;
            rec.i = i;
            rec.j = j;
            rec.ur_count = ur;
            rec.ll_count = ll;
            rec.gamma_count_before = gamma_count;
            rec.cells_changed = diff_count(res.matrix, next);
            res.matrix = std::move(next);
            gamma_count = detail::gamma1_count(res.matrix);
            rec.gamma_count_after = gamma_count;
            if (rec.gamma_count_after > rec.gamma_count_before)
                throw InternalError("toggle increased gamma1");
            res.trace.toggles.push_back(rec);
            counts = corner_counts(res.matrix);
        }
    }

    res.trace.gamma_after = static_cast<double>(gamma_count) / n3;
    res.trace.l1_moved = l1_distance(a, res.matrix);
    return res;
}

bool satisfies_corner_condition(const BinaryMask& a, double t) {
    int n = a.size();
    CornerCounts counts = corner_counts(a);
    for (int i = 1; i <= n; ++i)
        for (int j = i; j <= n; ++j)
            if (static_cast<double>(counts.ur(i, j)) >= t &&
                static_cast<double>(counts.ll(i, j)) >= t)
                return false;
    return true;
}

}  // namespace robinson
