#include "robinson/approx.hpp"

#include <cmath>

#include "robinson/corner_counts.hpp"

namespace robinson {

BinaryMask robinson_approx_binary(const BinaryMask& a, double t) {
    if (!(t > 0)) throw ValidationError("threshold must be positive");
    int n = a.size();
    CornerCounts c = corner_counts(a);
    BinaryMask r(n);
    for (int i = 1; i <= n; ++i)
        for (int j = i; j <= n; ++j)
            if (static_cast<double>(c.ur(i, j)) >= t) r.set(i, j, true);
    return r;
}

static void check_threshold_args(double eps, int n) {
    if (n < 1) throw ValidationError("dimension must be positive");
    // eps is a gamma1 value, which lives in [0, 1); 1 is allowed so the
    // formulas stay total on the closed interval.
    if (!(eps >= 0) || eps > 1) throw ValidationError("eps must lie in [0, 1]");
}

double threshold_corollary(double eps, int n) {
    check_threshold_args(eps, n);
    return static_cast<double>(n) * n * std::sqrt(4 * eps);
}

double threshold_theorem(double eps, int n) {
    check_threshold_args(eps, n);
    return std::pow(4.0, -2.0 / 3.0) * std::pow(eps, 2.0 / 3.0) * n * n;
}

}  // namespace robinson
