#include "robinson/layers.hpp"

#include <algorithm>
#include <cmath>

namespace robinson {

Layering decompose(const SymmetricMatrix& a) {
    int n = a.size();

    std::vector<double> values;
    values.reserve(static_cast<std::size_t>(n) * (n + 1) / 2);
    for (int i = 1; i <= n; ++i)
        for (int j = i; j <= n; ++j) values.push_back(a.at(i, j));
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());

    Layering l;
    l.n = n;
    l.levels.push_back(0.0);
    for (double s : values) {
        if (s == 0.0) continue;
        l.weights.push_back(s - l.levels.back());
        l.levels.push_back(s);
        l.layers.push_back(mask_from_threshold(a, s));
    }
    return l;
}

SymmetricMatrix recombine(const Layering& l) {
    int n = l.n;
    if (n <= 0) throw ValidationError("layering has no dimension");
    int m = l.layer_count();
    if (static_cast<int>(l.levels.size()) != m + 1 || static_cast<int>(l.weights.size()) != m)
        throw ValidationError("layering field sizes disagree");
    if (l.levels[0] != 0.0) throw ValidationError("layering levels must start at 0");
    for (int k = 1; k <= m; ++k) {
        if (!(l.levels[static_cast<std::size_t>(k)] > l.levels[static_cast<std::size_t>(k - 1)]))
            throw ValidationError("layering levels must be strictly increasing");
        if (l.layers[static_cast<std::size_t>(k - 1)].size() != n)
            throw ValidationError("layering mask dimension mismatch");
    }
    for (int k = 1; k < m; ++k)
        for (int i = 1; i <= n; ++i)
            for (int j = i; j <= n; ++j)
                if (l.layers[static_cast<std::size_t>(k)].at(i, j) &&
                    !l.layers[static_cast<std::size_t>(k - 1)].at(i, j))
                    throw ValidationError("layering masks are not nested");

    SymmetricMatrix a(n);
    for (int i = 1; i <= n; ++i) {
        for (int j = i; j <= n; ++j) {
            int deepest = 0;
            for (int k = m; k >= 1; --k) {
                if (l.layers[static_cast<std::size_t>(k - 1)].at(i, j)) {
                    deepest = k;
                    break;
                }
            }
            a.set(i, j, l.levels[static_cast<std::size_t>(deepest)]);
        }
    }
    return a;
}

SymmetricMatrix quantize(const SymmetricMatrix& a, double step) {
    if (!(step > 0.0) || step > 1.0) throw ValidationError("step must lie in (0, 1]");
    int n = a.size();
    SymmetricMatrix q(n);
    for (int i = 1; i <= n; ++i)
        for (int j = i; j <= n; ++j)
            q.set(i, j, std::clamp(std::round(a.at(i, j) / step) * step, 0.0, 1.0));
    return q;
}

}  // namespace robinson
