#include "robinson/matrix.hpp"

#include <algorithm>
#include <cmath>

namespace robinson {

void SymmetricMatrix::check_index(int i, int n) {
    if (i < 1 || i > n) throw ValidationError("matrix index out of range");
}

void BinaryMask::check_pair(int i, int j) const {
    if (i < 1 || i > n_ || j < 1 || j > n_) throw ValidationError("mask index out of range");
}

int Permutation::image(int i) const {
    if (i < 1 || i > size()) throw ValidationError("permutation index out of range");
    return images_[static_cast<std::size_t>(i - 1)];
}

Permutation Permutation::identity(int n) {
    std::vector<int> v(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] = i + 1;
    return Permutation(std::move(v));
}

Permutation Permutation::reversal(int n) {
    std::vector<int> v(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] = n - i;
    return Permutation(std::move(v));
}

Permutation Permutation::of_images(std::vector<int> images) {
    int n = static_cast<int>(images.size());
    if (n == 0) throw ValidationError("permutation must be non-empty");
    std::vector<char> seen(static_cast<std::size_t>(n) + 1, 0);
    for (int x : images) {
        if (x < 1 || x > n) throw ValidationError("permutation image out of range");
        if (seen[static_cast<std::size_t>(x)]) throw ValidationError("permutation repeats an image");
        seen[static_cast<std::size_t>(x)] = 1;
    }
    return Permutation(std::move(images));
}

Permutation Permutation::inverse() const {
    int n = size();
    std::vector<int> v(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) v[static_cast<std::size_t>(image(i) - 1)] = i;
    return Permutation(std::move(v));
}

Permutation Permutation::reversed() const {
    int n = size();
    std::vector<int> v(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) v[static_cast<std::size_t>(i - 1)] = image(n + 1 - i);
    return Permutation(std::move(v));
}

SymmetricMatrix make_symmetric(const std::vector<std::vector<double>>& raw, double tol) {
    if (tol < 0) throw ValidationError("tolerance must be non-negative");
    int n = static_cast<int>(raw.size());
    if (n == 0) throw ValidationError("matrix must be non-empty");
    for (const auto& row : raw)
        if (static_cast<int>(row.size()) != n) throw ValidationError("matrix must be square");

    SymmetricMatrix a(n);
    for (int i = 1; i <= n; ++i) {
        for (int j = i; j <= n; ++j) {
            double x = raw[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)];
            double y = raw[static_cast<std::size_t>(j - 1)][static_cast<std::size_t>(i - 1)];
            if (!std::isfinite(x) || !std::isfinite(y))
                throw ValidationError("matrix entries must be finite");
            if (std::abs(x - y) > tol)
                throw ValidationError("matrix is not symmetric within tolerance");
            double v = (i == j) ? x : (x + y) / 2;
            if (v < -tol || v > 1 + tol)
                throw ValidationError("matrix entries must lie in [0, 1] within tolerance");
            a.set(i, j, std::clamp(v, 0.0, 1.0));
        }
    }
    return a;
}

bool is_binary(const SymmetricMatrix& a) {
    for (double v : a.entries())
        if (v != 0.0 && v != 1.0) return false;
    return true;
}

BinaryMask mask_from_matrix(const SymmetricMatrix& a) {
    if (!is_binary(a)) throw ValidationError("matrix is not binary");
    return mask_from_threshold(a, 1.0);
}

SymmetricMatrix matrix_from_mask(const BinaryMask& m) {
    int n = m.size();
    SymmetricMatrix a(n);
    for (int i = 1; i <= n; ++i)
        for (int j = i; j <= n; ++j)
            if (m.at(i, j)) a.set(i, j, 1.0);
    return a;
}

BinaryMask mask_from_threshold(const SymmetricMatrix& a, double level) {
    int n = a.size();
    BinaryMask m(n);
    for (int i = 1; i <= n; ++i)
        for (int j = i; j <= n; ++j)
            if (a.at(i, j) >= level) m.set(i, j, true);
    return m;
}

double l1_distance(const SymmetricMatrix& a, const SymmetricMatrix& b) {
    if (a.size() != b.size()) throw ValidationError("dimension mismatch");
    int n = a.size();
    double sum = 0;
    const auto& x = a.entries();
    const auto& y = b.entries();
    for (std::size_t k = 0; k < x.size(); ++k) sum += std::abs(x[k] - y[k]);
    return sum / (static_cast<double>(n) * n);
}

std::uint64_t diff_count(const BinaryMask& a, const BinaryMask& b) {
    if (a.size() != b.size()) throw ValidationError("dimension mismatch");
    int n = a.size();
    std::uint64_t d = 0;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            if (a.at(i, j) != b.at(i, j)) ++d;
    return d;
}

double l1_distance(const BinaryMask& a, const BinaryMask& b) {
    int n = a.size();
    return static_cast<double>(diff_count(a, b)) / (static_cast<double>(n) * n);
}

double robinson_violation(const SymmetricMatrix& a) {
    int n = a.size();
    double worst = 0;
    // Row part: A[i][j] vs min over i < k < j of A[i][k].
    for (int i = 1; i <= n; ++i) {
        double m = 2;
        for (int j = i + 2; j <= n; ++j) {
            m = std::min(m, a.at(i, j - 1));
            worst = std::max(worst, a.at(i, j) - m);
        }
    }
    // Column part: A[i][j] vs min over i < k < j of A[k][j].
    for (int j = 1; j <= n; ++j) {
        double m = 2;
        for (int i = j - 2; i >= 1; --i) {
            m = std::min(m, a.at(i + 1, j));
            worst = std::max(worst, a.at(i, j) - m);
        }
    }
    return worst;
}

bool is_robinson(const SymmetricMatrix& a, double tol) {
    return robinson_violation(a) <= tol;
}

bool is_robinson(const BinaryMask& a) {
    int n = a.size();
    for (int i = 1; i <= n; ++i)
        for (int j = i + 2; j <= n; ++j) {
            if (a.at(i, j) && !a.at(i, j - 1)) return false;
            if (a.at(i, j) && !a.at(i + 1, j)) return false;
        }
    return true;
}

SymmetricMatrix apply_permutation(const SymmetricMatrix& a, const Permutation& p) {
    if (a.size() != p.size()) throw ValidationError("permutation size mismatch");
    int n = a.size();
    SymmetricMatrix b(n);
    for (int i = 1; i <= n; ++i)
        for (int j = i; j <= n; ++j)
            b.set(i, j, a.at(p.image(i), p.image(j)));
    return b;
}

}  // namespace robinson
