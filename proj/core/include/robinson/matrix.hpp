#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace robinson {

// Raised when user-supplied data fails validation (asymmetry, range, bad
// dimensions, malformed permutations and so on).
class ValidationError : public std::runtime_error {
public:
    explicit ValidationError(const std::string& msg) : std::runtime_error(msg) {}
};

// Raised when a guaranteed internal invariant fails. Seeing this is a bug.
class InternalError : public std::logic_error {
public:
    explicit InternalError(const std::string& msg) : std::logic_error(msg) {}
};

// Dense symmetric matrix with entries in [0, 1]. All public indices are
// 1-based; storage is row-major.
class SymmetricMatrix {
public:
    SymmetricMatrix() = default;
    explicit SymmetricMatrix(int n) : n_(n), a_(static_cast<std::size_t>(n) * n, 0.0) {}

    int size() const { return n_; }

    double at(int i, int j) const { return a_[idx(i, j)]; }

    // Writes both (i, j) and (j, i).
    void set(int i, int j, double v) {
        a_[idx(i, j)] = v;
        a_[idx(j, i)] = v;
    }

    bool operator==(const SymmetricMatrix& o) const { return n_ == o.n_ && a_ == o.a_; }
    bool operator!=(const SymmetricMatrix& o) const { return !(*this == o); }

    const std::vector<double>& entries() const { return a_; }

private:
    std::size_t idx(int i, int j) const {
        check_index(i, n_);
        check_index(j, n_);
        return static_cast<std::size_t>(i - 1) * n_ + (j - 1);
    }

    static void check_index(int i, int n);

    int n_ = 0;
    std::vector<double> a_;
};

// Symmetric 0/1 matrix, bit-packed one bit per cell. 1-based indices.
class BinaryMask {
public:
    BinaryMask() = default;
    explicit BinaryMask(int n)
        : n_(n), stride_((n + 63) / 64), bits_(static_cast<std::size_t>(n) * stride_, 0) {}

    int size() const { return n_; }

    bool at(int i, int j) const {
        check_pair(i, j);
        std::size_t c = static_cast<std::size_t>(j - 1);
        return (bits_[static_cast<std::size_t>(i - 1) * stride_ + c / 64] >> (c % 64)) & 1u;
    }

    // Writes both (i, j) and (j, i).
    void set(int i, int j, bool v) {
        check_pair(i, j);
        set_one(i, j, v);
        set_one(j, i, v);
    }

    bool operator==(const BinaryMask& o) const { return n_ == o.n_ && bits_ == o.bits_; }
    bool operator!=(const BinaryMask& o) const { return !(*this == o); }

private:
    void check_pair(int i, int j) const;

    void set_one(int i, int j, bool v) {
        std::size_t c = static_cast<std::size_t>(j - 1);
        std::uint64_t& w = bits_[static_cast<std::size_t>(i - 1) * stride_ + c / 64];
        std::uint64_t bit = std::uint64_t{1} << (c % 64);
        if (v)
            w |= bit;
        else
            w &= ~bit;
    }

    int n_ = 0;
    int stride_ = 0;
    std::vector<std::uint64_t> bits_;
};

// Bijection of {1..n}; p.image(i) is the source index placed at position i,
// so reordering a matrix by p yields B[i][j] = A[p(i)][p(j)].
class Permutation {
public:
    Permutation() = default;

    static Permutation identity(int n);
    static Permutation reversal(int n);
    // Validates that images is a bijection of {1..n}.
    static Permutation of_images(std::vector<int> images);

    int size() const { return static_cast<int>(images_.size()); }
    int image(int i) const;
    const std::vector<int>& images() const { return images_; }

    Permutation inverse() const;
    // q with q(i) = p(n + 1 - i); reordering by q reverses the order given by p.
    Permutation reversed() const;

    bool operator==(const Permutation& o) const { return images_ == o.images_; }
    bool operator!=(const Permutation& o) const { return !(*this == o); }
    bool operator<(const Permutation& o) const { return images_ < o.images_; }

private:
    explicit Permutation(std::vector<int> images) : images_(std::move(images)) {}
    std::vector<int> images_;
};

// Validates a raw square grid and returns the symmetrized, clamped matrix.
// Rejects |raw[i][j] - raw[j][i]| > tol and entries outside [0, 1] by more
// than tol; within tolerance, mirror entries are averaged and values clamped.
SymmetricMatrix make_symmetric(const std::vector<std::vector<double>>& raw, double tol);

bool is_binary(const SymmetricMatrix& a);
// Errors unless every entry of a is exactly 0 or 1.
BinaryMask mask_from_matrix(const SymmetricMatrix& a);
SymmetricMatrix matrix_from_mask(const BinaryMask& m);
// Cellwise a >= level.
BinaryMask mask_from_threshold(const SymmetricMatrix& a, double level);

// Mean absolute entry difference, sum |A-B| / n^2 over all n^2 cells.
double l1_distance(const SymmetricMatrix& a, const SymmetricMatrix& b);
double l1_distance(const BinaryMask& a, const BinaryMask& b);
// Number of cells where the masks differ.
std::uint64_t diff_count(const BinaryMask& a, const BinaryMask& b);

// Largest violation of the similarity ordering: max over i < k < j of
// max(A[i][j] - A[i][k], A[i][j] - A[k][j]), never negative. Zero means
// entries never grow while moving away from the diagonal in any row or
// column; diagonal entries are unconstrained.
double robinson_violation(const SymmetricMatrix& a);
bool is_robinson(const SymmetricMatrix& a, double tol = 1e-12);
bool is_robinson(const BinaryMask& a);

SymmetricMatrix apply_permutation(const SymmetricMatrix& a, const Permutation& p);

}  // namespace robinson
