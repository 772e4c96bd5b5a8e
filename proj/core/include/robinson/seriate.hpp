#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "robinson/matrix.hpp"

namespace robinson {

enum class SeriationMethod { exhaustive, local, spectral };

struct SeriationConfig {
    SeriationMethod method = SeriationMethod::local;
    int restarts = 4;     // descent starts beyond the two deterministic ones
    int max_moves = 1000;  // accepted moves per descent
    std::uint64_t seed = 0;
};

struct FiedlerInfo {
    bool converged = false;
    bool degenerate = false;  // second eigenvalue at zero: disconnected support
    double lambda2 = 0;
    int iterations = 0;
};

struct FiedlerResult {
    Permutation order;
    FiedlerInfo info;
    std::vector<double> vector;  // unit eigenvector, component k for index k + 1
};

// Spectral ordering: indices sorted by the eigenvector of the second
// smallest eigenvalue of the Laplacian L = D - A built on the off-diagonal
// weights (D_ii = sum of row i without the diagonal), ties broken by index.
// Solved by deflated power iteration on a spectral shift of L, residual
// 1e-8, at most 10^4 iterations; a run that fails to converge is flagged,
// never an error. Requires n >= 2.
FiedlerResult fiedler_order(const SymmetricMatrix& a);

struct RestartLog {
    std::string start;  // "fiedler", "identity" or "random"
    double start_gamma = 0;
    std::vector<double> gammas;  // after each accepted move, strictly decreasing
    Permutation result;
    double result_gamma = 0;
};

struct SeriationResult {
    Permutation best;
    double best_gamma = 0;
    std::vector<RestartLog> logs;
    FiedlerInfo fiedler;
    bool fiedler_fallback = false;  // spectral start degraded to identity
};

// Steepest descent over single-element insertions (which include adjacent
// swaps), accepting only strict gamma1 decreases. Descents run from the
// spectral order, from the identity, and from cfg.restarts - 1 random
// orders seeded by seed + restart index; the best result wins, ties going
// to the lexicographically smaller permutation. The answer is never worse
// than the spectral or identity orderings. threads caps parallel workers
// without changing any output.
SeriationResult seriate_local(const SymmetricMatrix& a, const SeriationConfig& cfg = {},
                              int threads = 1);

}  // namespace robinson
