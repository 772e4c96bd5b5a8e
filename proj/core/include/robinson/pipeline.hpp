#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "robinson/matrix.hpp"
#include "robinson/preprocess.hpp"

namespace robinson {

struct ApproxOptions {
    // Run the inversion-removing pass with the smaller threshold (distance
    // guarantee 26 * gamma1^(1/3)). When off, layers are rounded directly at
    // the larger threshold (guarantee 2^(9/2) * gamma1^(1/4) + 5/n), which
    // requires force_unit_diagonal.
    bool preprocess = true;
    // Set each layer's diagonal to 1 before repairing it. Costs at most 1/n
    // in distance and keeps the triangle counts honest for the corner
    // condition.
    bool force_unit_diagonal = true;
    // Copy the input diagonal onto the result. Never breaks Robinson form
    // and never increases the distance. When off, the result keeps the
    // rounded layers as they are, with all-zero first and last row/column.
    bool restore_diagonal = true;
};

struct LayerReport {
    double level = 0;
    double weight = 0;
    double eps = 0;        // gamma1 of the layer
    double threshold = 0;  // 0 for bypassed layers
    int toggles = 0;
    double l1_preprocess = 0;  // layer (diagonal forced) to preprocessed
    double l1_threshold = 0;   // preprocessed to rounded
    double gamma_after_preprocess = 0;
    bool bypassed = false;  // layer was already Robinson and kept as-is
    ToggleTrace trace;
};

struct ApproxReport {
    int n = 0;
    int m_layers = 0;
    double gamma1 = 0;
    double l1_dist = 0;
    double upper_bound = 0;  // 26 * gamma1^(1/3)
    double lower_bound = 0;  // gamma1 / 4, unreachable by any Robinson matrix
    bool upper_bound_holds = false;
    // Distance guarantee for the options actually used; violating it is an
    // internal error.
    double mode_bound = 0;
    bool mode_bound_holds = false;
    bool preprocess_used = false;
    bool diagonal_restored = false;
    std::vector<LayerReport> per_layer;
};

struct BinaryApproxResult {
    BinaryMask matrix;
    ApproxReport report;
};

struct GeneralApproxResult {
    SymmetricMatrix matrix;
    ApproxReport report;
};

// Certified Robinson repair of a 0/1 matrix: preprocess, round, restore the
// diagonal. An input that is already Robinson is returned unchanged.
BinaryApproxResult approximate_binary(const BinaryMask& a, const ApproxOptions& opt = {});

// Certified Robinson repair of a general matrix: each distinct-value layer
// is repaired on its own and the weighted sum is reassembled, which keeps
// the result Robinson and inside the same distance guarantee.
GeneralApproxResult approximate_general(const SymmetricMatrix& a, const ApproxOptions& opt = {});

// Direct per-layer rounding at the larger threshold, no preprocessing pass.
GeneralApproxResult approximate_no_preprocess(const SymmetricMatrix& a);

struct Certificate {
    double gamma1 = 0;
    double l1_dist = 0;
    double upper_bound = 0;
    double lower_bound = 0;
    bool upper_bound_holds = false;
    bool lower_bound_holds = false;
};

// Scores a proposed Robinson approximation r of a. Errors if r is not
// Robinson within tol.
Certificate certify(const SymmetricMatrix& a, const SymmetricMatrix& r, double tol = 1e-12);

// Simple undirected graph, vertices 1..n, edges stored with u < v.
struct Graph {
    int n = 0;
    std::vector<std::pair<int, int>> edges;
};

// Validates vertex range, rejects self-loops and duplicate edges; edges are
// normalized to u < v and sorted.
Graph make_graph(int n, std::vector<std::pair<int, int>> edges);

// Adjacency matrix with ones on the diagonal.
BinaryMask augmented_adjacency(const Graph& g);

struct GraphApproxResult {
    Graph graph;
    std::int64_t edit_distance = 0;  // edge insertions plus deletions
    ApproxReport report;
};

// Nearest-fit unit interval graph in the given vertex order: repairs the
// augmented adjacency matrix, keeping the diagonal at 1 throughout. The
// edit distance satisfies ed / n^2 <= 26 * gamma1^(1/3) of the augmented
// adjacency.
GraphApproxResult unit_interval_approx(const Graph& g);

}  // namespace robinson
