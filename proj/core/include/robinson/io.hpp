#pragma once

#include <string>

#include "robinson/matrix.hpp"
#include "robinson/pipeline.hpp"

namespace robinson {

// Matrix files are headerless CSV, one row per line. Writing uses 17
// significant digits, so a written matrix reads back bit-identically.
// Reading symmetrizes within an absolute tolerance of 1e-9 and rejects
// anything else.
SymmetricMatrix read_matrix_csv(const std::string& path, double tol = 1e-9);
void write_matrix_csv(const SymmetricMatrix& a, const std::string& path);

// Graph files: first line "n m", then m lines "u v" with 1-based endpoints.
Graph read_graph(const std::string& path);
void write_graph(const Graph& g, const std::string& path);

// Permutation files: single line of space-separated images of 1..n.
void write_permutation(const Permutation& p, const std::string& path);
Permutation read_permutation(const std::string& path);

}  // namespace robinson
