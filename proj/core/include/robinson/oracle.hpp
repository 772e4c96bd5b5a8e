#pragma once

#include <vector>

#include "robinson/matrix.hpp"

namespace robinson {

// Exhaustive ground-truth helpers for desk-size instances. They trade time
// for certainty and are meant to validate the scalable paths, not to scale
// themselves.

// Every symmetric 0/1 Robinson matrix of size n (diagonal free), produced by
// filtering all upper-triangle patterns. Requires n <= 5.
std::vector<BinaryMask> enumerate_robinson_binary(int n);

struct BinaryFitResult {
    double best_objective = 0;          // min l1 distance over Robinson masks
    std::vector<BinaryMask> witnesses;  // all minimizers
};

// Exact nearest Robinson 0/1 matrix by enumeration, n <= 5. The optimum is
// checked against the gamma1 / 4 floor before returning.
BinaryFitResult best_robinson_binary(const BinaryMask& a);

struct SeriationFitResult {
    double best_objective = 0;           // min gamma1 over all orders
    std::vector<Permutation> witnesses;  // canonical minimizers, sorted
};

// Exact best ordering by scanning all n! permutations, n <= 8. An ordering
// and its reversal score identically, so each witness pair is reported once,
// as its lexicographically smaller member.
SeriationFitResult best_seriation(const SymmetricMatrix& a);

}  // namespace robinson
