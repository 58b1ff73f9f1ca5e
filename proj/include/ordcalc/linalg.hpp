#pragma once

#include "ordcalc/matrix.hpp"

#include <optional>
#include <vector>

namespace ordcalc::linalg {

/// Reduced row echelon form; returns the pivot column of each nonzero row.
struct Rref {
    Mat mat;
    std::vector<std::size_t> pivots;
};
Rref rref(const Mat& a);

std::size_t rank(const Mat& a);

/// Basis of {x : a*x = 0} as matrix columns (over Q; empty cols if trivial).
Mat kernel_basis(const Mat& a);

/// One solution of a*x = b over Q, or nullopt if inconsistent.
std::optional<std::vector<Rat>> solve_affine(const Mat& a, const std::vector<Rat>& b);

/// Scale a rational vector to a primitive integer vector (same ray).
/// Orientation is kept; the zero vector is rejected.
std::vector<Int> primitive_integer(const std::vector<Rat>& v);

/// Diagonalization u*a*v = d with u, v unimodular and d diagonal
/// (Smith-style, divisibility chain not enforced).
struct Diag {
    Mat u, d, v;
    std::size_t rank;
};
Diag diagonalize_integer(const Mat& a);

} // namespace ordcalc::linalg
