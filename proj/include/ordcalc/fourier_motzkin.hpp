#pragma once

#include "ordcalc/matrix.hpp"

#include <vector>

namespace ordcalc::fm {

/// One affine inequality: coeffs . t + constant >= 0.
struct AffineIneq {
    std::vector<Rat> coeffs;
    Rat constant;
};

/// Exact Fourier-Motzkin feasibility of a conjunction of affine
/// inequalities over the rationals. Variables are eliminated smallest
/// pos*neg product first; rows are normalized and deduplicated between
/// rounds to keep growth down.
bool feasible(std::vector<AffineIneq> system);

} // namespace ordcalc::fm
