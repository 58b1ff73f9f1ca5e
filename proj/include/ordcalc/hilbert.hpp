#pragma once

#include "ordcalc/genset.hpp"
#include "ordcalc/matrix.hpp"

#include <optional>
#include <vector>

namespace ordcalc::hilbert {

inline constexpr unsigned long kDefaultCompletionCap = 1000000;
inline constexpr long kDefaultBox = 12;

/// Homogeneous system m.x >= 0 where the columns listed in sign_cols are
/// additionally constrained to be >= 0 and the rest range over the ring.
struct MixedSystem {
    Mat m;
    std::vector<std::size_t> sign_cols; // 0-based, strictly increasing
};

struct HilbertBasis {
    GenSet basis;                     // nonneg, canonical, minimal
    std::optional<long> box_certified; // oracle box when cross-checked
};

/// Minimal generating set of {X in Z^n, X >= 0 : m.X >= 0}.
/// Slack variables reduce to an equality system, a Contejean-Devie style
/// completion enumerates its minimal solutions, slack columns are projected
/// away and minimality is restored.
HilbertBasis hilbert_basis(const Mat& m, unsigned long completion_cap = kDefaultCompletionCap);

/// Brute-force oracle: all solutions with coordinates in [0, box] that are
/// not the sum of two nonzero enumerated solutions. Independent of the
/// completion path.
GenSet hilbert_oracle(const Mat& m, long box);

/// Generating set (possibly signed) over Z for a mixed system: free columns
/// are split into differences of nonnegative pairs, hilbert_basis solves the
/// lifted system, and generators are mapped back through the substitution.
GenSet solve_mixed_z(const MixedSystem& sys,
                     unsigned long completion_cap = kDefaultCompletionCap);

/// Compares basis columns inside the box against the oracle; on success the
/// basis is marked certified for that box.
bool cross_check_box(const Mat& m, HilbertBasis& hb, long box = kDefaultBox);

/// Minimal nonzero solutions of {a.x = 0, x >= 0} over Z (the completion
/// procedure itself, exposed for direct testing).
std::vector<std::vector<Int>> minimal_equality_solutions(
    const Mat& a, unsigned long completion_cap = kDefaultCompletionCap);

} // namespace ordcalc::hilbert
