#pragma once

#include "ordcalc/matrix.hpp"

#include <optional>
#include <vector>

namespace ordcalc::cones {

/// Rational convex polyhedral cone, carried in inequality form (hrep rows p
/// with meaning p.x >= 0), generator form (vrep ray columns plus a lineality
/// basis), or both. Ray columns are primitive integer vectors; lineality
/// columns are primitive with positive leading entry.
struct ConeRep {
    std::size_t dim = 0;
    std::optional<Mat> hrep;      // m x dim over Q
    std::optional<Mat> vrep;      // dim x k ray columns
    std::optional<Mat> lineality; // dim x d columns
};

/// Finite union of convex polyhedral cones.
struct PolyCone {
    std::size_t dim = 0;
    std::vector<ConeRep> pieces;
};

ConeRep from_hrep(Mat h);
ConeRep from_vrep(std::size_t dim, Mat rays, std::optional<Mat> lineality = std::nullopt);

/// Incremental double description; result carries both representations.
ConeRep hrep_to_vrep(const ConeRep& c);
/// Double description on the dual cone; result carries both representations.
ConeRep vrep_to_hrep(const ConeRep& c);
ConeRep ensure_both(const ConeRep& c);

ConeRep intersect(const ConeRep& a, const ConeRep& b);

/// Primitive integer column parallel to v, orientation kept.
std::vector<Int> ray_canonicalize(const std::vector<Rat>& v);

/// Columns [rays | lineality | -lineality]: a positive generating set.
Mat generators(const ConeRep& c);

bool contains_point(const ConeRep& c, const std::vector<Rat>& x);
bool contains_point(const PolyCone& k, const std::vector<Rat>& x);

/// Point-set equality via mutual satisfaction checks.
bool equal(const ConeRep& a, const ConeRep& b);

bool is_trivial(const ConeRep& c); // cone == {0}

/// Cross-checks the dual-consistency invariant when both reps are present.
void validate(const ConeRep& c);

} // namespace ordcalc::cones
