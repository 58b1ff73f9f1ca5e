#pragma once

#include "ordcalc/genset.hpp"
#include "ordcalc/hilbert.hpp"
#include "ordcalc/matrix.hpp"

#include <optional>
#include <vector>

namespace ordcalc::calc {

using hilbert::MixedSystem;

/// A module presentation: the spanning row (columns of `spanning` are the
/// module elements U_1..U_n written in coordinates) together with a
/// generating set for the declared solution set.
struct Presentation {
    Mat spanning;
    GenSet solset;
};

/// Generating set for a mixed system over Z, a localization of Z, or Q.
/// Dispatch: Z -> Hilbert basis engine; Q -> cone engine on the
/// sign-extended system; localized -> denominators cleared, solved over Z,
/// generators reused unchanged.
GenSet solve_mixed(const MixedSystem& sys,
                   unsigned long completion_cap = hilbert::kDefaultCompletionCap);

/// Same solution set computed one row at a time, composing generator
/// matrices between rows. Exercises the induction route against the
/// one-shot route.
GenSet solve_mixed_iterative(const MixedSystem& sys,
                             unsigned long completion_cap = hilbert::kDefaultCompletionCap);

/// Generators of {X : u.X = 0} as a semimodule (signed set); over Q a
/// module basis of the kernel is returned as well.
struct EquationSolution {
    GenSet gens;
    std::optional<Mat> basis;
};
EquationSolution solve_equation(const Mat& u,
                                unsigned long completion_cap = hilbert::kDefaultCompletionCap);

/// From a sign-constrained presentation of the doubled system
/// [U | -U].(Y Z) >= 0, Y,Z >= 0 with paired generator blocks P over Q,
/// produce the unconstrained presentation with generators P - Q.
Presentation related_to_presented(const Presentation& doubled);

/// Spanning-row change: with v = u.m and u = v.n verified, transport a
/// generating set for {X : u.X >= 0} to one for {Y : v.Y >= 0} via the
/// block formula [I - n.m | n.m - I | n.s].
GenSet change_spanning(const Mat& u, const Mat& v, const Mat& m, const Mat& n,
                       const GenSet& s);

/// Generators of {Y : (u.m).Y >= 0} from a generating set for
/// {X : u.X >= 0}: solve m.Y - s.Z = 0 with Z >= 0 and project to Y.
GenSet submodule_presentation(const Mat& u, const Mat& m, const GenSet& s_u,
                              unsigned long completion_cap = hilbert::kDefaultCompletionCap);

/// Columns of u.s: a finite generating set of the positive cone.
GenSet positive_cone_generators(const Mat& u, const GenSet& s);

/// With v = u.m verified, assemble generators of {X : u.X >= 0} as
/// [m | s_eq] from positive-cone data and equation solutions.
GenSet presentation_from_parts(const Mat& u, const Mat& v, const Mat& m,
                               const GenSet& s_eq);

/// Intersection of two finitely generated semimodules of the same ambient
/// module: solve b.X - c.Y = 0 with X, Y >= 0 and push the X block through b.
GenSet semimodule_intersect(const GenSet& b, const GenSet& c,
                            unsigned long completion_cap = hilbert::kDefaultCompletionCap);

/// Componentwise systems over a direct sum: solve per component, then
/// intersect the solution semimodules.
GenSet direct_sum_solve(const std::vector<Mat>& components,
                        unsigned long completion_cap = hilbert::kDefaultCompletionCap);

/// Generators of {X >= 0 : u.X >= 0 modulo the convex submodule spanned by
/// v}: solve u.X + v.Y >= 0 with X >= 0, Y free, project to X.
GenSet quotient_solve(const Mat& u, const Mat& v,
                      unsigned long completion_cap = hilbert::kDefaultCompletionCap);

/// Componentwise-ordered matrix ring: flatten sum(a_j xi_j) >= 0, xi_j >= 0
/// into a scalar mixed system over n*m*m coordinates (unknown-major, then
/// row-major within each unknown).
GenSet matrix_ring_solve(const std::vector<Mat>& a,
                         unsigned long completion_cap = hilbert::kDefaultCompletionCap);

/// Localization lifting: clear denominators row by row, solve the fully
/// sign-constrained system over Z, and reuse the generator matrix over the
/// localized ring.
GenSet localize_lift(const Mat& u,
                     unsigned long completion_cap = hilbert::kDefaultCompletionCap);

/// Nonnegative solutions of x_1 p_1 + ... + x_n p_n = 0 over Q: one
/// generator (1/p_i at i, 1/-p_j at j) per sign pair (i, j), plus a unit
/// vector per vanishing coefficient. Exactly n + |U|*|V| - |U v V| columns.
GenSet field_equation_solve(const std::vector<Rat>& p);

/// Row-by-row iteration of field_equation_solve with generator-matrix
/// composition between rows.
GenSet multi_equation_solve_q(const Mat& m);

} // namespace ordcalc::calc
