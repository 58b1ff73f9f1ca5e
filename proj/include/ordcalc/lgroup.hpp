#pragma once

#include "ordcalc/cone.hpp"
#include "ordcalc/genset.hpp"
#include "ordcalc/hilbert.hpp"

#include <memory>
#include <vector>

namespace ordcalc::lgroup {

inline constexpr std::size_t kDefaultNodeCap = 100000;
inline constexpr std::size_t kDefaultPieceCap = 10000;

/// Integer linear functional x -> sum coeffs[i] * x[i].
struct LinFunc {
    std::vector<Int> coeffs;

    bool operator==(const LinFunc& o) const { return coeffs == o.coeffs; }
    bool operator<(const LinFunc& o) const { return coeffs < o.coeffs; }
};

Rat eval(const LinFunc& f, const std::vector<Rat>& x);
LinFunc lin_add(const LinFunc& a, const LinFunc& b);
LinFunc lin_sub(const LinFunc& a, const LinFunc& b);

/// Term of the free abelian lattice-ordered group on n generators:
/// an expression tree over integer functionals with add, negate, meet, join.
class LatticeTerm {
public:
    enum class Kind { Lin, Add, Neg, Meet, Join };

    static LatticeTerm lin(std::vector<Int> coeffs);
    static LatticeTerm add(LatticeTerm a, LatticeTerm b);
    static LatticeTerm neg(LatticeTerm a);
    static LatticeTerm meet(LatticeTerm a, LatticeTerm b);
    static LatticeTerm join(LatticeTerm a, LatticeTerm b);
    static LatticeTerm sub(LatticeTerm a, LatticeTerm b) { return add(std::move(a), neg(std::move(b))); }
    static LatticeTerm abs(LatticeTerm a);
    static LatticeTerm zero(std::size_t dim);

    std::size_t dim() const { return dim_; }
    Kind kind() const { return node_->kind; }
    const LinFunc& leaf() const { return node_->lin; }
    const LatticeTerm& arg(std::size_t i) const { return node_->args[i]; }
    std::size_t arity() const { return node_->args.size(); }

    /// Pointwise evaluation (meet = min, join = max); positively homogeneous.
    Rat eval(const std::vector<Rat>& x) const;

private:
    struct Node {
        Kind kind;
        LinFunc lin;
        std::vector<LatticeTerm> args;
    };
    LatticeTerm(std::shared_ptr<const Node> node, std::size_t dim)
        : node_(std::move(node)), dim_(dim) {}
    std::shared_ptr<const Node> node_;
    std::size_t dim_;
};

/// (min over pos) - (min over neg); both lists nonempty (zero functional
/// padding keeps them so).
struct DiffOfMeets {
    std::vector<LinFunc> pos;
    std::vector<LinFunc> neg;
};

Rat eval(const DiffOfMeets& d, const std::vector<Rat>& x);

/// Normalize a term to a difference of two meets of integer functionals.
/// Joins are eliminated through a+b-(a^b); sums distribute through meets.
DiffOfMeets term_to_diff_of_meets(const LatticeTerm& t,
                                  std::size_t node_cap = kDefaultNodeCap);

struct PLPiece {
    cones::ConeRep cone;
    LinFunc func;
};

/// Piecewise-linear form of a function on a convex cone: pieces cover the
/// cone, and piece functionals agree on overlaps.
struct PLFunc {
    std::size_t dim = 0;
    std::vector<PLPiece> pieces;
};

Rat eval(const PLFunc& f, const std::vector<Rat>& x);

/// Order-region decomposition of a DiffOfMeets over a convex cone: one
/// candidate piece per permutation pair (at most k!*l!), empty pieces
/// dropped.
PLFunc decompose_pl(const DiffOfMeets& d, const cones::ConeRep& k,
                    std::size_t piece_cap = kDefaultPieceCap);

/// {x : t(x) >= 0} as a finite union of convex cones.
cones::PolyCone nonneg_region(const LatticeTerm& t,
                              std::size_t piece_cap = kDefaultPieceCap,
                              std::size_t node_cap = kDefaultNodeCap);

/// Finitely presented lattice-ordered group: generators, relators, the
/// combined relator p = sum |p_i| and its zero-set cone.
struct LPresentation {
    std::size_t n = 0;
    std::vector<LatticeTerm> relators;
    LatticeTerm p;
    cones::PolyCone k_cone;
};

LPresentation make_presentation(std::size_t n, std::vector<LatticeTerm> relators,
                                std::size_t piece_cap = kDefaultPieceCap,
                                std::size_t node_cap = kDefaultNodeCap);

/// Zero set of the combined relator.
cones::PolyCone presentation_cone(const LPresentation& pres);

/// Equality of two terms as elements of the presented group: their
/// difference must vanish on every piece of the presentation cone,
/// checked exactly on ray and lineality generators.
bool pl_equal(const LPresentation& pres, const LatticeTerm& f, const LatticeTerm& g,
              std::size_t piece_cap = kDefaultPieceCap,
              std::size_t node_cap = kDefaultNodeCap);

/// Hilbert basis of {lambda in (Z+)^m : sum lambda_i f_i >= 0 on the
/// presentation cone}: refine the cone until every f_i is linear per piece,
/// turn piece generators into integer inequality rows over lambda, solve.
hilbert::HilbertBasis lgroup_solve(const LPresentation& pres,
                                   const std::vector<LatticeTerm>& fs,
                                   std::size_t piece_cap = kDefaultPieceCap,
                                   std::size_t node_cap = kDefaultNodeCap,
                                   unsigned long completion_cap = hilbert::kDefaultCompletionCap);

/// Hilbert bases of {(x, y) >= 0 : q.x - p.y >= 0} along a sequence of
/// fraction approximations (p, q); growth of the basis sizes mirrors the
/// slope approaching an irrational.
struct ConvergentRow {
    long p, q;
    GenSet basis;
};
std::vector<ConvergentRow> irrational_demo(
    const std::vector<std::pair<long, long>>& convergents,
    unsigned long completion_cap = hilbert::kDefaultCompletionCap);

/// First `depth` continued-fraction convergents of sqrt(2): 1/1, 3/2, 7/5, ...
std::vector<std::pair<long, long>> sqrt2_convergents(std::size_t depth);

} // namespace ordcalc::lgroup
