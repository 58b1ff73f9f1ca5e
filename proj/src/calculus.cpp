#include "ordcalc/calculus.hpp"

#include "ordcalc/cone.hpp"
#include "ordcalc/errors.hpp"
#include "ordcalc/linalg.hpp"

#include <algorithm>

namespace ordcalc::calc {

namespace {

const RingSpec kZ = RingSpec::integers();
const RingSpec kQ = RingSpec::rationals();

std::vector<std::size_t> all_cols(std::size_t n) {
    std::vector<std::size_t> v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = i;
    return v;
}

// Scale each row to integer entries; the solution set is unchanged.
Mat clear_denominators(const Mat& m) {
    Mat out(m.rows(), m.cols(), kZ);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Int l(1);
        for (std::size_t j = 0; j < m.cols(); ++j)
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m.at(i, j).get_den().get_mpz_t());
        for (std::size_t j = 0; j < m.cols(); ++j)
            out.at(i, j) = m.at(i, j) * Rat(l);
    }
    return out;
}

GenSet solve_mixed_q(const MixedSystem& sys) {
    const Mat& w = sys.m;
    Mat h = w.with_ring(kQ);
    for (std::size_t j : sys.sign_cols) {
        if (j >= w.cols()) throw precondition_error("solve_mixed: sign column out of range");
        Mat unit(1, w.cols(), kQ);
        unit.at(0, j) = 1;
        h = Mat::vcat(h, unit);
    }
    cones::ConeRep c = cones::hrep_to_vrep(cones::from_hrep(std::move(h)));
    return genset_canonicalize(GenSet::of(cones::generators(c)));
}

} // namespace

GenSet solve_mixed(const MixedSystem& sys, unsigned long completion_cap) {
    switch (sys.m.ring().kind()) {
    case RingKind::Integers:
        return hilbert::solve_mixed_z(sys, completion_cap);
    case RingKind::Rationals:
        return solve_mixed_q(sys);
    case RingKind::LocalizedIntegers: {
        MixedSystem zsys{clear_denominators(sys.m), sys.sign_cols};
        GenSet z = hilbert::solve_mixed_z(zsys, completion_cap);
        return GenSet::with_flag(z.gens().with_ring(sys.m.ring()), z.nonneg());
    }
    }
    throw precondition_error("solve_mixed: unknown ring");
}

GenSet solve_mixed_iterative(const MixedSystem& sys, unsigned long completion_cap) {
    const RingSpec ring = sys.m.ring();
    const bool over_z = !(ring.kind() == RingKind::Rationals);
    Mat w = over_z ? clear_denominators(sys.m) : sys.m.with_ring(kQ);
    const RingSpec work = over_z ? kZ : kQ;
    const std::size_t c = w.cols();

    std::vector<bool> signed_col(c, false);
    for (std::size_t j : sys.sign_cols) {
        if (j >= c) throw precondition_error("solve_mixed_iterative: sign column out of range");
        signed_col[j] = true;
    }
    std::vector<std::size_t> free_cols;
    for (std::size_t j = 0; j < c; ++j)
        if (!signed_col[j]) free_cols.push_back(j);

    // lift free columns into nonnegative pairs
    Mat lifted(w.rows(), c + free_cols.size(), work);
    for (std::size_t i = 0; i < w.rows(); ++i) {
        for (std::size_t j = 0; j < c; ++j) lifted.at(i, j) = w.at(i, j);
        for (std::size_t k = 0; k < free_cols.size(); ++k)
            lifted.at(i, c + k) = -w.at(i, free_cols[k]);
    }

    // row-by-row composition on the fully sign-constrained system
    Mat g = Mat::identity(lifted.cols(), work);
    for (std::size_t i = 0; i < lifted.rows(); ++i) {
        Mat row = lifted.row_range(i, 1) * g; // 1 x g.cols()
        GenSet step = over_z
            ? hilbert::hilbert_basis(row, completion_cap).basis
            : solve_mixed_q(MixedSystem{row, all_cols(row.cols())});
        g = g * step.gens();
        if (g.cols() == 0) break;
    }

    Mat subst(c, c + free_cols.size(), work);
    for (std::size_t j = 0; j < c; ++j) subst.at(j, j) = 1;
    for (std::size_t k = 0; k < free_cols.size(); ++k) subst.at(free_cols[k], c + k) = -1;

    Mat gens = subst * g;
    bool nonneg = free_cols.empty();
    GenSet out = GenSet::with_flag(gens.with_ring(ring), nonneg);
    return genset_canonicalize(out);
}

EquationSolution solve_equation(const Mat& u, unsigned long completion_cap) {
    Mat stacked = Mat::vcat(u, u.negate());
    GenSet gens = solve_mixed(MixedSystem{stacked, {}}, completion_cap);
    std::optional<Mat> basis;
    if (u.ring().kind() == RingKind::Rationals) {
        Mat ker = linalg::kernel_basis(u);
        Mat prim(ker.rows(), ker.cols(), kQ);
        for (std::size_t j = 0; j < ker.cols(); ++j) {
            std::vector<Int> col = linalg::primitive_integer(ker.col(j));
            for (std::size_t i = 0; i < ker.rows(); ++i) prim.at(i, j) = Rat(col[i]);
        }
        basis = prim;
    }
    return {gens, basis};
}

Presentation related_to_presented(const Presentation& doubled) {
    const Mat& span = doubled.spanning;
    if (span.cols() % 2 != 0)
        throw precondition_error("related_to_presented: block shape mismatch");
    const std::size_t n = span.cols() / 2;
    for (std::size_t i = 0; i < span.rows(); ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (span.at(i, n + j) != -span.at(i, j))
                throw precondition_error("related_to_presented: right block is not the negation");
    if (!doubled.solset.nonneg())
        throw precondition_error("related_to_presented: doubled solution set must be nonneg");
    const Mat& g = doubled.solset.gens();
    if (g.rows() != 2 * n)
        throw precondition_error("related_to_presented: block shape mismatch");

    Mat p = g.row_range(0, n);
    Mat q = g.row_range(n, n);
    GenSet out = genset_canonicalize(GenSet::of(p - q));
    return {span.col_range(0, n), out};
}

GenSet change_spanning(const Mat& u, const Mat& v, const Mat& m, const Mat& n,
                       const GenSet& s) {
    if (!(u * m == v)) throw precondition_error("change_spanning: v != u.m");
    if (!(v * n == u)) throw precondition_error("change_spanning: u != v.n");
    Mat id = Mat::identity(v.cols(), v.ring());
    Mat nm = n * m;
    Mat block = Mat::hcat(Mat::hcat(id - nm, nm - id), n * s.gens());
    return genset_canonicalize(GenSet::of(std::move(block)));
}

GenSet submodule_presentation(const Mat& u, const Mat& m, const GenSet& s_u,
                              unsigned long completion_cap) {
    if (m.rows() != u.cols())
        throw precondition_error("submodule_presentation: m must map into the span of u");
    if (s_u.ambient_dim() != u.cols())
        throw precondition_error("submodule_presentation: solution set dimension mismatch");
    const std::size_t ny = m.cols();
    const std::size_t k = s_u.count();

    // m.Y - s.Z = 0 (as two inequality blocks), Z >= 0, Y free
    Mat sys_row = Mat::hcat(m, s_u.gens().negate());
    Mat stacked = Mat::vcat(sys_row, sys_row.negate());
    std::vector<std::size_t> sign_cols;
    for (std::size_t j = 0; j < k; ++j) sign_cols.push_back(ny + j);
    GenSet sol = solve_mixed(MixedSystem{stacked, sign_cols}, completion_cap);

    Mat yblock = sol.gens().row_range(0, ny);
    return genset_canonicalize(GenSet::of(std::move(yblock)));
}

GenSet positive_cone_generators(const Mat& u, const GenSet& s) {
    return genset_canonicalize(GenSet::of(u * s.gens()));
}

GenSet presentation_from_parts(const Mat& u, const Mat& v, const Mat& m,
                               const GenSet& s_eq) {
    if (!(u * m == v)) throw precondition_error("presentation_from_parts: v != u.m");
    if (s_eq.ambient_dim() != u.cols())
        throw precondition_error("presentation_from_parts: equation block dimension mismatch");
    return genset_canonicalize(GenSet::of(Mat::hcat(m, s_eq.gens())));
}

GenSet semimodule_intersect(const GenSet& b, const GenSet& c,
                            unsigned long completion_cap) {
    if (b.ambient_dim() != c.ambient_dim())
        throw precondition_error("semimodule_intersect: ambient dimension mismatch");
    if (!(b.ring() == c.ring()))
        throw precondition_error("semimodule_intersect: ring mismatch");
    if (b.nonneg() != c.nonneg())
        throw precondition_error("semimodule_intersect: mixed nonneg/signed inputs");

    // b.X = c.Y with X, Y >= 0
    Mat sys_row = Mat::hcat(b.gens(), c.gens().negate());
    Mat stacked = Mat::vcat(sys_row, sys_row.negate());
    GenSet sol = solve_mixed(MixedSystem{stacked, all_cols(stacked.cols())}, completion_cap);

    Mat xblock = sol.gens().row_range(0, b.count());
    return genset_canonicalize(GenSet::of(b.gens() * xblock));
}

GenSet direct_sum_solve(const std::vector<Mat>& components,
                        unsigned long completion_cap) {
    if (components.empty())
        throw precondition_error("direct_sum_solve: no components");
    const std::size_t n = components[0].cols();
    for (const Mat& m : components)
        if (m.cols() != n)
            throw precondition_error("direct_sum_solve: unknown count differs between components");

    GenSet acc = solve_mixed(MixedSystem{components[0], all_cols(n)}, completion_cap);
    for (std::size_t i = 1; i < components.size(); ++i) {
        GenSet next = solve_mixed(MixedSystem{components[i], all_cols(n)}, completion_cap);
        acc = semimodule_intersect(acc, next, completion_cap);
    }
    return acc;
}

GenSet quotient_solve(const Mat& u, const Mat& v, unsigned long completion_cap) {
    if (u.rows() != v.rows())
        throw precondition_error("quotient_solve: u and v live in different modules");
    Mat sys_row = Mat::hcat(u, v);
    GenSet sol = solve_mixed(MixedSystem{sys_row, all_cols(u.cols())}, completion_cap);
    Mat xblock = sol.gens().row_range(0, u.cols());
    return genset_canonicalize(GenSet::of(std::move(xblock)));
}

GenSet matrix_ring_solve(const std::vector<Mat>& a, unsigned long completion_cap) {
    if (a.empty()) throw precondition_error("matrix_ring_solve: no coefficients");
    const std::size_t m = a[0].rows();
    const RingSpec ring = a[0].ring();
    for (const Mat& aj : a)
        if (aj.rows() != m || aj.cols() != m || !(aj.ring() == ring))
            throw precondition_error("matrix_ring_solve: coefficients must be square, same size, same ring");
    const std::size_t nunk = a.size();

    // unknown entry (j, r, q) lives at column j*m*m + r*m + q
    Mat flat(m * m, nunk * m * m, ring);
    for (std::size_t j = 0; j < nunk; ++j)
        for (std::size_t p = 0; p < m; ++p)
            for (std::size_t q = 0; q < m; ++q)
                for (std::size_t r = 0; r < m; ++r)
                    flat.at(p * m + q, j * m * m + r * m + q) = a[j].at(p, r);

    return solve_mixed(MixedSystem{flat, all_cols(flat.cols())}, completion_cap);
}

GenSet localize_lift(const Mat& u, unsigned long completion_cap) {
    if (u.ring().kind() != RingKind::LocalizedIntegers)
        throw precondition_error("localize_lift: ring must be a localization of Z");
    return solve_mixed(MixedSystem{u, all_cols(u.cols())}, completion_cap);
}

GenSet field_equation_solve(const std::vector<Rat>& p) {
    const std::size_t n = p.size();
    std::vector<std::size_t> pos, neg, zero;
    for (std::size_t i = 0; i < n; ++i) {
        int s = sgn(p[i]);
        if (s > 0) pos.push_back(i);
        else if (s < 0) neg.push_back(i);
        else zero.push_back(i);
    }
    Mat g(n, zero.size() + pos.size() * neg.size(), kQ);
    std::size_t col = 0;
    for (std::size_t i : zero) g.at(i, col++) = 1;
    for (std::size_t i : pos)
        for (std::size_t j : neg) {
            g.at(i, col) = 1 / p[i];
            g.at(j, col) = -1 / p[j];
            ++col;
        }
    return genset_canonicalize(GenSet::of(std::move(g)));
}

GenSet multi_equation_solve_q(const Mat& m) {
    const std::size_t n = m.cols();
    Mat g = Mat::identity(n, kQ);
    Mat mq = m.with_ring(kQ);
    for (std::size_t i = 0; i < mq.rows(); ++i) {
        Mat row = mq.row_range(i, 1) * g;
        GenSet step = field_equation_solve(row.row(0));
        g = g * step.gens();
        if (g.cols() == 0) break;
    }
    return genset_canonicalize(GenSet::of(std::move(g)));
}

} // namespace ordcalc::calc
