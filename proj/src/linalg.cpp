#include "ordcalc/linalg.hpp"

#include "ordcalc/errors.hpp"

namespace ordcalc::linalg {

Rref rref(const Mat& a) {
    Mat m = a.with_ring(RingSpec::rationals());
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t p = r;
        while (p < m.rows() && sgn(m.at(p, c)) == 0) ++p;
        if (p == m.rows()) continue;
        if (p != r)
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m.at(p, j), m.at(r, j));
        Rat inv = 1 / m.at(r, c);
        for (std::size_t j = c; j < m.cols(); ++j) m.at(r, j) *= inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == r || sgn(m.at(i, c)) == 0) continue;
            Rat f = m.at(i, c);
            for (std::size_t j = c; j < m.cols(); ++j) m.at(i, j) -= f * m.at(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return {std::move(m), std::move(pivots)};
}

std::size_t rank(const Mat& a) { return rref(a).pivots.size(); }

Mat kernel_basis(const Mat& a) {
    Rref rr = rref(a);
    std::vector<bool> is_pivot(a.cols(), false);
    for (std::size_t c : rr.pivots) is_pivot[c] = true;

    std::vector<std::size_t> free_cols;
    for (std::size_t c = 0; c < a.cols(); ++c)
        if (!is_pivot[c]) free_cols.push_back(c);

    Mat basis(a.cols(), free_cols.size(), RingSpec::rationals());
    for (std::size_t k = 0; k < free_cols.size(); ++k) {
        std::size_t f = free_cols[k];
        basis.at(f, k) = 1;
        for (std::size_t r = 0; r < rr.pivots.size(); ++r)
            basis.at(rr.pivots[r], k) = -rr.mat.at(r, f);
    }
    return basis;
}

std::optional<std::vector<Rat>> solve_affine(const Mat& a, const std::vector<Rat>& b) {
    if (b.size() != a.rows()) throw precondition_error("solve_affine: size mismatch");
    Mat aug(a.rows(), a.cols() + 1, RingSpec::rationals());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) aug.at(i, j) = a.at(i, j);
        aug.at(i, a.cols()) = b[i];
    }
    Rref rr = rref(aug);
    for (std::size_t r = 0; r < rr.pivots.size(); ++r)
        if (rr.pivots[r] == a.cols()) return std::nullopt; // pivot in the rhs column
    std::vector<Rat> x(a.cols(), Rat(0));
    for (std::size_t r = 0; r < rr.pivots.size(); ++r)
        x[rr.pivots[r]] = rr.mat.at(r, a.cols());
    return x;
}

std::vector<Int> primitive_integer(const std::vector<Rat>& v) {
    Int lcm_den(1);
    bool nonzero = false;
    for (const Rat& x : v) {
        if (sgn(x) != 0) nonzero = true;
        mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), x.get_den().get_mpz_t());
    }
    if (!nonzero) throw precondition_error("primitive_integer: zero vector");
    std::vector<Int> w(v.size());
    Int g(0);
    for (std::size_t i = 0; i < v.size(); ++i) {
        Rat scaled = v[i] * Rat(lcm_den);
        w[i] = scaled.get_num();
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), w[i].get_mpz_t());
    }
    for (Int& x : w) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
    return w;
}

namespace {

void swap_rows(Mat& m, std::size_t a, std::size_t b) {
    for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m.at(a, j), m.at(b, j));
}
void swap_cols(Mat& m, std::size_t a, std::size_t b) {
    for (std::size_t i = 0; i < m.rows(); ++i) std::swap(m.at(i, a), m.at(i, b));
}
// row[a] -= f * row[b]
void row_op(Mat& m, std::size_t a, std::size_t b, const Rat& f) {
    for (std::size_t j = 0; j < m.cols(); ++j) m.at(a, j) -= f * m.at(b, j);
}
void col_op(Mat& m, std::size_t a, std::size_t b, const Rat& f) {
    for (std::size_t i = 0; i < m.rows(); ++i) m.at(i, a) -= f * m.at(i, b);
}

} // namespace

Diag diagonalize_integer(const Mat& a) {
    if (!a.is_integer()) throw precondition_error("diagonalize_integer: non-integer entries");
    RingSpec q = RingSpec::rationals();
    Mat d = a.with_ring(q);
    Mat u = Mat::identity(a.rows(), q);
    Mat v = Mat::identity(a.cols(), q);

    std::size_t t = 0;
    const std::size_t lim = std::min(a.rows(), a.cols());
    while (t < lim) {
        // pick the entry of smallest absolute value in the trailing block
        std::size_t pi = t, pj = t;
        Int best(0);
        for (std::size_t i = t; i < d.rows(); ++i)
            for (std::size_t j = t; j < d.cols(); ++j) {
                Int x = abs(d.at(i, j).get_num());
                if (sgn(x) == 0) continue;
                if (sgn(best) == 0 || x < best) { best = x; pi = i; pj = j; }
            }
        if (sgn(best) == 0) break; // trailing block is zero
        if (pi != t) { swap_rows(d, pi, t); swap_rows(u, pi, t); }
        if (pj != t) { swap_cols(d, pj, t); swap_cols(v, pj, t); }

        bool clean = true;
        for (std::size_t i = t + 1; i < d.rows(); ++i) {
            Int qz = d.at(i, t).get_num() / d.at(t, t).get_num(); // floor-ish; exactness not needed
            if (sgn(Rat(qz)) != 0) { row_op(d, i, t, Rat(qz)); row_op(u, i, t, Rat(qz)); }
            if (sgn(d.at(i, t)) != 0) clean = false;
        }
        for (std::size_t j = t + 1; j < d.cols(); ++j) {
            Int qz = d.at(t, j).get_num() / d.at(t, t).get_num();
            if (sgn(Rat(qz)) != 0) { col_op(d, j, t, Rat(qz)); col_op(v, j, t, Rat(qz)); }
            if (sgn(d.at(t, j)) != 0) clean = false;
        }
        if (clean) ++t; // pivot now alone in its row and column
    }
    return {std::move(u), std::move(d), std::move(v), t};
}

} // namespace ordcalc::linalg
