#include "ordcalc/cone.hpp"

#include "ordcalc/errors.hpp"
#include "ordcalc/linalg.hpp"

#include <algorithm>
#include <set>

namespace ordcalc::cones {

namespace {

const RingSpec kQ = RingSpec::rationals();

Rat dot_ri(const std::vector<Rat>& row, const std::vector<Int>& v) {
    Rat s(0);
    for (std::size_t i = 0; i < row.size(); ++i)
        if (sgn(row[i]) != 0 && sgn(v[i]) != 0) s += row[i] * Rat(v[i]);
    return s;
}

bool int_col_less(const std::vector<Int>& a, const std::vector<Int>& b) {
    for (std::size_t i = 0; i < a.size(); ++i) {
        int c = cmp(a[i], b[i]);
        if (c != 0) return c < 0;
    }
    return false;
}

Mat cols_to_mat(std::size_t dim, const std::vector<std::vector<Int>>& cols) {
    Mat m(dim, cols.size(), kQ);
    for (std::size_t j = 0; j < cols.size(); ++j)
        for (std::size_t i = 0; i < dim; ++i) m.at(i, j) = Rat(cols[j][i]);
    return m;
}

void sort_dedupe(std::vector<std::vector<Int>>& cols) {
    std::sort(cols.begin(), cols.end(), int_col_less);
    cols.erase(std::unique(cols.begin(), cols.end()), cols.end());
}

// Canonical lineality basis: rref rows of the spanning set, primitivized,
// returned as columns. Leading entries come out positive.
Mat canonical_lineality(std::size_t dim, const Mat& span_cols) {
    if (span_cols.cols() == 0) return Mat(dim, 0, kQ);
    linalg::Rref rr = linalg::rref(span_cols.transpose());
    std::vector<std::vector<Int>> cols;
    for (std::size_t r = 0; r < rr.pivots.size(); ++r)
        cols.push_back(linalg::primitive_integer(rr.mat.row(r)));
    return cols_to_mat(dim, cols);
}

// Double description for a pointed cone {y : rows.y >= 0} in dimension q.
// rank(rows) must equal q. Returns primitive ray columns.
std::vector<std::vector<Int>> dd_pointed(const std::vector<std::vector<Rat>>& rows,
                                         std::size_t q) {
    // greedy initial basis of q independent rows, in input order
    std::vector<std::size_t> init;
    {
        Mat acc(0, q, kQ);
        for (std::size_t i = 0; i < rows.size() && init.size() < q; ++i) {
            Mat cand(acc.rows() + 1, q, kQ);
            for (std::size_t r = 0; r < acc.rows(); ++r)
                for (std::size_t j = 0; j < q; ++j) cand.at(r, j) = acc.at(r, j);
            for (std::size_t j = 0; j < q; ++j) cand.at(acc.rows(), j) = rows[i][j];
            if (linalg::rank(cand) > acc.rows()) {
                acc = std::move(cand);
                init.push_back(i);
            }
        }
        if (init.size() < q)
            throw precondition_error("dd_pointed: system is not pointed");
    }

    // rays of the simplicial start: columns of the inverse of the initial rows
    std::vector<std::vector<Int>> rays;
    {
        Mat aug(q, 2 * q, kQ);
        for (std::size_t i = 0; i < q; ++i) {
            for (std::size_t j = 0; j < q; ++j) aug.at(i, j) = rows[init[i]][j];
            aug.at(i, q + i) = 1;
        }
        linalg::Rref rr = linalg::rref(aug);
        for (std::size_t j = 0; j < q; ++j) {
            std::vector<Rat> col(q);
            for (std::size_t i = 0; i < q; ++i) col[i] = rr.mat.at(i, q + j);
            rays.push_back(linalg::primitive_integer(col));
        }
    }

    std::vector<std::size_t> processed = init;
    auto is_processed = [&](std::size_t i) {
        return std::find(processed.begin(), processed.end(), i) != processed.end();
    };

    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (is_processed(i)) continue;
        const std::vector<Rat>& a = rows[i];

        std::vector<std::vector<Int>> plus, zero, minus;
        std::vector<Rat> slack_plus, slack_minus;
        for (auto& r : rays) {
            Rat s = dot_ri(a, r);
            int sg = sgn(s);
            if (sg > 0) { plus.push_back(r); slack_plus.push_back(s); }
            else if (sg < 0) { minus.push_back(r); slack_minus.push_back(s); }
            else zero.push_back(r);
        }

        auto tight_at = [&](const std::vector<Int>& r) {
            std::vector<std::size_t> t;
            for (std::size_t k : processed)
                if (sgn(dot_ri(rows[k], r)) == 0) t.push_back(k);
            return t;
        };

        std::vector<std::vector<Int>> next = zero;
        for (auto& r : plus) next.push_back(r);

        if (!plus.empty() && !minus.empty() && q >= 2) {
            for (std::size_t ip = 0; ip < plus.size(); ++ip) {
                std::vector<std::size_t> tp = tight_at(plus[ip]);
                for (std::size_t im = 0; im < minus.size(); ++im) {
                    std::vector<std::size_t> tm = tight_at(minus[im]);
                    std::vector<std::size_t> common;
                    std::set_intersection(tp.begin(), tp.end(), tm.begin(), tm.end(),
                                          std::back_inserter(common));
                    Mat sub(common.size(), q, kQ);
                    for (std::size_t r = 0; r < common.size(); ++r)
                        for (std::size_t j = 0; j < q; ++j)
                            sub.at(r, j) = rows[common[r]][j];
                    if (linalg::rank(sub) != q - 2) continue; // not adjacent

                    // positive combination landing on the hyperplane a.y = 0
                    std::vector<Rat> combo(q);
                    for (std::size_t j = 0; j < q; ++j)
                        combo[j] = slack_plus[ip] * Rat(minus[im][j]) -
                                   slack_minus[im] * Rat(plus[ip][j]);
                    next.push_back(linalg::primitive_integer(combo));
                }
            }
        }
        sort_dedupe(next);
        rays = std::move(next);
        processed.push_back(i);
        std::sort(processed.begin(), processed.end());
    }

    sort_dedupe(rays);
    return rays;
}

Mat nonzero_rows(const Mat& h) {
    std::vector<std::size_t> keep;
    for (std::size_t i = 0; i < h.rows(); ++i) {
        bool nz = false;
        for (std::size_t j = 0; j < h.cols(); ++j)
            if (sgn(h.at(i, j)) != 0) { nz = true; break; }
        if (nz) keep.push_back(i);
    }
    Mat m(keep.size(), h.cols(), kQ);
    for (std::size_t r = 0; r < keep.size(); ++r)
        for (std::size_t j = 0; j < h.cols(); ++j) m.at(r, j) = h.at(keep[r], j);
    return m;
}

} // namespace

ConeRep from_hrep(Mat h) {
    ConeRep c;
    c.dim = h.cols();
    c.hrep = h.with_ring(kQ);
    return c;
}

ConeRep from_vrep(std::size_t dim, Mat rays, std::optional<Mat> lineality) {
    if (rays.rows() != dim) throw precondition_error("from_vrep: ray dimension mismatch");
    ConeRep c;
    c.dim = dim;
    std::vector<std::vector<Int>> cols;
    for (std::size_t j = 0; j < rays.cols(); ++j) {
        std::vector<Rat> col = rays.col(j);
        bool zero = std::all_of(col.begin(), col.end(), [](const Rat& x) { return sgn(x) == 0; });
        if (!zero) cols.push_back(ray_canonicalize(col));
    }
    sort_dedupe(cols);
    c.vrep = cols_to_mat(dim, cols);
    if (lineality && lineality->cols() > 0)
        c.lineality = canonical_lineality(dim, lineality->with_ring(kQ));
    else
        c.lineality = Mat(dim, 0, kQ);
    return c;
}

std::vector<Int> ray_canonicalize(const std::vector<Rat>& v) {
    return linalg::primitive_integer(v); // orientation kept
}

ConeRep hrep_to_vrep(const ConeRep& c) {
    if (!c.hrep) throw precondition_error("hrep_to_vrep: hrep absent");
    if (c.dim == 0) throw precondition_error("zero ambient dimension");
    const std::size_t n = c.dim;

    Mat h = nonzero_rows(*c.hrep);
    ConeRep out = c;

    if (h.rows() == 0) { // whole space
        out.vrep = Mat(n, 0, kQ);
        out.lineality = canonical_lineality(n, Mat::identity(n, kQ));
        return out;
    }

    Mat ker = linalg::kernel_basis(h);
    Mat lin = canonical_lineality(n, ker);
    const std::size_t d = lin.cols();
    const std::size_t q = n - d;

    if (q == 0) { // h had only zero rows; already handled, defensive
        out.vrep = Mat(n, 0, kQ);
        out.lineality = lin;
        return out;
    }

    // quotient by the lineality: restrict to the pivot coordinates of h
    std::vector<std::size_t> piv = linalg::rref(h).pivots;
    std::vector<std::vector<Rat>> rows(h.rows(), std::vector<Rat>(q));
    for (std::size_t i = 0; i < h.rows(); ++i)
        for (std::size_t t = 0; t < q; ++t) rows[i][t] = h.at(i, piv[t]);

    std::vector<std::vector<Int>> qrays = dd_pointed(rows, q);

    std::vector<std::vector<Int>> rays;
    for (auto& r : qrays) {
        std::vector<Int> x(n, Int(0));
        for (std::size_t t = 0; t < q; ++t) x[piv[t]] = r[t];
        rays.push_back(std::move(x));
    }
    sort_dedupe(rays);

    out.vrep = cols_to_mat(n, rays);
    out.lineality = lin;
    validate(out);
    return out;
}

ConeRep vrep_to_hrep(const ConeRep& c) {
    if (!c.vrep) throw precondition_error("vrep_to_hrep: vrep absent");
    if (c.dim == 0) throw precondition_error("zero ambient dimension");
    const std::size_t n = c.dim;
    const Mat& rays = *c.vrep;
    Mat lin = c.lineality ? *c.lineality : Mat(n, 0, kQ);

    // dual cone {p : p.ray >= 0, p.l = 0} described by inequalities
    Mat dual_rows = rays.transpose();
    dual_rows = Mat::vcat(dual_rows, lin.transpose());
    dual_rows = Mat::vcat(dual_rows, lin.transpose().negate());

    ConeRep dual = hrep_to_vrep(from_hrep(dual_rows));

    // hrep of the original cone: rays of the dual, plus +- its lineality
    Mat hr = dual.vrep->transpose();
    hr = Mat::vcat(hr, dual.lineality->transpose());
    hr = Mat::vcat(hr, dual.lineality->transpose().negate());

    ConeRep out = c;
    out.hrep = hr;
    out.lineality = lin;
    validate(out);
    return out;
}

ConeRep ensure_both(const ConeRep& c) {
    if (c.hrep && c.vrep) return c;
    if (c.hrep) return hrep_to_vrep(c);
    return vrep_to_hrep(c);
}

ConeRep intersect(const ConeRep& a, const ConeRep& b) {
    if (a.dim != b.dim) throw precondition_error("cone_intersect: dimension mismatch");
    ConeRep ah = a.hrep ? a : vrep_to_hrep(a);
    ConeRep bh = b.hrep ? b : vrep_to_hrep(b);
    return hrep_to_vrep(from_hrep(Mat::vcat(*ah.hrep, *bh.hrep)));
}

Mat generators(const ConeRep& c) {
    ConeRep cc = c.vrep ? c : hrep_to_vrep(c);
    Mat g = *cc.vrep;
    if (cc.lineality && cc.lineality->cols() > 0) {
        g = Mat::hcat(g, *cc.lineality);
        g = Mat::hcat(g, cc.lineality->negate());
    }
    return g;
}

bool contains_point(const ConeRep& c, const std::vector<Rat>& x) {
    if (x.size() != c.dim) throw precondition_error("contains_point: dimension mismatch");
    ConeRep cc = c.hrep ? c : vrep_to_hrep(c);
    for (std::size_t i = 0; i < cc.hrep->rows(); ++i)
        if (sgn(dot(cc.hrep->row(i), x)) < 0) return false;
    return true;
}

bool contains_point(const PolyCone& k, const std::vector<Rat>& x) {
    for (const ConeRep& c : k.pieces)
        if (contains_point(c, x)) return true;
    return false;
}

bool equal(const ConeRep& a, const ConeRep& b) {
    if (a.dim != b.dim) return false;
    ConeRep ac = ensure_both(a), bc = ensure_both(b);
    auto covered = [](const ConeRep& inner, const ConeRep& outer) {
        Mat g = generators(inner);
        for (std::size_t j = 0; j < g.cols(); ++j)
            if (!contains_point(outer, g.col(j))) return false;
        return true;
    };
    return covered(ac, bc) && covered(bc, ac);
}

bool is_trivial(const ConeRep& c) {
    ConeRep cc = c.vrep ? c : hrep_to_vrep(c);
    return cc.vrep->cols() == 0 && (!cc.lineality || cc.lineality->cols() == 0);
}

void validate(const ConeRep& c) {
    if (!c.hrep || !c.vrep) return;
    for (std::size_t i = 0; i < c.hrep->rows(); ++i) {
        std::vector<Rat> row = c.hrep->row(i);
        for (std::size_t j = 0; j < c.vrep->cols(); ++j)
            if (sgn(dot(row, c.vrep->col(j))) < 0)
                throw precondition_error("cone invariant violated: ray fails inequality");
        if (c.lineality)
            for (std::size_t j = 0; j < c.lineality->cols(); ++j)
                if (sgn(dot(row, c.lineality->col(j))) != 0)
                    throw precondition_error("cone invariant violated: lineality not in boundary");
    }
}

} // namespace ordcalc::cones
