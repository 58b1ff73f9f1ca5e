#include "ordcalc/lgroup.hpp"

#include "ordcalc/errors.hpp"

#include <algorithm>
#include <numeric>

namespace ordcalc::lgroup {

namespace {

const RingSpec kQ = RingSpec::rationals();
const RingSpec kZ = RingSpec::integers();

void check_dims(const LatticeTerm& a, const LatticeTerm& b) {
    if (a.dim() != b.dim())
        throw precondition_error("lattice terms have different dimensions");
}

void sort_dedupe(std::vector<LinFunc>& fs) {
    std::sort(fs.begin(), fs.end());
    fs.erase(std::unique(fs.begin(), fs.end()), fs.end());
}

// min(A) + min(B) = min over pairwise sums
std::vector<LinFunc> meet_sum(const std::vector<LinFunc>& a, const std::vector<LinFunc>& b,
                              std::size_t node_cap) {
    if (a.size() * b.size() > node_cap)
        throw resource_limit_error("term normalization exceeded the node cap");
    std::vector<LinFunc> out;
    out.reserve(a.size() * b.size());
    for (const LinFunc& f : a)
        for (const LinFunc& g : b) out.push_back(lin_add(f, g));
    sort_dedupe(out);
    return out;
}

DiffOfMeets dm_neg(DiffOfMeets d) {
    std::swap(d.pos, d.neg);
    return d;
}

DiffOfMeets dm_add(const DiffOfMeets& a, const DiffOfMeets& b, std::size_t cap) {
    DiffOfMeets r;
    r.pos = meet_sum(a.pos, b.pos, cap);
    r.neg = meet_sum(a.neg, b.neg, cap);
    return r;
}

// (A - B) ^ (C - D) = min(A + D, C + B) - (B + D)
DiffOfMeets dm_meet(const DiffOfMeets& a, const DiffOfMeets& b, std::size_t cap) {
    DiffOfMeets r;
    r.pos = meet_sum(a.pos, b.neg, cap);
    std::vector<LinFunc> other = meet_sum(b.pos, a.neg, cap);
    r.pos.insert(r.pos.end(), other.begin(), other.end());
    sort_dedupe(r.pos);
    r.neg = meet_sum(a.neg, b.neg, cap);
    if (r.pos.size() + r.neg.size() > cap)
        throw resource_limit_error("term normalization exceeded the node cap");
    return r;
}

DiffOfMeets to_dm(const LatticeTerm& t, std::size_t cap) {
    switch (t.kind()) {
    case LatticeTerm::Kind::Lin: {
        DiffOfMeets d;
        d.pos = {t.leaf()};
        d.neg = {LinFunc{std::vector<Int>(t.dim(), Int(0))}};
        return d;
    }
    case LatticeTerm::Kind::Neg:
        return dm_neg(to_dm(t.arg(0), cap));
    case LatticeTerm::Kind::Add:
        return dm_add(to_dm(t.arg(0), cap), to_dm(t.arg(1), cap), cap);
    case LatticeTerm::Kind::Meet:
        return dm_meet(to_dm(t.arg(0), cap), to_dm(t.arg(1), cap), cap);
    case LatticeTerm::Kind::Join: {
        // a v b = a + b - (a ^ b)
        DiffOfMeets a = to_dm(t.arg(0), cap);
        DiffOfMeets b = to_dm(t.arg(1), cap);
        return dm_add(dm_add(a, b, cap), dm_neg(dm_meet(a, b, cap)), cap);
    }
    }
    throw precondition_error("unknown term node");
}

std::vector<Rat> lin_row(const LinFunc& f) {
    std::vector<Rat> r(f.coeffs.size());
    for (std::size_t i = 0; i < f.coeffs.size(); ++i) r[i] = Rat(f.coeffs[i]);
    return r;
}

// all permutations of {0..k-1}, guarded by the piece cap
std::vector<std::vector<std::size_t>> permutations(std::size_t k, std::size_t cap) {
    std::vector<std::size_t> idx(k);
    std::iota(idx.begin(), idx.end(), 0);
    std::vector<std::vector<std::size_t>> out;
    do {
        out.push_back(idx);
        if (out.size() > cap)
            throw resource_limit_error("piece cap exceeded while decomposing");
    } while (std::next_permutation(idx.begin(), idx.end()));
    return out;
}

} // namespace

Rat eval(const LinFunc& f, const std::vector<Rat>& x) {
    if (x.size() != f.coeffs.size())
        throw precondition_error("functional/point dimension mismatch");
    Rat s(0);
    for (std::size_t i = 0; i < x.size(); ++i)
        if (sgn(f.coeffs[i]) != 0) s += Rat(f.coeffs[i]) * x[i];
    return s;
}

LinFunc lin_add(const LinFunc& a, const LinFunc& b) {
    LinFunc r = a;
    for (std::size_t i = 0; i < r.coeffs.size(); ++i) r.coeffs[i] += b.coeffs[i];
    return r;
}

LinFunc lin_sub(const LinFunc& a, const LinFunc& b) {
    LinFunc r = a;
    for (std::size_t i = 0; i < r.coeffs.size(); ++i) r.coeffs[i] -= b.coeffs[i];
    return r;
}

LatticeTerm LatticeTerm::lin(std::vector<Int> coeffs) {
    std::size_t n = coeffs.size();
    auto node = std::make_shared<Node>(Node{Kind::Lin, LinFunc{std::move(coeffs)}, {}});
    return LatticeTerm(std::move(node), n);
}

LatticeTerm LatticeTerm::add(LatticeTerm a, LatticeTerm b) {
    check_dims(a, b);
    std::size_t n = a.dim();
    auto node = std::make_shared<Node>(Node{Kind::Add, {}, {std::move(a), std::move(b)}});
    return LatticeTerm(std::move(node), n);
}

LatticeTerm LatticeTerm::neg(LatticeTerm a) {
    std::size_t n = a.dim();
    auto node = std::make_shared<Node>(Node{Kind::Neg, {}, {std::move(a)}});
    return LatticeTerm(std::move(node), n);
}

LatticeTerm LatticeTerm::meet(LatticeTerm a, LatticeTerm b) {
    check_dims(a, b);
    std::size_t n = a.dim();
    auto node = std::make_shared<Node>(Node{Kind::Meet, {}, {std::move(a), std::move(b)}});
    return LatticeTerm(std::move(node), n);
}

LatticeTerm LatticeTerm::join(LatticeTerm a, LatticeTerm b) {
    check_dims(a, b);
    std::size_t n = a.dim();
    auto node = std::make_shared<Node>(Node{Kind::Join, {}, {std::move(a), std::move(b)}});
    return LatticeTerm(std::move(node), n);
}

LatticeTerm LatticeTerm::abs(LatticeTerm a) {
    LatticeTerm c = a;
    return join(std::move(a), neg(std::move(c)));
}

LatticeTerm LatticeTerm::zero(std::size_t dim) {
    return lin(std::vector<Int>(dim, Int(0)));
}

Rat LatticeTerm::eval(const std::vector<Rat>& x) const {
    switch (kind()) {
    case Kind::Lin:
        return lgroup::eval(leaf(), x);
    case Kind::Add:
        return arg(0).eval(x) + arg(1).eval(x);
    case Kind::Neg:
        return -arg(0).eval(x);
    case Kind::Meet:
        return std::min(arg(0).eval(x), arg(1).eval(x));
    case Kind::Join:
        return std::max(arg(0).eval(x), arg(1).eval(x));
    }
    throw precondition_error("unknown term node");
}

Rat eval(const DiffOfMeets& d, const std::vector<Rat>& x) {
    auto meet_val = [&x](const std::vector<LinFunc>& fs) {
        Rat m = eval(fs[0], x);
        for (std::size_t i = 1; i < fs.size(); ++i) m = std::min(m, eval(fs[i], x));
        return m;
    };
    return meet_val(d.pos) - meet_val(d.neg);
}

DiffOfMeets term_to_diff_of_meets(const LatticeTerm& t, std::size_t node_cap) {
    return to_dm(t, node_cap);
}

Rat eval(const PLFunc& f, const std::vector<Rat>& x) {
    for (const PLPiece& p : f.pieces)
        if (cones::contains_point(p.cone, x)) return eval(p.func, x);
    throw precondition_error("point outside the domain of the piecewise function");
}

PLFunc decompose_pl(const DiffOfMeets& d, const cones::ConeRep& k, std::size_t piece_cap) {
    if (d.pos.empty() || d.neg.empty())
        throw precondition_error("decompose_pl: meets must be nonempty");
    cones::ConeRep base = k.hrep ? k : cones::vrep_to_hrep(k);
    const std::size_t n = base.dim;

    // candidate count k!*l! guarded by the cap
    {
        std::size_t count = 1;
        auto times_factorial = [&count, piece_cap](std::size_t k) {
            for (std::size_t i = 2; i <= k && count <= piece_cap; ++i) count *= i;
        };
        times_factorial(d.pos.size());
        times_factorial(d.neg.size());
        if (count > piece_cap)
            throw resource_limit_error("piece cap exceeded while decomposing");
    }

    auto perms_pos = permutations(d.pos.size(), piece_cap);
    auto perms_neg = permutations(d.neg.size(), piece_cap);
    if (perms_pos.size() * perms_neg.size() > piece_cap)
        throw resource_limit_error("piece cap exceeded while decomposing");

    auto chain_rows = [&](const std::vector<LinFunc>& fs,
                          const std::vector<std::size_t>& sigma, Mat& h) {
        for (std::size_t t = 0; t + 1 < sigma.size(); ++t) {
            LinFunc diff = lin_sub(fs[sigma[t + 1]], fs[sigma[t]]);
            Mat row(1, n, kQ);
            for (std::size_t j = 0; j < n; ++j) row.at(0, j) = Rat(diff.coeffs[j]);
            h = Mat::vcat(h, row);
        }
    };

    PLFunc out;
    out.dim = n;
    for (const auto& sp : perms_pos)
        for (const auto& sn : perms_neg) {
            Mat h = *base.hrep;
            chain_rows(d.pos, sp, h);
            chain_rows(d.neg, sn, h);
            cones::ConeRep piece = cones::hrep_to_vrep(cones::from_hrep(std::move(h)));
            if (cones::is_trivial(piece)) continue;
            out.pieces.push_back({std::move(piece), lin_sub(d.pos[sp[0]], d.neg[sn[0]])});
        }

    if (out.pieces.empty()) {
        // the cone is {0}; keep one piece so the domain stays covered
        cones::ConeRep piece = cones::ensure_both(base);
        out.pieces.push_back({std::move(piece), lin_sub(d.pos[0], d.neg[0])});
    }

    // drop exact duplicates (same generators, same functional)
    std::vector<PLPiece> dedup;
    for (PLPiece& p : out.pieces) {
        bool dup = false;
        for (const PLPiece& q : dedup)
            if (p.func == q.func && *p.cone.vrep == *q.cone.vrep &&
                *p.cone.lineality == *q.cone.lineality)
                { dup = true; break; }
        if (!dup) dedup.push_back(std::move(p));
    }
    out.pieces = std::move(dedup);
    return out;
}

cones::PolyCone nonneg_region(const LatticeTerm& t, std::size_t piece_cap,
                              std::size_t node_cap) {
    const std::size_t n = t.dim();
    DiffOfMeets d = term_to_diff_of_meets(t, node_cap);
    cones::ConeRep whole = cones::from_hrep(Mat(0, n, kQ));
    PLFunc pl = decompose_pl(d, whole, piece_cap);

    cones::PolyCone region;
    region.dim = n;
    for (const PLPiece& p : pl.pieces) {
        Mat h = *p.cone.hrep;
        Mat row(1, n, kQ);
        for (std::size_t j = 0; j < n; ++j) row.at(0, j) = Rat(p.func.coeffs[j]);
        cones::ConeRep piece = cones::hrep_to_vrep(cones::from_hrep(Mat::vcat(h, row)));
        if (cones::is_trivial(piece)) continue;
        bool dup = false;
        for (const cones::ConeRep& q : region.pieces)
            if (*piece.vrep == *q.vrep && *piece.lineality == *q.lineality) { dup = true; break; }
        if (!dup) region.pieces.push_back(std::move(piece));
    }
    if (region.pieces.empty()) {
        // region is the origin only
        Mat h = Mat::vcat(Mat::identity(n, kQ), Mat::identity(n, kQ).negate());
        region.pieces.push_back(cones::hrep_to_vrep(cones::from_hrep(std::move(h))));
    }
    return region;
}

LPresentation make_presentation(std::size_t n, std::vector<LatticeTerm> relators,
                                std::size_t piece_cap, std::size_t node_cap) {
    for (const LatticeTerm& r : relators)
        if (r.dim() != n)
            throw precondition_error("relator dimension differs from generator count");
    LatticeTerm p = LatticeTerm::zero(n);
    for (const LatticeTerm& r : relators)
        p = LatticeTerm::add(std::move(p), LatticeTerm::abs(r));
    cones::PolyCone k = nonneg_region(LatticeTerm::neg(p), piece_cap, node_cap);
    return LPresentation{n, std::move(relators), std::move(p), std::move(k)};
}

cones::PolyCone presentation_cone(const LPresentation& pres) { return pres.k_cone; }

bool pl_equal(const LPresentation& pres, const LatticeTerm& f, const LatticeTerm& g,
              std::size_t piece_cap, std::size_t node_cap) {
    if (f.dim() != pres.n || g.dim() != pres.n)
        throw precondition_error("pl_equal: term dimension differs from presentation");
    LatticeTerm h = LatticeTerm::sub(f, g);
    DiffOfMeets d = term_to_diff_of_meets(h, node_cap);
    for (const cones::ConeRep& piece : pres.k_cone.pieces) {
        PLFunc pl = decompose_pl(d, piece, piece_cap);
        for (const PLPiece& p : pl.pieces) {
            Mat gens = cones::generators(p.cone);
            for (std::size_t j = 0; j < gens.cols(); ++j)
                if (sgn(eval(p.func, gens.col(j))) != 0) return false;
        }
    }
    return true;
}

hilbert::HilbertBasis lgroup_solve(const LPresentation& pres,
                                   const std::vector<LatticeTerm>& fs,
                                   std::size_t piece_cap, std::size_t node_cap,
                                   unsigned long completion_cap) {
    const std::size_t m = fs.size();
    for (const LatticeTerm& f : fs)
        if (f.dim() != pres.n)
            throw precondition_error("lgroup_solve: term dimension differs from presentation");

    std::vector<DiffOfMeets> dms;
    dms.reserve(m);
    for (const LatticeTerm& f : fs) dms.push_back(term_to_diff_of_meets(f, node_cap));

    // refine the presentation cone until every f_i is linear on every piece
    struct Refined {
        cones::ConeRep cone;
        std::vector<LinFunc> funcs;
    };
    std::vector<Refined> pieces;
    for (const cones::ConeRep& piece : pres.k_cone.pieces)
        pieces.push_back({cones::ensure_both(piece), {}});
    for (const DiffOfMeets& d : dms) {
        std::vector<Refined> next;
        for (Refined& r : pieces) {
            PLFunc pl = decompose_pl(d, r.cone, piece_cap);
            for (PLPiece& p : pl.pieces) {
                std::vector<LinFunc> funcs = r.funcs;
                funcs.push_back(p.func);
                next.push_back({std::move(p.cone), std::move(funcs)});
            }
        }
        if (next.size() > piece_cap)
            throw resource_limit_error("piece cap exceeded while refining");
        pieces = std::move(next);
    }

    // one integer inequality row over lambda per positive generator per piece
    std::vector<std::vector<Int>> rows;
    for (const Refined& r : pieces) {
        Mat gens = cones::generators(r.cone);
        for (std::size_t j = 0; j < gens.cols(); ++j) {
            std::vector<Rat> x = gens.col(j);
            std::vector<Int> row(m);
            for (std::size_t i = 0; i < m; ++i) row[i] = eval(r.funcs[i], x).get_num();
            rows.push_back(std::move(row));
        }
    }
    std::sort(rows.begin(), rows.end());
    rows.erase(std::unique(rows.begin(), rows.end()), rows.end());

    Mat sys(rows.size(), m, kZ);
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < m; ++j) sys.at(i, j) = Rat(rows[i][j]);

    return hilbert::hilbert_basis(sys, completion_cap);
}

std::vector<ConvergentRow> irrational_demo(
    const std::vector<std::pair<long, long>>& convergents,
    unsigned long completion_cap) {
    std::vector<ConvergentRow> out;
    for (auto [p, q] : convergents) {
        if (p <= 0 || q <= 0)
            throw precondition_error("irrational_demo: numerator and denominator must be positive");
        Int g;
        mpz_gcd(g.get_mpz_t(), Int(p).get_mpz_t(), Int(q).get_mpz_t());
        if (g != 1)
            throw precondition_error("irrational_demo: p and q must be coprime");
        Mat row(1, 2, kZ);
        row.at(0, 0) = q;
        row.at(0, 1) = -p;
        out.push_back({p, q, hilbert::hilbert_basis(row, completion_cap).basis});
    }
    return out;
}

std::vector<std::pair<long, long>> sqrt2_convergents(std::size_t depth) {
    if (depth < 1 || depth > 8)
        throw precondition_error("sqrt2_convergents: depth must be between 1 and 8");
    std::vector<std::pair<long, long>> out;
    long p0 = 1, q0 = 1; // 1/1, then p' = p + 2q, q' = p + q
    for (std::size_t i = 0; i < depth; ++i) {
        out.emplace_back(p0, q0);
        long p1 = p0 + 2 * q0;
        long q1 = p0 + q0;
        p0 = p1;
        q0 = q1;
    }
    return out;
}

} // namespace ordcalc::lgroup
