#include "ordcalc/genset.hpp"

#include "ordcalc/cone.hpp"
#include "ordcalc/errors.hpp"
#include "ordcalc/fourier_motzkin.hpp"
#include "ordcalc/linalg.hpp"

#include <algorithm>

namespace ordcalc {

GenSet GenSet::with_flag(Mat gens, bool nonneg) {
    if (nonneg && !gens.all_nonneg())
        throw precondition_error("nonneg flag set but a generator entry is negative");
    return GenSet(std::move(gens), nonneg);
}

GenSet genset_canonicalize(const GenSet& s) {
    const Mat& g = s.gens();
    std::vector<std::vector<Rat>> cols;
    for (std::size_t j = 0; j < g.cols(); ++j) {
        std::vector<Rat> c = g.col(j);
        bool zero = std::all_of(c.begin(), c.end(), [](const Rat& x) { return sgn(x) == 0; });
        if (!zero) cols.push_back(std::move(c));
    }
    auto less = [](const std::vector<Rat>& a, const std::vector<Rat>& b) {
        for (std::size_t i = 0; i < a.size(); ++i) {
            int c = cmp(a[i], b[i]);
            if (c != 0) return c < 0;
        }
        return false;
    };
    std::sort(cols.begin(), cols.end(), less);
    cols.erase(std::unique(cols.begin(), cols.end()), cols.end());

    Mat m(g.rows(), cols.size(), g.ring());
    for (std::size_t j = 0; j < cols.size(); ++j)
        for (std::size_t i = 0; i < g.rows(); ++i) m.at(i, j) = cols[j][i];
    return GenSet::with_flag(std::move(m), s.nonneg());
}

namespace {

// {Y >= 0 : S.Y = x} nonempty over Q: Gaussian solve, then Fourier-Motzkin
// on the kernel parameters.
bool member_rational(const std::vector<Rat>& x, const Mat& s) {
    auto part = linalg::solve_affine(s, x);
    if (!part) return false;
    Mat ker = linalg::kernel_basis(s);
    if (ker.cols() == 0)
        return std::all_of(part->begin(), part->end(),
                           [](const Rat& v) { return sgn(v) >= 0; });
    std::vector<fm::AffineIneq> sys;
    for (std::size_t j = 0; j < s.cols(); ++j) {
        fm::AffineIneq q;
        q.coeffs = ker.row(j);
        q.constant = (*part)[j];
        sys.push_back(std::move(q));
    }
    return fm::feasible(std::move(sys));
}

// DFS over multiplicities; generators are nonnegative nonzero integer columns.
bool member_int_dfs(std::vector<Int> x, const std::vector<std::vector<Int>>& gens,
                    std::size_t idx) {
    bool zero = std::all_of(x.begin(), x.end(), [](const Int& v) { return sgn(v) == 0; });
    if (zero) return true;
    if (idx == gens.size()) return false;
    const std::vector<Int>& g = gens[idx];

    // per-generator multiplicity bound: min over positive coordinates of g
    Int bound(-1);
    for (std::size_t i = 0; i < g.size(); ++i) {
        if (sgn(g[i]) <= 0) continue;
        Int b = x[i] / g[i]; // floor, both nonnegative
        if (bound < 0 || b < bound) bound = b;
    }
    if (bound < 0) return member_int_dfs(std::move(x), gens, idx + 1);

    std::vector<Int> y = x;
    for (Int c(0); c <= bound; ++c) {
        if (member_int_dfs(y, gens, idx + 1)) return true;
        for (std::size_t i = 0; i < g.size(); ++i) y[i] -= g[i];
    }
    return false;
}

std::vector<std::vector<Int>> integer_columns(const Mat& m) {
    std::vector<std::vector<Int>> cols;
    for (std::size_t j = 0; j < m.cols(); ++j) {
        std::vector<Rat> c = m.col(j);
        if (std::all_of(c.begin(), c.end(), [](const Rat& v) { return sgn(v) == 0; }))
            continue;
        std::vector<Int> ic(c.size());
        for (std::size_t i = 0; i < c.size(); ++i) ic[i] = c[i].get_num();
        cols.push_back(std::move(ic));
    }
    return cols;
}

bool member_integers(const std::vector<Rat>& x, const Mat& s) {
    for (const Rat& v : x)
        if (sgn(v) < 0) return false;
    std::vector<Int> xi(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) xi[i] = x[i].get_num();
    return member_int_dfs(std::move(xi), integer_columns(s), 0);
}

// Membership over Z with some primes inverted. Scaling by a unit reduces the
// question to: does some multiplier m, factoring over the inverted primes,
// put m.x into the integer monoid of the cleared generators? The multipliers
// that work are exactly the multiples of the minimal lattice multiplier on
// the minimal face containing x, once x lies in the rational cone; so the
// answer is a smoothness test on that multiplier.
bool member_localized(const std::vector<Rat>& x, const Mat& s,
                      const std::vector<unsigned long>& primes) {
    bool zero = std::all_of(x.begin(), x.end(), [](const Rat& v) { return sgn(v) == 0; });
    if (zero) return true;
    if (s.cols() == 0) return false;

    if (!member_rational(x, s)) return false;

    // clear denominators of generators and of x (all scales are units here)
    Int es(1);
    for (const Rat& e : s.entries())
        mpz_lcm(es.get_mpz_t(), es.get_mpz_t(), e.get_den().get_mpz_t());
    Mat si(s.rows(), s.cols(), RingSpec::rationals());
    for (std::size_t i = 0; i < s.rows(); ++i)
        for (std::size_t j = 0; j < s.cols(); ++j) si.at(i, j) = s.at(i, j) * Rat(es);

    Int ex(1);
    for (const Rat& v : x) mpz_lcm(ex.get_mpz_t(), ex.get_mpz_t(), v.get_den().get_mpz_t());
    std::vector<Rat> xi(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) xi[i] = x[i] * Rat(es) * Rat(ex);

    // minimal face of cone(S) containing x
    cones::ConeRep cone = cones::vrep_to_hrep(
        cones::from_vrep(s.rows(), si));
    std::vector<std::size_t> tight;
    for (std::size_t i = 0; i < cone.hrep->rows(); ++i)
        if (sgn(dot(cone.hrep->row(i), xi)) == 0) tight.push_back(i);
    std::vector<std::size_t> face_cols;
    for (std::size_t j = 0; j < si.cols(); ++j) {
        bool on_face = true;
        for (std::size_t i : tight)
            if (sgn(dot(cone.hrep->row(i), si.col(j))) != 0) { on_face = false; break; }
        if (on_face) face_cols.push_back(j);
    }
    Mat sf(si.rows(), face_cols.size(), RingSpec::rationals());
    for (std::size_t j = 0; j < face_cols.size(); ++j)
        for (std::size_t i = 0; i < si.rows(); ++i) sf.at(i, j) = si.at(i, face_cols[j]);

    // minimal m with m.x in the lattice spanned by the face generators
    linalg::Diag dg = linalg::diagonalize_integer(sf);
    std::vector<Rat> ux = mat_apply(dg.u, xi);
    Int m(1);
    for (std::size_t i = 0; i < ux.size(); ++i) {
        Int num = ux[i].get_num();
        if (i < dg.rank) {
            Int di = abs(dg.d.at(i, i).get_num());
            Int g;
            mpz_gcd(g.get_mpz_t(), di.get_mpz_t(), num.get_mpz_t());
            Int need;
            mpz_divexact(need.get_mpz_t(), di.get_mpz_t(), g.get_mpz_t());
            mpz_lcm(m.get_mpz_t(), m.get_mpz_t(), need.get_mpz_t());
        } else if (sgn(num) != 0) {
            return false; // x outside the span of its face, cannot happen after cone test
        }
    }
    return is_smooth(m, primes);
}

} // namespace

bool genset_membership(const std::vector<Rat>& x, const GenSet& s) {
    if (x.size() != s.ambient_dim())
        throw precondition_error("genset_membership: dimension mismatch");
    const RingSpec& ring = s.ring();
    for (const Rat& v : x)
        if (!ring.contains(v))
            throw precondition_error("genset_membership: point outside ring " + ring.name());

    switch (ring.kind()) {
    case RingKind::Rationals:
        return member_rational(x, s.gens());
    case RingKind::Integers:
        if (!s.nonneg())
            throw precondition_error(
                "genset_membership over Z is unsupported for signed generators");
        return member_integers(x, s.gens());
    case RingKind::LocalizedIntegers:
        if (!s.nonneg())
            throw precondition_error(
                "genset_membership over localized integers is unsupported for signed generators");
        return member_localized(x, s.gens(), ring.inverted_primes());
    }
    return false;
}

bool genset_membership(const Mat& x_column, const GenSet& s) {
    if (x_column.cols() != 1)
        throw precondition_error("genset_membership: expected a single column");
    return genset_membership(x_column.col(0), s);
}

} // namespace ordcalc
