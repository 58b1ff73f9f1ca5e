#include "ordcalc/hilbert.hpp"

#include "ordcalc/errors.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace ordcalc::hilbert {

namespace {

const RingSpec kZ = RingSpec::integers();

using IVec = std::vector<Int>;

bool leq_componentwise(const IVec& a, const IVec& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

bool is_zero(const IVec& v) {
    return std::all_of(v.begin(), v.end(), [](const Int& x) { return sgn(x) == 0; });
}

std::vector<IVec> int_rows(const Mat& m) {
    if (!m.is_integer()) throw precondition_error("expected integer entries");
    std::vector<IVec> rows(m.rows(), IVec(m.cols()));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) rows[i][j] = m.at(i, j).get_num();
    return rows;
}

Mat cols_to_mat(std::size_t n, const std::vector<IVec>& cols, const RingSpec& ring) {
    Mat m(n, cols.size(), ring);
    for (std::size_t j = 0; j < cols.size(); ++j)
        for (std::size_t i = 0; i < n; ++i) m.at(i, j) = Rat(cols[j][i]);
    return m;
}

// value of a.t for column vector t
IVec apply_rows(const std::vector<IVec>& rows, const IVec& t) {
    IVec v(rows.size(), Int(0));
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < t.size(); ++j)
            if (sgn(rows[i][j]) != 0 && sgn(t[j]) != 0) v[i] += rows[i][j] * t[j];
    return v;
}

Int ivec_dot(const IVec& a, const IVec& b) {
    Int s(0);
    for (std::size_t i = 0; i < a.size(); ++i)
        if (sgn(a[i]) != 0 && sgn(b[i]) != 0) s += a[i] * b[i];
    return s;
}

// Keep only columns that are not a candidate plus a nonzero solution. The
// candidates generate the whole solution monoid, so "difference lies in the
// monoid" is the same as "difference is a solution" and needs no search.
std::vector<IVec> minimize(std::vector<IVec> cols,
                           const std::function<bool(const IVec&)>& is_solution) {
    std::sort(cols.begin(), cols.end());
    cols.erase(std::unique(cols.begin(), cols.end()), cols.end());
    cols.erase(std::remove_if(cols.begin(), cols.end(),
                              [](const IVec& v) { return is_zero(v); }),
               cols.end());

    std::vector<IVec> keep;
    for (std::size_t h = 0; h < cols.size(); ++h) {
        bool decomposable = false;
        for (std::size_t g = 0; g < cols.size() && !decomposable; ++g) {
            if (g == h || !leq_componentwise(cols[g], cols[h])) continue;
            IVec rest(cols[h].size());
            for (std::size_t i = 0; i < rest.size(); ++i) rest[i] = cols[h][i] - cols[g][i];
            if (is_zero(rest)) continue; // duplicate already removed
            if (is_solution(rest)) decomposable = true;
        }
        if (!decomposable) keep.push_back(cols[h]);
    }
    return keep;
}

} // namespace

std::vector<std::vector<Int>> minimal_equality_solutions(const Mat& a,
                                                         unsigned long completion_cap) {
    std::vector<IVec> rows = int_rows(a);
    const std::size_t n = a.cols();

    std::vector<IVec> acols(n, IVec(a.rows()));
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = 0; i < a.rows(); ++i) acols[j][i] = rows[i][j];

    std::vector<IVec> basis;
    std::set<IVec> visited;
    std::vector<std::pair<IVec, IVec>> frontier; // (t, a.t)
    for (std::size_t j = 0; j < n; ++j) {
        IVec e(n, Int(0));
        e[j] = 1;
        IVec v = acols[j];
        visited.insert(e);
        frontier.emplace_back(std::move(e), std::move(v));
    }

    unsigned long explored = n;
    while (!frontier.empty()) {
        std::vector<std::pair<IVec, IVec>> next;
        for (auto& [t, v] : frontier) {
            if (is_zero(v)) {
                bool dominated = false;
                for (const IVec& b : basis)
                    if (leq_componentwise(b, t)) { dominated = true; break; }
                if (!dominated) basis.push_back(t);
                continue;
            }
            for (std::size_t j = 0; j < n; ++j) {
                if (sgn(ivec_dot(v, acols[j])) >= 0) continue; // directed step only
                IVec t2 = t;
                t2[j] += 1;
                if (visited.count(t2)) continue;
                bool dominated = false;
                for (const IVec& b : basis)
                    if (leq_componentwise(b, t2)) { dominated = true; break; }
                if (dominated) continue;
                IVec v2 = v;
                for (std::size_t i = 0; i < v2.size(); ++i) v2[i] += acols[j][i];
                visited.insert(t2);
                next.emplace_back(std::move(t2), std::move(v2));
            }
        }
        explored += next.size();
        if (explored > completion_cap)
            throw resource_limit_error("completion cap exceeded (" +
                                       std::to_string(completion_cap) + " vectors)");
        frontier = std::move(next);
    }
    return minimize(std::move(basis), [&rows](const IVec& v) {
        return is_zero(apply_rows(rows, v));
    });
}

HilbertBasis hilbert_basis(const Mat& m, unsigned long completion_cap) {
    if (!(m.ring() == kZ) || !m.is_integer())
        throw precondition_error("hilbert_basis: system must be integer over Z");
    const std::size_t n = m.cols();

    // normalize rows by their content, drop zero rows, deduplicate
    std::set<IVec> seen;
    std::vector<IVec> rows;
    for (const IVec& raw : int_rows(m)) {
        Int g(0);
        for (const Int& v : raw) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
        if (sgn(g) == 0) continue;
        IVec row(n);
        for (std::size_t j = 0; j < n; ++j)
            mpz_divexact(row[j].get_mpz_t(), raw[j].get_mpz_t(), g.get_mpz_t());
        if (seen.insert(row).second) rows.push_back(std::move(row));
    }

    // a row together with its negation is an equality and needs no slack
    std::vector<IVec> eq_rows, ineq_rows;
    std::set<IVec> used;
    for (const IVec& row : rows) {
        if (used.count(row)) continue;
        IVec neg(n);
        for (std::size_t j = 0; j < n; ++j) neg[j] = -row[j];
        if (seen.count(neg)) {
            used.insert(row);
            used.insert(neg);
            eq_rows.push_back(row);
        } else {
            ineq_rows.push_back(row);
        }
    }

    const std::size_t ri = ineq_rows.size();
    Mat slacked(eq_rows.size() + ri, n + ri, kZ);
    for (std::size_t i = 0; i < ri; ++i) {
        for (std::size_t j = 0; j < n; ++j) slacked.at(i, j) = Rat(ineq_rows[i][j]);
        slacked.at(i, n + i) = -1;
    }
    for (std::size_t i = 0; i < eq_rows.size(); ++i)
        for (std::size_t j = 0; j < n; ++j) slacked.at(ri + i, j) = Rat(eq_rows[i][j]);
    std::vector<IVec> full = minimal_equality_solutions(slacked, completion_cap);

    std::vector<IVec> int_m = int_rows(m);
    std::vector<IVec> projected;
    for (const IVec& t : full)
        projected.emplace_back(t.begin(), t.begin() + static_cast<long>(n));
    projected = minimize(std::move(projected), [&int_m](const IVec& v) {
        for (const Int& w : apply_rows(int_m, v))
            if (sgn(w) < 0) return false;
        return true;
    });

    GenSet gs = genset_canonicalize(GenSet::of(cols_to_mat(n, projected, kZ)));
    return HilbertBasis{gs, std::nullopt};
}

GenSet hilbert_oracle(const Mat& m, long box) {
    if (box < 1) throw precondition_error("hilbert_oracle: box must be >= 1");
    if (!m.is_integer()) throw precondition_error("hilbert_oracle: integer entries required");
    const std::size_t n = m.cols();

    std::vector<std::vector<long>> rows(m.rows(), std::vector<long>(n));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const Int& e = m.at(i, j).get_num();
            if (!e.fits_slong_p())
                throw precondition_error("hilbert_oracle: entry too large for the box scan");
            rows[i][j] = e.get_si();
        }

    auto solves = [&rows](const std::vector<long>& v) {
        for (const auto& row : rows) {
            long acc = 0;
            for (std::size_t j = 0; j < v.size(); ++j) acc += row[j] * v[j];
            if (acc < 0) return false;
        }
        return true;
    };

    std::vector<std::vector<long>> solutions;
    std::vector<long> x(n, 0);
    while (true) {
        bool zero = std::all_of(x.begin(), x.end(), [](long v) { return v == 0; });
        if (!zero && solves(x)) solutions.push_back(x);
        std::size_t k = 0;
        while (k < n && x[k] == box) { x[k] = 0; ++k; }
        if (k == n) break;
        x[k] += 1;
    }

    auto sum_of = [](const std::vector<long>& v) {
        long s = 0;
        for (long w : v) s += w;
        return s;
    };
    std::sort(solutions.begin(), solutions.end(),
              [&](const std::vector<long>& a, const std::vector<long>& b) {
                  long sa = sum_of(a), sb = sum_of(b);
                  return sa != sb ? sa < sb : a < b;
              });

    // s decomposes iff some smaller-sum solution a <= s leaves a solution;
    // one part of any split has sum at most half of s
    std::vector<IVec> minimal;
    std::vector<long> rest(n);
    for (std::size_t si = 0; si < solutions.size(); ++si) {
        const std::vector<long>& s = solutions[si];
        long half = sum_of(s) / 2;
        bool decomposable = false;
        for (const auto& a : solutions) {
            if (sum_of(a) > half) break;
            bool leq = true;
            for (std::size_t i = 0; i < n; ++i)
                if (a[i] > s[i]) { leq = false; break; }
            if (!leq) continue;
            bool nonzero_rest = false;
            for (std::size_t i = 0; i < n; ++i) {
                rest[i] = s[i] - a[i];
                if (rest[i] != 0) nonzero_rest = true;
            }
            if (nonzero_rest && solves(rest)) { decomposable = true; break; }
        }
        if (!decomposable) {
            IVec v(n);
            for (std::size_t i = 0; i < n; ++i) v[i] = s[i];
            minimal.push_back(std::move(v));
        }
    }
    return genset_canonicalize(GenSet::of(cols_to_mat(n, minimal, kZ)));
}

GenSet solve_mixed_z(const MixedSystem& sys, unsigned long completion_cap) {
    const Mat& w = sys.m;
    if (!(w.ring() == kZ)) throw precondition_error("solve_mixed_z: ring must be Z");
    const std::size_t c = w.cols();
    std::vector<bool> signed_col(c, false);
    for (std::size_t j : sys.sign_cols) {
        if (j >= c) throw precondition_error("solve_mixed_z: sign column out of range");
        signed_col[j] = true;
    }
    std::vector<std::size_t> free_cols;
    for (std::size_t j = 0; j < c; ++j)
        if (!signed_col[j]) free_cols.push_back(j);

    // lifted columns: originals, then a negated copy of each free column
    Mat lifted(w.rows(), c + free_cols.size(), kZ);
    for (std::size_t i = 0; i < w.rows(); ++i) {
        for (std::size_t j = 0; j < c; ++j) lifted.at(i, j) = w.at(i, j);
        for (std::size_t k = 0; k < free_cols.size(); ++k)
            lifted.at(i, c + k) = -w.at(i, free_cols[k]);
    }
    HilbertBasis hb = hilbert_basis(lifted, completion_cap);

    // substitution back: x_j = t_j for signed, x_j = t_j - t_{pair(j)} for free
    Mat subst(c, c + free_cols.size(), kZ);
    for (std::size_t j = 0; j < c; ++j) subst.at(j, j) = 1;
    for (std::size_t k = 0; k < free_cols.size(); ++k) subst.at(free_cols[k], c + k) = -1;

    Mat gens = subst * hb.basis.gens();
    bool nonneg = free_cols.empty();
    return genset_canonicalize(GenSet::with_flag(std::move(gens), nonneg));
}

bool cross_check_box(const Mat& m, HilbertBasis& hb, long box) {
    GenSet oracle = hilbert_oracle(m, box);
    const Mat& b = hb.basis.gens();
    std::set<std::vector<Rat>> in_box_basis;
    for (std::size_t j = 0; j < b.cols(); ++j) {
        std::vector<Rat> col = b.col(j);
        bool inside = std::all_of(col.begin(), col.end(),
                                  [box](const Rat& v) { return v <= box; });
        if (inside) in_box_basis.insert(col);
    }
    std::set<std::vector<Rat>> oracle_set;
    for (std::size_t j = 0; j < oracle.gens().cols(); ++j)
        oracle_set.insert(oracle.gens().col(j));
    if (in_box_basis != oracle_set) return false;
    hb.box_certified = box;
    return true;
}

} // namespace ordcalc::hilbert
