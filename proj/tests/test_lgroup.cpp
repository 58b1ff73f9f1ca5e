#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ordcalc/errors.hpp"
#include "ordcalc/lgroup.hpp"
#include "test_util.hpp"

#include <algorithm>

using namespace ordcalc;
using namespace ordcalc::lgroup;
using namespace ordcalc::testutil;

namespace {
const RingSpec Q = RingSpec::rationals();

LatticeTerm L(std::initializer_list<long> cs) {
    return LatticeTerm::lin(std::vector<Int>(cs.begin(), cs.end()));
}
LatticeTerm x2() { return L({1, 0}); }
LatticeTerm y2() { return L({0, 1}); }

std::vector<Rat> random_point(Rng& rng, std::size_t n) {
    std::vector<Rat> p(n);
    for (auto& v : p) v = rng.rational(-6, 6, 4);
    return p;
}

// nonneg rational combination of the cone's generators
std::vector<Rat> random_cone_point(Rng& rng, const cones::ConeRep& c) {
    Mat gens = cones::generators(c);
    std::vector<Rat> p(c.dim, Rat(0));
    for (std::size_t j = 0; j < gens.cols(); ++j) {
        Rat w = rng.rational(0, 4, 3);
        for (std::size_t i = 0; i < c.dim; ++i) p[i] += w * gens.at(i, j);
    }
    return p;
}
}

TEST_CASE("term_to_diff_of_meets structural examples") {
    DiffOfMeets single = term_to_diff_of_meets(x2());
    CHECK(single.pos.size() == 1);
    CHECK(single.pos[0].coeffs == std::vector<Int>{1, 0});
    CHECK(single.neg.size() == 1);
    CHECK(single.neg[0].coeffs == std::vector<Int>{0, 0});

    DiffOfMeets meet = term_to_diff_of_meets(LatticeTerm::meet(x2(), y2()));
    CHECK(meet.pos.size() == 2);
    CHECK(std::count(meet.pos.begin(), meet.pos.end(), LinFunc{{1, 0}}) == 1);
    CHECK(std::count(meet.pos.begin(), meet.pos.end(), LinFunc{{0, 1}}) == 1);
    CHECK(meet.neg.size() == 1);
}

TEST_CASE("term normalization is extensionally correct") {
    Rng rng(121);
    std::vector<LatticeTerm> terms;
    terms.push_back(LatticeTerm::join(x2(), y2()));
    terms.push_back(LatticeTerm::sub(LatticeTerm::meet(x2(), y2()),
                                     LatticeTerm::meet(x2(), L({0, 2}))));
    terms.push_back(LatticeTerm::abs(LatticeTerm::sub(x2(), y2())));
    terms.push_back(LatticeTerm::meet(LatticeTerm::join(x2(), LatticeTerm::neg(y2())),
                                      LatticeTerm::add(x2(), y2())));
    for (const LatticeTerm& t : terms) {
        DiffOfMeets d = term_to_diff_of_meets(t);
        for (int k = 0; k < 100; ++k) {
            std::vector<Rat> p = random_point(rng, 2);
            CHECK(t.eval(p) == eval(d, p));
        }
    }
}

TEST_CASE("term normalization respects the node cap") {
    LatticeTerm t = x2();
    for (int i = 0; i < 6; ++i) t = LatticeTerm::join(t, LatticeTerm::meet(x2(), y2()));
    CHECK_THROWS_AS(term_to_diff_of_meets(t, 4), resource_limit_error);
}

TEST_CASE("decompose_pl worked examples") {
    cones::ConeRep whole = cones::from_hrep(Mat(0, 2, Q));

    DiffOfMeets meet = term_to_diff_of_meets(LatticeTerm::meet(x2(), y2()));
    PLFunc pl = decompose_pl(meet, whole);
    CHECK(pl.pieces.size() == 2); // k! * l! = 2! * 1!
    for (const PLPiece& p : pl.pieces) {
        bool is_x = p.func.coeffs == std::vector<Int>{1, 0};
        bool is_y = p.func.coeffs == std::vector<Int>{0, 1};
        CHECK((is_x || is_y));
    }

    DiffOfMeets one = term_to_diff_of_meets(x2());
    PLFunc single = decompose_pl(one, whole);
    CHECK(single.pieces.size() == 1);
    CHECK(cones::equal(single.pieces[0].cone, cones::hrep_to_vrep(whole)));

    DiffOfMeets two = term_to_diff_of_meets(
        LatticeTerm::sub(LatticeTerm::meet(x2(), y2()),
                         LatticeTerm::meet(x2(), L({0, 2}))));
    PLFunc pl2 = decompose_pl(two, whole);
    CHECK(pl2.pieces.size() <= 4); // 2! * 2!
}

TEST_CASE("decomposition pieces cover and agree with the term") {
    Rng rng(232);
    std::vector<LatticeTerm> terms;
    terms.push_back(LatticeTerm::meet(x2(), y2()));
    terms.push_back(LatticeTerm::join(x2(), y2()));
    terms.push_back(LatticeTerm::sub(LatticeTerm::meet(x2(), y2()),
                                     LatticeTerm::meet(x2(), L({0, 2}))));
    cones::ConeRep orthant = cones::from_hrep(int_mat({{1, 0}, {0, 1}}, Q));
    for (const LatticeTerm& t : terms) {
        DiffOfMeets d = term_to_diff_of_meets(t);
        std::size_t fact = 1;
        for (std::size_t i = 2; i <= d.pos.size(); ++i) fact *= i;
        for (std::size_t i = 2; i <= d.neg.size(); ++i) fact *= i;
        for (const cones::ConeRep& k : {cones::from_hrep(Mat(0, 2, Q)), orthant}) {
            PLFunc pl = decompose_pl(d, k);
            CHECK(pl.pieces.size() <= fact);
            cones::ConeRep kk = cones::hrep_to_vrep(k);
            for (int s = 0; s < 100; ++s) {
                std::vector<Rat> p = random_cone_point(rng, kk);
                CHECK(eval(pl, p) == t.eval(p)); // also proves coverage
            }
        }
    }
}

TEST_CASE("nonneg_region worked examples") {
    // x ^ y: the positive orthant
    cones::PolyCone orthant_region = nonneg_region(LatticeTerm::meet(x2(), y2()));
    cones::ConeRep orthant = cones::hrep_to_vrep(cones::from_hrep(int_mat({{1, 0}, {0, 1}}, Q)));
    for (const cones::ConeRep& piece : orthant_region.pieces) {
        Mat g = cones::generators(piece);
        for (std::size_t j = 0; j < g.cols(); ++j)
            CHECK(cones::contains_point(orthant, g.col(j)));
    }
    Mat og = cones::generators(orthant);
    for (std::size_t j = 0; j < og.cols(); ++j)
        CHECK(cones::contains_point(orthant_region, og.col(j)));

    // x v y: union of two half-planes
    cones::PolyCone join_region = nonneg_region(LatticeTerm::join(x2(), y2()));
    CHECK(cones::contains_point(join_region, rat_vec({1, -5})));
    CHECK(cones::contains_point(join_region, rat_vec({-5, 1})));
    CHECK(!cones::contains_point(join_region, rat_vec({-1, -1})));

    // -|x - y|: the diagonal line
    cones::PolyCone diag = nonneg_region(
        LatticeTerm::neg(LatticeTerm::abs(LatticeTerm::sub(x2(), y2()))));
    CHECK(cones::contains_point(diag, rat_vec({3, 3})));
    CHECK(cones::contains_point(diag, rat_vec({-2, -2})));
    CHECK(!cones::contains_point(diag, rat_vec({1, 0})));
}

TEST_CASE("nonneg_region matches evaluation on random points") {
    Rng rng(343);
    std::vector<LatticeTerm> terms;
    terms.push_back(LatticeTerm::join(x2(), y2()));
    terms.push_back(LatticeTerm::meet(LatticeTerm::sub(x2(), y2()),
                                      LatticeTerm::add(x2(), y2())));
    terms.push_back(LatticeTerm::neg(LatticeTerm::abs(LatticeTerm::sub(x2(), y2()))));
    for (const LatticeTerm& t : terms) {
        cones::PolyCone region = nonneg_region(t);
        for (int s = 0; s < 100; ++s) {
            std::vector<Rat> p = random_point(rng, 2);
            CHECK(cones::contains_point(region, p) == (sgn(t.eval(p)) >= 0));
        }
    }
}

TEST_CASE("presentation_cone worked examples") {
    LPresentation free2 = make_presentation(2, {});
    CHECK(cones::contains_point(free2.k_cone, rat_vec({7, -9})));

    LPresentation diag = make_presentation(2, {LatticeTerm::sub(x2(), y2())});
    CHECK(cones::contains_point(diag.k_cone, rat_vec({4, 4})));
    CHECK(cones::contains_point(diag.k_cone, rat_vec({-1, -1})));
    CHECK(!cones::contains_point(diag.k_cone, rat_vec({1, 2})));

    LPresentation half = make_presentation(1, {LatticeTerm::meet(
        L({1}), L({0}))});
    CHECK(cones::contains_point(half.k_cone, rat_vec({5})));
    CHECK(!cones::contains_point(half.k_cone, rat_vec({-1})));
}

TEST_CASE("pl_equal worked examples") {
    LPresentation diag = make_presentation(2, {LatticeTerm::sub(x2(), y2())});
    CHECK(pl_equal(diag, x2(), x2()));
    CHECK(pl_equal(diag, x2(), y2())); // equal on the diagonal
    CHECK(pl_equal(diag, LatticeTerm::meet(x2(), y2()), x2()));

    LPresentation free2 = make_presentation(2, {});
    CHECK(pl_equal(free2, x2(), x2()));
    CHECK(!pl_equal(free2, x2(), y2()));
}

TEST_CASE("lgroup_solve worked examples") {
    // K = {x >= 0} in dimension 1, fs = (x, -x): lambda_1 >= lambda_2
    LPresentation half = make_presentation(1, {LatticeTerm::meet(
        L({1}), L({0}))});
    hilbert::HilbertBasis hb = lgroup_solve(half, {L({1}),
                                                   L({-1})});
    CHECK(hb.basis.gens() == int_mat({{1, 1}, {0, 1}}, RingSpec::integers()));

    // one term, nonnegative on K: no constraint beyond lambda >= 0
    hilbert::HilbertBasis free1 = lgroup_solve(half, {L({1})});
    CHECK(free1.basis.gens() == int_mat({{1}}, RingSpec::integers()));

    // K = Q^2, fs = (x, -x): opposite rays force lambda_1 = lambda_2
    LPresentation free2 = make_presentation(2, {});
    hilbert::HilbertBasis eq = lgroup_solve(free2, {x2(), LatticeTerm::neg(x2())});
    CHECK(eq.basis.gens() == int_mat({{1}, {1}}, RingSpec::integers()));
}

TEST_CASE("pl_equal on a half-line presentation") {
    // K = {x >= 0}: join with zero is the identity there, meet is zero
    LPresentation half = make_presentation(1, {LatticeTerm::meet(L({1}), L({0}))});
    CHECK(pl_equal(half, LatticeTerm::join(L({1}), L({0})), L({1})));
    CHECK(pl_equal(half, LatticeTerm::meet(L({1}), L({0})), L({0})));
    CHECK(!pl_equal(half, L({1}), L({0})));
}

TEST_CASE("lgroup_solve on a line presentation") {
    // K = {x = y}: the lineality direction constrains lambda from both sides
    LPresentation diag = make_presentation(2, {LatticeTerm::sub(x2(), y2())});
    hilbert::HilbertBasis hb = lgroup_solve(diag, {x2(), LatticeTerm::neg(y2())});
    CHECK(hb.basis.gens() == int_mat({{1}, {1}}, RingSpec::integers()));
}

TEST_CASE("lgroup_solve basis is sound and box-complete") {
    // K = {x >= 0}, fs = (x, -x): S = {l1 >= l2}
    LPresentation half = make_presentation(1, {LatticeTerm::meet(
        L({1}), L({0}))});
    hilbert::HilbertBasis hb = lgroup_solve(half, {L({1}),
                                                   L({-1})});
    for_each_box(2, 0, 6, [&](const std::vector<Rat>& l) {
        bool solves = l[0] >= l[1];
        if (solves) CHECK(genset_membership(l, hb.basis));
    });
}

TEST_CASE("irrational demo reproduces the derived bases") {
    auto rows = irrational_demo({{1, 1}, {3, 2}, {7, 5}, {17, 12}});
    const RingSpec Z = RingSpec::integers();
    CHECK(rows[0].basis.gens() == int_mat({{1, 1}, {0, 1}}, Z));
    CHECK(rows[1].basis.gens() == int_mat({{1, 2, 3}, {0, 1, 2}}, Z));
    CHECK(rows[2].basis.gens() == int_mat({{1, 2, 3, 7}, {0, 1, 2, 5}}, Z));
    CHECK(rows[3].basis.count() >= rows[2].basis.count());

    CHECK_THROWS_AS(irrational_demo({{2, 4}}), precondition_error);
    CHECK_THROWS_AS(irrational_demo({{-1, 1}}), precondition_error);
}

TEST_CASE("sqrt2 convergents") {
    auto cs = sqrt2_convergents(4);
    REQUIRE(cs.size() == 4);
    CHECK(cs[0] == std::pair<long, long>{1, 1});
    CHECK(cs[1] == std::pair<long, long>{3, 2});
    CHECK(cs[2] == std::pair<long, long>{7, 5});
    CHECK(cs[3] == std::pair<long, long>{17, 12});
    CHECK_THROWS_AS(sqrt2_convergents(0), precondition_error);
    CHECK_THROWS_AS(sqrt2_convergents(9), precondition_error);
}
