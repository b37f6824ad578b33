// SPDX-License-Identifier: Apache-2.0
#include "doctest.h"
#include "tancode/groebner.hpp"
#include "test_util.hpp"

using namespace tancode;
using testutil::random_poly;

namespace {

// expansion identity G_k = sum_j C_kj f_j, checked exactly
void check_cofactors(const CofactorBasis& cb, const std::vector<MultiPoly>& F) {
    for (size_t k = 0; k < cb.basis.size(); ++k) {
        MultiPoly acc(F.front().field(), F.front().nvars());
        for (size_t j = 0; j < F.size(); ++j) acc = acc + cb.cofactors[k][j] * F[j];
        CHECK(acc == cb.basis[k]);
    }
}

void check_buchberger_criterion(const CofactorBasis& cb) {
    for (size_t i = 0; i < cb.basis.size(); ++i)
        for (size_t j = i + 1; j < cb.basis.size(); ++j) {
            MultiPoly s = s_polynomial(cb.basis[i], cb.basis[j], cb.order);
            if (s.is_zero()) continue;
            CHECK(divide(s, cb.basis, cb.order).remainder.is_zero());
        }
}

}  // namespace

TEST_CASE("multivariate division") {
    Field f2(2, 1);
    MonomialOrder lex = MonomialOrder::lex(2);

    auto r1 = divide(parse_poly(f2, 2, "x1^2*x2"), {parse_poly(f2, 2, "x1")}, lex);
    CHECK(r1.quotients[0] == parse_poly(f2, 2, "x1*x2"));
    CHECK(r1.remainder.is_zero());

    auto r2 = divide(parse_poly(f2, 2, "x1+x2"), {parse_poly(f2, 2, "x1")}, lex);
    CHECK(r2.remainder == parse_poly(f2, 2, "x2"));

    // division invariant f = sum q_i d_i + r on random inputs
    Field f3(3, 1);
    std::mt19937_64 rng(71);
    MonomialOrder lex3 = MonomialOrder::lex(3);
    for (int t = 0; t < 25; ++t) {
        MultiPoly f = random_poly(f3, 3, 4, 5, rng);
        MultiPoly d1 = random_poly(f3, 3, 2, 3, rng);
        MultiPoly d2 = random_poly(f3, 3, 2, 3, rng);
        if (d1.is_zero() || d2.is_zero()) continue;
        auto dr = divide(f, {d1, d2}, lex3);
        CHECK(dr.quotients[0] * d1 + dr.quotients[1] * d2 + dr.remainder == f);
    }
}

TEST_CASE("s-polynomials") {
    Field f3(3, 1);
    MonomialOrder lex = MonomialOrder::lex(2);
    MultiPoly f = parse_poly(f3, 2, "x1^2 + x2");
    CHECK(s_polynomial(f, f, lex).is_zero());
    CHECK(s_polynomial(parse_poly(f3, 2, "x1^2"), parse_poly(f3, 2, "x1*x2"), lex).is_zero());
    // S(x1 - x2^2, -x1 + x2^3) = x2^3 - x2^2, by hand from the defining formula
    MultiPoly s = s_polynomial(parse_poly(f3, 2, "x1 - x2^2"), parse_poly(f3, 2, "-x1 + x2^3"), lex);
    CHECK(s == parse_poly(f3, 2, "x2^3 - x2^2"));
}

TEST_CASE("buchberger: single polynomial") {
    Field f2(2, 1);
    MultiPoly f = parse_poly(f2, 2, "x1*x2 + x2");
    auto cb = buchberger_cofactors({f}, MonomialOrder::lex(2));
    REQUIRE(cb.basis.size() == 1);
    CHECK(cb.basis[0] == f);
    CHECK(cb.cofactors[0][0] == MultiPoly::constant(f2, 2, f2.one()));
}

TEST_CASE("buchberger: twisted cubic") {
    Field f8(2, 3);
    // x2 - x1^2, x3 - x1^3 under lex x1 > x2 > x3
    std::vector<MultiPoly> F = {parse_poly(f8, 3, "x2 - x1^2"), parse_poly(f8, 3, "x3 - x1^3")};
    auto cb = buchberger_cofactors(F, MonomialOrder::lex(3));
    check_cofactors(cb, F);
    check_buchberger_criterion(cb);

    MultiPoly elim = parse_poly(f8, 3, "x2^3 - x3^2");
    bool found = false;
    for (const auto& g : cb.basis)
        if (g == elim) found = true;
    CHECK(found);
    // oracle: it vanishes at (t, t^2, t^3) for every t in GF(8)
    for (const auto& t : f8.subfield(3)) CHECK(elim.evaluate({t, t * t, t * t * t}).is_zero());
    CHECK(divide(elim, cb.basis, cb.order).remainder.is_zero());

    auto er = elimination_basis(F, {0});
    REQUIRE(er.eliminants.size() == 1);
    CHECK(er.eliminants[0] == elim);
    // eliminant cofactor rows expand correctly too
    MultiPoly acc(f8, 3);
    for (size_t j = 0; j < F.size(); ++j) acc = acc + er.cofactors[0][j] * F[j];
    CHECK(acc == er.eliminants[0]);
}

TEST_CASE("elimination: dense images have empty eliminant sets") {
    Field f2(2, 1);
    CHECK(elimination_basis({parse_poly(f2, 2, "x2 - x1^2")}, {0}).eliminants.empty());
    CHECK(elimination_basis({parse_poly(f2, 2, "x1 + x2")}, {0}).eliminants.empty());
}

TEST_CASE("ideal membership through division by a Groebner basis") {
    Field f3(3, 1);
    std::vector<MultiPoly> F = {parse_poly(f3, 3, "x1^2 - x2"), parse_poly(f3, 3, "x1*x3 + x2^2")};
    auto cb = buchberger_cofactors(F, MonomialOrder::lex(3));
    check_cofactors(cb, F);
    check_buchberger_criterion(cb);

    std::mt19937_64 rng(83);
    for (int t = 0; t < 20; ++t) {
        MultiPoly member(f3, 3);
        for (const auto& f : F) member = member + random_poly(f3, 3, 2, 3, rng) * f;
        if (member.is_zero()) continue;
        CHECK(divide(member, cb.basis, cb.order).remainder.is_zero());
    }
    CHECK_FALSE(divide(parse_poly(f3, 3, "x3"), cb.basis, cb.order).remainder.is_zero());

    // order-independence of membership: a different variable permutation
    auto cb2 = buchberger_cofactors(F, MonomialOrder::eliminating(3, {2, 1}));
    for (int t = 0; t < 20; ++t) {
        MultiPoly member(f3, 3);
        for (const auto& f : F) member = member + random_poly(f3, 3, 2, 3, rng) * f;
        if (member.is_zero()) continue;
        CHECK(divide(member, cb2.basis, cb2.order).remainder.is_zero());
    }
}

TEST_CASE("puncturing finiteness criterion") {
    Field f2(2, 1);
    CHECK(puncturing_is_finite({parse_poly(f2, 2, "x2 - x1^2")}, {0}));
    CHECK_FALSE(puncturing_is_finite({parse_poly(f2, 2, "x1*x2 - 1")}, {0}));
    CHECK_FALSE(puncturing_is_finite({parse_poly(f2, 3, "x3")}, {0}));
}

TEST_CASE("separability heuristic") {
    Field f2(2, 1);
    // x1^2 - x2: d/dx1 = 0 in char 2 -> inseparable
    CHECK_FALSE(puncturing_separable_heuristic({parse_poly(f2, 2, "x2 - x1^2")}, {0}));
    Field f3(3, 1);
    CHECK(puncturing_separable_heuristic({parse_poly(f3, 2, "x2 - x1^2")}, {0}));
}

TEST_CASE("basis size budget is a distinct failure") {
    Field f3(3, 1);
    std::vector<MultiPoly> F = {parse_poly(f3, 3, "x1^2*x3 - x2"), parse_poly(f3, 3, "x1*x2^2 + x3"),
                                parse_poly(f3, 3, "x2*x3 + x1")};
    GroebnerBudget tiny{.max_basis = 3};
    CHECK_THROWS_AS(buchberger_cofactors(F, MonomialOrder::lex(3), tiny), budget_error);
}
