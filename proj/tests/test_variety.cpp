// SPDX-License-Identifier: Apache-2.0
#include <algorithm>

#include "doctest.h"
#include "tancode/construct.hpp"
#include "tancode/variety.hpp"
#include "test_util.hpp"

using namespace tancode;
using testutil::random_element;
using testutil::random_poly;

namespace {

AffineVariety circle(const Field& f) {
    return AffineVariety(f, 1, 2, {parse_poly(f, 2, "x1^2 + x2^2 - 1")}, 1);
}

// random variety through a random GF(q)-rational point
AffineVariety random_variety_with_point(const Field& f, size_t n, size_t m, std::mt19937_64& rng,
                                        std::vector<Element>& point_out) {
    while (true) {
        std::vector<Element> a;
        for (size_t i = 0; i < n; ++i) a.push_back(random_element(f, rng));
        std::vector<MultiPoly> gens;
        bool ok = true;
        for (size_t j = 0; j < m; ++j) {
            MultiPoly g = random_poly(f, n, 3, 4, rng);
            g = g - MultiPoly::constant(f, n, g.evaluate(a));
            if (g.is_zero()) ok = false;
            gens.push_back(g);
        }
        if (!ok) continue;
        point_out = a;
        return AffineVariety(f, f.degree(), n, std::move(gens));
    }
}

}  // namespace

TEST_CASE("variety construction validates the base field") {
    Field f4(2, 2);
    // coefficient g lies outside GF(2)
    MultiPoly bad = MultiPoly::term(f4, 2, Monomial::var(0), f4.generator());
    CHECK_THROWS_AS(AffineVariety(f4, 1, 2, {bad}), domain_error);
    CHECK_NOTHROW(AffineVariety(f4, 2, 2, {bad}));
}

TEST_CASE("rational points") {
    Field f3(3, 1);
    auto X = circle(f3);
    auto pts = X.rational_points(1);
    CHECK(pts.size() == 4);  // (+-1, 0), (0, +-1) by scanning all 9 pairs
    for (const auto& a : pts) CHECK(X.contains(a));

    Field f2(2, 1);
    AffineVariety line(f2, 1, 1, {parse_poly(f2, 1, "x1")});
    auto zpts = line.rational_points(1);
    REQUIRE(zpts.size() == 1);
    CHECK(zpts[0][0].is_zero());
}

TEST_CASE("tangent code at a point") {
    Field f3(3, 1);
    auto X = circle(f3);
    std::vector<Element> a = {f3.one(), f3.zero()};
    TangentCode tc = tangent_code(X, a);
    CHECK(tc.delta == 1);
    CHECK(tc.code.dim() == 1);
    CHECK(tc.code.contains({f3.zero(), f3.one()}));       // {(0,c)}
    CHECK_FALSE(tc.code.contains({f3.one(), f3.zero()}));

    // off-variety point rejected
    CHECK_THROWS_AS(tangent_code(X, {f3.one(), f3.one()}), domain_error);

    // coordinate subspace V(x3): tangent = GF^2 x 0 everywhere
    AffineVariety sub(f3, 1, 3, {parse_poly(f3, 3, "x3")});
    for (const auto& a3 : sub.rational_points(1)) {
        TangentCode t3 = tangent_code(sub, a3);
        CHECK(t3.code.dim() == 2);
        CHECK(t3.code.contains({f3.one(), f3.zero(), f3.zero()}));
        CHECK(t3.code.contains({f3.zero(), f3.one(), f3.zero()}));
        CHECK_FALSE(t3.code.contains({f3.zero(), f3.zero(), f3.one()}));
    }
}

TEST_CASE("gradient code is the dual of the tangent code") {
    Field f3(3, 1);
    std::mt19937_64 rng(139);
    for (int t = 0; t < 50; ++t) {
        std::vector<Element> a;
        auto X = random_variety_with_point(f3, 3 + t % 2, 1 + t % 2, rng, a);
        TangentCode tc = tangent_code(X, a);
        GradientCode gc = gradient_code(X, a);
        CHECK(tc.code.dim() + gc.code.dim() == X.nvars());
        CHECK(gc.code.equal_up_to_extension(tc.code.dual()));

        // gradients of random ideal combinations land in the Jacobian row span
        Matrix J = X.jacobian_at(a);
        for (int u = 0; u < 20; ++u) {
            MultiPoly comb(f3, X.nvars());
            for (const auto& f : X.generators()) comb = comb + random_poly(f3, X.nvars(), 2, 3, rng) * f;
            std::vector<Element> grad;
            for (size_t j = 0; j < X.nvars(); ++j) grad.push_back(comb.partial_derivative(j).evaluate(a));
            CHECK(J.row_space_contains(grad));
        }
    }

    // linear variety V(Hx): gradient code = row space of H everywhere
    Field f2(2, 1);
    AffineVariety lin(f2, 1, 3, {parse_poly(f2, 3, "x1 + x2"), parse_poly(f2, 3, "x2 + x3")});
    for (const auto& a : lin.rational_points(1)) {
        GradientCode gc = gradient_code(lin, a);
        CHECK(Matrix::same_row_space(gc.code.generator(), lin.jacobian_at(a)));
    }
}

TEST_CASE("minimum-distance locus equations agree with brute force") {
    Field f3(3, 1);
    auto X = circle(f3);
    for (const auto& a : X.rational_points(1)) {
        size_t d_true = tangent_code(X, a).code.min_distance();
        for (size_t d = 1; d <= 2; ++d) CHECK(in_min_dist_locus(X, d, a) == (d_true <= d));
        // Singleton: d = n-k+1 makes every point a member
        CHECK(in_min_dist_locus(X, 2, a));
    }
}

TEST_CASE("rank and constant-code loci") {
    Field f3(3, 1);
    auto X = circle(f3);
    for (const auto& a : X.rational_points(1)) {
        size_t rk = X.jacobian_at(a).rank();
        for (size_t r = 0; r <= 2; ++r) CHECK(in_rank_locus(X, r, a) == (rk <= r));
        TangentCode tc = tangent_code(X, a);
        LinearCode asq = LinearCode::from_parity(f3, 1, 2, tc.code.parity());
        CHECK(in_constant_code_locus(X, asq, a));
    }
    // a code the circle's tangent spaces never equal
    Matrix h(f3, 1, 2);
    h.at(0, 0) = f3.one();
    h.at(0, 1) = f3.one();
    LinearCode other = LinearCode::from_parity(f3, 1, 2, h);
    size_t hits = 0;
    for (const auto& a : X.rational_points(1))
        if (in_constant_code_locus(X, other, a)) ++hits;
    CHECK(hits == 0);
}

TEST_CASE("near-MDS locus equations agree with the direct test") {
    // circle: k = 1, so near-MDS means d(T_a) = 1 with dual distance 1
    Field f9(3, 2);
    AffineVariety X(f9, 1, 2, {parse_poly(f9, 2, "x1^2 + x2^2 - 1")}, 1);
    for (uint32_t s : {1u, 2u}) {
        for (const auto& a : X.rational_points(s)) {
            TangentCode tc = tangent_code(X, a);
            bool direct = tc.code.dim() >= 1 && tc.code.dim() <= 1 && tc.code.is_near_mds();
            CHECK(in_nmds_locus(X, 1, a) == direct);
        }
    }

    // constant-tangent variety from a near-MDS code: every point qualifies
    Field f2(2, 1);
    Matrix h(f2, 2, 4);
    h.at(0, 0) = f2.one();
    h.at(0, 1) = f2.one();
    h.at(1, 2) = f2.one();
    h.at(1, 3) = f2.one();
    LinearCode nmds = LinearCode::from_parity(f2, 1, 4, h);
    REQUIRE(nmds.is_near_mds());
    ConstantTangentVariety ctv = constant_tangent_variety(nmds, std::nullopt, 73);
    for (const auto& a : ctv.X.rational_points(1)) CHECK(in_nmds_locus(ctv.X, 2, a));
}

TEST_CASE("smoothness and etale tests") {
    Field f3(3, 1);
    AffineVariety cusp(f3, 1, 1, {parse_poly(f3, 1, "x1^2")});
    CHECK_FALSE(is_smooth(cusp, {f3.zero()}, 0));

    auto X = circle(f3);
    std::vector<Element> a = {f3.one(), f3.zero()};
    CHECK(is_smooth(X, a, 1));
    CHECK(puncturing_etale_at(X, {0}, a));
    CHECK_FALSE(puncturing_etale_at(X, {1}, a));

    // d(T_a) > |gamma| forces etale
    std::mt19937_64 rng(149);
    for (int t = 0; t < 30; ++t) {
        std::vector<Element> pt;
        auto Y = random_variety_with_point(f3, 4, 2, rng, pt);
        TangentCode tc = tangent_code(Y, pt);
        if (tc.code.dim() == 0) continue;
        size_t d = tc.code.min_distance();
        for (size_t g = 0; g < 4; ++g)
            if (d > 1) CHECK(puncturing_etale_at(Y, {g}, pt));
    }

    CHECK(estimate_dimension(circle(f3), 1) == 1);
}

TEST_CASE("variety operations") {
    Field f3(3, 1);
    auto X = circle(f3);

    // extend: tangent identity at smooth points
    AffineVariety ext = extend_variety(X);
    for (const auto& a : X.rational_points(1)) {
        std::vector<Element> ea = a;
        Element s = f3.zero();
        for (const auto& x : a) s = s + x;
        ea.push_back(-s);
        CHECK(ext.contains(ea));
        LinearCode lhs = tangent_code(X, a).code.extend();
        LinearCode rhs = tangent_code(ext, ea).code;
        CHECK(lhs.equal_up_to_extension(rhs));
    }

    // product: direct sums of tangent spaces
    AffineVariety prod = product_variety(X, X);
    auto pts = X.rational_points(1);
    for (const auto& a : pts)
        for (const auto& b : pts) {
            std::vector<Element> ab = a;
            ab.insert(ab.end(), b.begin(), b.end());
            LinearCode lhs = tangent_code(X, a).code.direct_sum(tangent_code(X, b).code);
            CHECK(lhs.equal_up_to_extension(tangent_code(prod, ab).code));
        }

    // fibered product along the variety's own equation: (u | u+v) with C2 = T_a(Y_a)
    auto g = X.generators();
    AffineVariety fib = fibered_product_variety(X, g);
    for (const auto& a : pts) {
        std::vector<Element> aa = a;
        aa.insert(aa.end(), a.begin(), a.end());
        LinearCode c1 = tangent_code(X, a).code;
        // Y_a = V(g - g(a)) = the circle again
        LinearCode lhs = c1.u_u_plus_v(c1);
        CHECK(lhs.equal_up_to_extension(tangent_code(fib, aa).code));
    }

    // puncture: closure through elimination (twisted cubic drops to a plane curve)
    Field f2(2, 1);
    AffineVariety cubic(f2, 1, 3,
                        {parse_poly(f2, 3, "x2 - x1^2"), parse_poly(f2, 3, "x3 - x1^3")});
    AffineVariety pc = puncture_variety(cubic, {0});
    REQUIRE(pc.nvars() == 2);
    REQUIRE(pc.ngens() == 1);
    CHECK(pc.generators()[0] == parse_poly(f2, 2, "x1^3 - x2^2"));

    // shorten: substitute zero and drop coordinates
    AffineVariety sh = shorten_variety(cubic, {0});
    CHECK(sh.nvars() == 2);
    for (const auto& a : sh.rational_points(1)) CHECK(sh.contains(a));
}

TEST_CASE("shortening identity at qualifying points") {
    // linear varieties: T_a(X)_gamma = T_{pi(a)}(shorten(X)) wherever the
    // puncturing is etale and a smooth minor avoids gamma
    Field f3(3, 1);
    std::mt19937_64 rng(151);
    size_t tested = 0;
    for (int t = 0; t < 60 && tested < 20; ++t) {
        const size_t n = 4;
        Matrix H(f3, 2, n);
        for (size_t i = 0; i < 2; ++i)
            for (size_t j = 0; j < n; ++j) H.at(i, j) = random_element(f3, rng);
        if (H.rank() != 2) continue;
        std::vector<MultiPoly> gens;
        for (size_t i = 0; i < 2; ++i) {
            MultiPoly f(f3, n);
            for (size_t j = 0; j < n; ++j)
                f = f + MultiPoly::variable(f3, n, j) * H.at(i, j);
            if (f.is_zero()) continue;
            gens.push_back(f);
        }
        if (gens.size() != 2) continue;
        AffineVariety X(f3, 1, n, gens, n - 2);
        std::vector<size_t> gamma = {0};
        std::vector<Element> a(n, f3.zero());  // the origin lies on X and on V(x_gamma)
        if (!puncturing_etale_at(X, gamma, a)) continue;
        std::vector<size_t> rest = {1, 2, 3};
        if (H.select_columns(rest).rank() != 2) continue;  // smooth minor off gamma
        ++tested;
        LinearCode lhs = tangent_code(X, a).code.shorten(gamma);
        AffineVariety Xs = shorten_variety(X, gamma);
        std::vector<Element> pa(a.begin() + 1, a.end());
        LinearCode rhs = tangent_code(Xs, pa).code;
        CHECK(lhs.equal_up_to_extension(rhs));
    }
    CHECK(tested >= 10);
}

TEST_CASE("the original coefficient tuple reproduces the variety") {
    // F(alpha, x) = sum_{nu in S(f)} alpha_nu (x^nu - a^nu) equals f whenever
    // f(a) = 0: the deformation family passes through the original equations
    Field f5(5, 1);
    std::mt19937_64 rng(163);
    for (int t = 0; t < 20; ++t) {
        MultiPoly f = random_poly(f5, 3, 3, 5, rng);
        auto a = testutil::random_point(f5, 3, rng);
        f = f - MultiPoly::constant(f5, 3, f.evaluate(a));
        MultiPoly F(f5, 3);
        for (const auto& [m, c] : f.terms()) {
            if (m.is_one()) continue;
            Element at_a = MultiPoly::term(f5, 3, m, f5.one()).evaluate(a);
            F = F + MultiPoly::term(f5, 3, m, c) - MultiPoly::constant(f5, 3, c * at_a);
        }
        CHECK(F == f);
    }
}

TEST_CASE("deformation sampling keeps the point and usually the distance") {
    Field f(5, 2);  // ambient GF(25)
    AffineVariety X(f, 1, 2, {parse_poly(f, 2, "x1^2 + x2^2 - 1")}, 1);
    // pick a GF(25)-point with both coordinates nonzero by enumeration
    std::vector<Element> a;
    for (const auto& p : X.rational_points(2)) {
        if (!p[0].is_zero() && !p[1].is_zero()) {
            a = p;
            break;
        }
    }
    REQUIRE(!a.empty());
    REQUIRE(tangent_code(X, a).code.min_distance() == 2);

    DeformationStats st = deformation_sample(X, a, 1, 2, 2, 50, 424242);
    CHECK(st.samples == 50);
    CHECK(st.point_on_deformed == 50);  // a in X_gamma by construction
    CHECK(st.full_rank >= 45);
    CHECK(st.min_dist_kept >= 40);
}
