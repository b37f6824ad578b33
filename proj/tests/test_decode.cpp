// SPDX-License-Identifier: Apache-2.0
#include <algorithm>

#include "doctest.h"
#include "tancode/construct.hpp"
#include "tancode/decode.hpp"
#include "tancode/util.hpp"
#include "test_util.hpp"

using namespace tancode;

namespace {

// brute force: does w have an error supported inside idx?
bool brute_error_supported(const LinearCode& tangent, const std::vector<Element>& w,
                           const std::vector<size_t>& idx, const Field& f, uint32_t sub) {
    auto scalars = f.subfield(sub);
    bool found = false;
    for_each_tuple(idx.size(), scalars.size(), [&](const std::vector<uint64_t>& t) {
        if (found) return;
        std::vector<Element> we = w;
        for (size_t i = 0; i < idx.size(); ++i) we[idx[i]] = we[idx[i]] - scalars[t[i]];
        if (tangent.contains(we)) found = true;
    });
    return found;
}

}  // namespace

TEST_CASE("precompute on a linear variety keeps constant eliminant jacobians") {
    Field f2(2, 1);
    AffineVariety lin(f2, 1, 4, {parse_poly(f2, 4, "x1 + x2 + x4"), parse_poly(f2, 4, "x2 + x3")});
    DecoderTables tables = precompute(lin, 1);
    CHECK(tables.tuples.size() == 4);
    for (const auto& td : tables.tuples)
        for (const auto& e : td.elim_jacobian.entries) CHECK(e.is_constant());
}

TEST_CASE("simultaneous decoding on a constant-tangent Hamming variety") {
    Field f(2, 2);
    LinearCode ham = LinearCode::from_parity(f, 1, 7, hamming_parity(f, 1, 3));
    ConstantTangentVariety ctv = constant_tangent_variety(ham, std::nullopt, 31);
    const AffineVariety& X = ctv.X;

    DecoderTables tables = precompute(X, 1);
    CHECK(tables.tuples.size() == 7);

    std::mt19937_64 rng(37);
    auto pts = X.rational_points(1);
    REQUIRE(pts.size() == 16);

    size_t trials = 0;
    for (int rep = 0; rep < 30; ++rep) {
        const auto& a = pts[rng() % pts.size()];
        TangentCode tc = tangent_code(X, a);
        auto words = tc.code.codewords();
        for (int u = 0; u < 7; ++u) {
            const auto& v = words[rng() % words.size()];
            // clean word: zero error
            DecodeResult clean = decode(tables, a, v);
            CHECK(clean.codeword == v);
            CHECK(hamming_weight(clean.error) == 0);
            // all single-bit flips round trip
            for (size_t j = 0; j < 7; ++j) {
                std::vector<Element> w = v;
                w[j] = w[j] + f.one();
                DecodeResult res = decode(tables, a, w);
                CHECK(res.codeword == v);
                CHECK(hamming_weight(res.error) == 1);
                CHECK(!res.error[j].is_zero());
                // the accepted tuple contains the error support
                CHECK(std::find(res.support.begin(), res.support.end(), j) != res.support.end());
                ++trials;
            }
        }
    }
    CHECK(trials == 30 * 7 * 7);  // >= 200 (point, codeword) pairs, all single errors

    // extension points: delta = 2, words over GF(4)
    auto pts4 = X.rational_points(2);
    const auto& b = pts4[rng() % pts4.size()];
    TangentCode tb = tangent_code(X, b);
    auto words4 = tb.code.codewords();
    for (int u = 0; u < 10; ++u) {
        std::vector<Element> v = words4[rng() % words4.size()];
        std::vector<Element> w = v;
        size_t j = rng() % 7;
        w[j] = w[j] + f.generator();  // a GF(4) error value
        DecodeResult res = decode(tables, b, w);
        CHECK(res.codeword == v);
        CHECK(hamming_weight(res.error) == 1);
    }

    // the Hamming code is perfect: a weight-2 corruption still has a unique
    // weight-1 error, so the decoder lands on a different codeword
    const auto& a = pts[0];
    auto words = tangent_code(X, a).code.codewords();
    std::vector<Element> w2 = words[3];
    w2[0] = w2[0] + f.one();
    w2[1] = w2[1] + f.one();
    DecodeResult mis = decode(tables, a, w2);
    CHECK(hamming_weight(mis.error) == 1);
    CHECK(mis.codeword != words[3]);

    // off-variety point rejected
    std::vector<Element> off(7, f.one());
    if (!X.contains(off)) CHECK_THROWS_AS(decode(tables, off, words[0]), domain_error);
}

TEST_CASE("error support test against brute-force coset search") {
    // exact equivalence on a linear variety, where every puncturing image is
    // a linear (hence smooth) space
    Field f2(2, 1);
    AffineVariety lin(f2, 1, 6,
                      {parse_poly(f2, 6, "x1 + x3 + x4 + x6"), parse_poly(f2, 6, "x2 + x3 + x5 + x6"),
                       parse_poly(f2, 6, "x3 + x4 + x5")});
    DecoderTables ltab = precompute(lin, 1);
    std::mt19937_64 rng(43);
    auto lpts = lin.rational_points(1);
    for (int rep = 0; rep < 4; ++rep) {
        const auto& a = lpts[rng() % lpts.size()];
        TangentCode tc = tangent_code(lin, a);
        auto words = tc.code.codewords();
        const auto& v = words[rng() % words.size()];
        for (const auto& td : ltab.tuples) CHECK(error_support_test(ltab, a, v, td.idx));
        for (int u = 0; u < 10; ++u) {
            std::vector<Element> w = words[rng() % words.size()];
            size_t j = rng() % 6;
            w[j] = w[j] + f2.one();
            if (rng() % 2) {
                size_t j2 = (j + 1 + rng() % 5) % 6;
                w[j2] = w[j2] + f2.one();
            }
            for (const auto& td : ltab.tuples) {
                bool expect = brute_error_supported(tc.code, w, td.idx, f2, 1);
                CHECK(error_support_test(ltab, a, w, td.idx) == expect);
            }
        }
    }

    // on a nonlinear variety the forward direction is unconditional:
    // a supported error forces the syndrome to vanish
    Field f(2, 2);
    LinearCode ham = LinearCode::from_parity(f, 1, 7, hamming_parity(f, 1, 3));
    ConstantTangentVariety ctv = constant_tangent_variety(ham, std::nullopt, 41);
    DecoderTables tables = precompute(ctv.X, 1);
    auto pts = ctv.X.rational_points(1);
    for (int rep = 0; rep < 5; ++rep) {
        const auto& a = pts[rng() % pts.size()];
        TangentCode tc = tangent_code(ctv.X, a);
        auto words = tc.code.codewords();
        const auto& v = words[rng() % words.size()];
        for (const auto& td : tables.tuples) CHECK(error_support_test(tables, a, v, td.idx));
        for (int u = 0; u < 10; ++u) {
            std::vector<Element> w = words[rng() % words.size()];
            size_t j = rng() % 7;
            w[j] = w[j] + f.one();
            for (const auto& td : tables.tuples) {
                if (brute_error_supported(tc.code, w, td.idx, f, 1))
                    CHECK(error_support_test(tables, a, w, td.idx));
                if (!error_support_test(tables, a, w, td.idx))
                    CHECK_FALSE(brute_error_supported(tc.code, w, td.idx, f, 1));
            }
        }
    }
}

TEST_CASE("coset leaders on a [6,3,3] tangent code") {
    Field f2(2, 1);
    LinearCode ham = LinearCode::from_parity(f2, 1, 7, hamming_parity(f2, 1, 3));
    LinearCode c633 = ham.shorten({0});
    REQUIRE(c633.dim() == 3);
    REQUIRE(c633.min_distance() == 3);

    ConstantTangentVariety ctv = constant_tangent_variety(c633, std::nullopt, 47);
    DecoderTables tables = precompute(ctv.X, 1);
    auto pts = ctv.X.rational_points(1);
    const auto& a = pts[2];
    TangentCode tc = tangent_code(ctv.X, a);
    REQUIRE(tc.code.equal_up_to_extension(c633));

    // exhaustive comparison over all of GF(2)^6
    auto codewords = tc.code.codewords();
    for_each_tuple(6, 2, [&](const std::vector<uint64_t>& bits) {
        std::vector<Element> w;
        for (auto b : bits) w.push_back(f2.from_int(b));
        // brute-force coset leader weight
        size_t best = 7;
        std::vector<Element> leader;
        for (const auto& c : codewords) {
            std::vector<Element> e(6, f2.zero());
            for (size_t j = 0; j < 6; ++j) e[j] = w[j] - c[j];
            size_t wt = hamming_weight(e);
            if (wt < best) {
                best = wt;
                leader = e;
            }
        }
        auto got = coset_leader(tables, a, w);
        if (best <= 1) {
            REQUIRE(got.has_value());
            CHECK(*got == leader);
        } else {
            CHECK_FALSE(got.has_value());
            // on this non-perfect code a weight-2 coset defeats decode too
            CHECK_THROWS_AS(decode(tables, a, w), domain_error);
        }
    });
}

TEST_CASE("precompute respects the Groebner budget") {
    Field f(2, 2);
    LinearCode ham = LinearCode::from_parity(f, 1, 7, hamming_parity(f, 1, 3));
    ConstantTangentVariety ctv = constant_tangent_variety(ham, std::nullopt, 53);
    GroebnerBudget tiny{.max_basis = 2};
    CHECK_THROWS_AS(precompute(ctv.X, 1, tiny), budget_error);
}

TEST_CASE("precompute parallelism matches the serial tables") {
    Field f(2, 2);
    LinearCode ham = LinearCode::from_parity(f, 1, 7, hamming_parity(f, 1, 3));
    ConstantTangentVariety ctv = constant_tangent_variety(ham, std::nullopt, 59);
    DecoderTables serial = precompute(ctv.X, 1, {}, 1);
    DecoderTables parallel = precompute(ctv.X, 1, {}, 4);
    REQUIRE(serial.tuples.size() == parallel.tuples.size());
    for (size_t i = 0; i < serial.tuples.size(); ++i) {
        CHECK(serial.tuples[i].idx == parallel.tuples[i].idx);
        CHECK(serial.tuples[i].eliminants == parallel.tuples[i].eliminants);
    }
    for (size_t i = 0; i < serial.dets.size(); ++i) {
        CHECK(serial.dets[i].delta == parallel.dets[i].delta);
        CHECK(serial.dets[i].adj_product.entries == parallel.dets[i].adj_product.entries);
    }
}
