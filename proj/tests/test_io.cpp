// SPDX-License-Identifier: Apache-2.0
#include "doctest.h"
#include "tancode/io.hpp"

using namespace tancode;

TEST_CASE("variety files round trip") {
    Field f(2, 2);
    HammingVariety hv = hamming_variety(f, 1, 3);
    auto j = io::variety_to_json(hv.X, {{"construction", "hamming"}});
    AffineVariety back = io::variety_from_json(j);
    CHECK(back.field() == hv.X.field());
    CHECK(back.nvars() == 7);
    CHECK(back.generators() == hv.X.generators());
    REQUIRE(back.section().has_value());
    CHECK(back.rational_points(1).size() == 16);
    CHECK(back.dim_hint() == hv.X.dim_hint());
    // byte-identical re-serialization
    CHECK(io::variety_to_json(back, {{"construction", "hamming"}}).dump() == j.dump());
}

TEST_CASE("code files round trip") {
    Field f(3, 1);
    LinearCode c = LinearCode::from_parity(f, 1, 4, hamming_parity(f, 1, 2));
    auto j = io::code_to_json(c);
    LinearCode back = io::code_from_json(j);
    CHECK(back.equal_up_to_extension(c));
    CHECK(back.subfield_degree() == 1);
    CHECK(back.min_distance() == 3);
}

TEST_CASE("points parse with nested brackets") {
    Field f(2, 2);
    auto a = io::parse_point(f, "[1,0],[0,1],1");
    REQUIRE(a.size() == 3);
    CHECK(a[0] == f.one());
    CHECK(a[1] == f.indeterminate());
    CHECK(a[2] == f.one());
    CHECK(io::parse_point(f, io::format_point(a)) == a);
    CHECK_THROWS_AS(io::parse_point(f, "1,,0"), parse_error);
}

TEST_CASE("decoder tables round trip through JSON") {
    Field f(2, 2);
    LinearCode ham = LinearCode::from_parity(f, 1, 7, hamming_parity(f, 1, 3));
    ConstantTangentVariety ctv = constant_tangent_variety(ham, std::nullopt, 61);
    DecoderTables tables = precompute(ctv.X, 1);
    DecoderTables back = io::tables_from_json(io::tables_to_json(tables));

    REQUIRE(back.tuples.size() == tables.tuples.size());
    for (size_t i = 0; i < tables.tuples.size(); ++i) {
        CHECK(back.tuples[i].idx == tables.tuples[i].idx);
        CHECK(back.tuples[i].eliminants == tables.tuples[i].eliminants);
    }
    REQUIRE(back.dets.size() == tables.dets.size());
    for (size_t i = 0; i < tables.dets.size(); ++i) {
        CHECK(back.dets[i].delta == tables.dets[i].delta);
        CHECK(back.dets[i].adj_product.entries == tables.dets[i].adj_product.entries);
    }

    // the reloaded tables decode
    auto pts = ctv.X.rational_points(1);
    auto words = tangent_code(ctv.X, pts[5]).code.codewords();
    std::vector<Element> w = words[7];
    w[2] = w[2] + f.one();
    DecodeResult res = decode(back, pts[5], w);
    CHECK(res.codeword == words[7]);
}

TEST_CASE("morphism files round trip") {
    Field f(3, 1);
    std::vector<MultiPoly> psis = {parse_poly(f, 2, "x1 + 1"), parse_poly(f, 2, "x2 + 2")};
    Morphism m = isometry_morphism(psis, {1, 0});
    Morphism back = io::morphism_from_json(io::morphism_to_json(m));
    CHECK(back.components == m.components);
    REQUIRE(back.excluded.has_value());
    CHECK(*back.excluded == *m.excluded);
}

TEST_CASE("family files round trip") {
    Field f(2, 1);
    Matrix h(f, 1, 2);
    h.at(0, 0) = f.one();
    h.at(0, 1) = f.one();
    CodeFamily fam{f, 1, {{f.zero(), f.zero()}, {f.one(), f.zero()}}, {h, h}};
    CodeFamily back = io::family_from_json(io::family_to_json(fam));
    CHECK(back.points == fam.points);
    REQUIRE(back.matrices.size() == 2);
    CHECK(back.matrices[0] == h);
}
