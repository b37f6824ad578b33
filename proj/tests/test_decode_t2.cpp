// SPDX-License-Identifier: Apache-2.0
#include <algorithm>

#include "doctest.h"
#include "tancode/construct.hpp"
#include "tancode/decode.hpp"
#include "test_util.hpp"

using namespace tancode;

TEST_CASE("double-error decoding on a constant-tangent repetition variety") {
    // [6,1,6] repetition: d = 6 >= 2t+1 with t = 2
    Field f(2, 1);
    Matrix g(f, 1, 6);
    for (size_t j = 0; j < 6; ++j) g.at(0, j) = f.one();
    LinearCode rep = LinearCode::from_generator(f, 1, 6, g);
    REQUIRE(rep.min_distance() == 6);

    ConstantTangentVariety ctv = constant_tangent_variety(rep, std::nullopt, 67);
    DecoderTables tables = precompute(ctv.X, 2, {}, 2);
    CHECK(tables.tuples.size() == 15);  // C(6,2) coordinate tuples

    auto pts = ctv.X.rational_points(1);
    REQUIRE(pts.size() == 2);
    std::mt19937_64 rng(71);
    for (const auto& a : pts) {
        auto words = tangent_code(ctv.X, a).code.codewords();
        for (const auto& v : words) {
            // all single and double error patterns round trip
            for (size_t i = 0; i < 6; ++i) {
                std::vector<Element> w = v;
                w[i] = w[i] + f.one();
                DecodeResult res = decode(tables, a, w);
                CHECK(res.codeword == v);
                CHECK(hamming_weight(res.error) == 1);
                for (size_t j = i + 1; j < 6; ++j) {
                    std::vector<Element> w2 = w;
                    w2[j] = w2[j] + f.one();
                    DecodeResult res2 = decode(tables, a, w2);
                    CHECK(res2.codeword == v);
                    CHECK(hamming_weight(res2.error) == 2);
                    CHECK(!res2.error[i].is_zero());
                    CHECK(!res2.error[j].is_zero());
                }
            }
            // weight-3 corruption is undecodable at t = 2 (coset leader 3)
            std::vector<Element> w3 = v;
            for (size_t j : {0, 1, 2}) w3[j] = w3[j] + f.one();
            CHECK_THROWS_AS(decode(tables, a, w3), domain_error);
            CHECK_FALSE(coset_leader(tables, a, w3).has_value());
        }
    }
}
