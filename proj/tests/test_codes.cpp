// SPDX-License-Identifier: Apache-2.0
#include <algorithm>
#include <set>

#include "doctest.h"
#include "tancode/codes.hpp"
#include "tancode/util.hpp"
#include "test_util.hpp"

using namespace tancode;
using testutil::random_element;

namespace {

// independent oracle: minimum weight straight from a generator matrix,
// enumerating all scalar combinations without going through LinearCode
size_t brute_min_weight(const Field& f, uint32_t sub, const Matrix& G) {
    auto scalars = f.subfield(sub);
    size_t best = G.cols() + 1;
    for_each_tuple(G.rows(), scalars.size(), [&](const std::vector<uint64_t>& t) {
        std::vector<Element> w(G.cols(), f.zero());
        for (size_t i = 0; i < G.rows(); ++i)
            for (size_t j = 0; j < G.cols(); ++j) w[j] = w[j] + scalars[t[i]] * G.at(i, j);
        size_t wt = hamming_weight(w);
        if (wt > 0) best = std::min(best, wt);
    });
    return best;
}

LinearCode random_code(const Field& f, size_t n, size_t rows, std::mt19937_64& rng) {
    while (true) {
        Matrix H(f, rows, n);
        for (size_t i = 0; i < rows; ++i)
            for (size_t j = 0; j < n; ++j) H.at(i, j) = random_element(f, rng);
        LinearCode c = LinearCode::from_parity(f, f.degree(), n, H);
        if (c.dim() >= 1 && c.dim() <= n - 1) return c;
    }
}

std::set<std::vector<Element>> word_set(const std::vector<std::vector<Element>>& ws) {
    return {ws.begin(), ws.end()};
}

}  // namespace

TEST_CASE("minimum distance") {
    Field f2(2, 1);
    LinearCode hamming = LinearCode::from_parity(f2, 1, 7, hamming_parity(f2, 1, 3));
    CHECK(hamming.dim() == 4);
    CHECK(hamming.min_distance() == 3);

    // H empty: the full space
    LinearCode full = LinearCode::from_parity(f2, 1, 4, Matrix(f2, 0, 4));
    CHECK(full.dim() == 4);
    CHECK(full.min_distance() == 1);

    // zero code reported distinctly
    LinearCode zero = LinearCode::from_parity(f2, 1, 3, Matrix::identity(f2, 3));
    CHECK(zero.dim() == 0);
    CHECK_THROWS_AS(zero.min_distance(), domain_error);

    // random [6,3] codes agree with the independent enumeration oracle
    std::mt19937_64 rng(97);
    for (int t = 0; t < 25; ++t) {
        LinearCode c = random_code(f2, 6, 3, rng);
        CHECK(c.min_distance() == brute_min_weight(f2, 1, c.generator()));
        CHECK(c.min_distance() <= c.length() - c.dim() + 1);  // Singleton
    }
}

TEST_CASE("dual codes") {
    Field f2(2, 1);
    LinearCode full = LinearCode::from_parity(f2, 1, 4, Matrix(f2, 0, 4));
    CHECK(full.dual().dim() == 0);

    LinearCode hamming = LinearCode::from_parity(f2, 1, 7, hamming_parity(f2, 1, 3));
    LinearCode simplex = hamming.dual();
    CHECK(simplex.dim() == 3);
    CHECK(simplex.min_weight_by_enumeration() == 4);
    CHECK(hamming.dim() + simplex.dim() == 7);

    std::mt19937_64 rng(101);
    Field f3(3, 1);
    for (int t = 0; t < 50; ++t) {
        LinearCode c = random_code(t % 2 ? f2 : f3, 5, 2, rng);
        CHECK(c.dual().dual().equal_up_to_extension(c));
    }
}

TEST_CASE("puncture and shorten") {
    Field f2(2, 1);
    // [3,1,3] repetition: H = [[1,1,0],[1,0,1]]
    Matrix h(f2, 2, 3);
    h.at(0, 0) = f2.one();
    h.at(0, 1) = f2.one();
    h.at(1, 0) = f2.one();
    h.at(1, 2) = f2.one();
    LinearCode rep3 = LinearCode::from_parity(f2, 1, 3, h);
    CHECK(rep3.min_distance() == 3);
    LinearCode rep2 = rep3.puncture({2});
    CHECK(rep2.length() == 2);
    CHECK(rep2.dim() == 1);
    CHECK(rep2.min_distance() == 2);

    LinearCode hamming = LinearCode::from_parity(f2, 1, 7, hamming_parity(f2, 1, 3));
    LinearCode sh = hamming.shorten({0});
    CHECK(sh.length() == 6);
    CHECK(sh.dim() == 3);
    CHECK(sh.min_weight_by_enumeration() == 3);

    // duality bridge puncture(dual) = dual(shorten) on random (C, gamma)
    std::mt19937_64 rng(103);
    for (int t = 0; t < 100; ++t) {
        LinearCode c = random_code(f2, 6, 2 + t % 3, rng);
        std::vector<size_t> gamma = {rng() % 6};
        if (t % 2) gamma.push_back((gamma[0] + 1 + rng() % 5) % 6);
        std::sort(gamma.begin(), gamma.end());
        gamma.erase(std::unique(gamma.begin(), gamma.end()), gamma.end());
        CHECK(c.dual().puncture(gamma).equal_up_to_extension(c.shorten(gamma).dual()));
    }
}

TEST_CASE("extension") {
    Field f2(2, 1);
    Matrix h(f2, 1, 2);
    h.at(0, 0) = f2.one();
    h.at(0, 1) = f2.one();
    LinearCode rep = LinearCode::from_parity(f2, 1, 2, h);  // {00, 11}
    LinearCode ext = rep.extend();
    auto words = word_set(ext.codewords());
    CHECK(words.size() == 2);
    CHECK(words.count({f2.zero(), f2.zero(), f2.zero()}) == 1);
    CHECK(words.count({f2.one(), f2.one(), f2.zero()}) == 1);

    LinearCode hamming = LinearCode::from_parity(f2, 1, 7, hamming_parity(f2, 1, 3));
    LinearCode eh = hamming.extend();
    CHECK(eh.length() == 8);
    CHECK(eh.dim() == 4);
    CHECK(eh.min_weight_by_enumeration() == 4);
    for (const auto& w : eh.codewords()) {
        Element s = f2.zero();
        for (const auto& x : w) s = s + x;
        CHECK(s.is_zero());
    }
}

TEST_CASE("direct sum and (u|u+v)") {
    Field f2(2, 1);
    LinearCode zero = LinearCode::from_parity(f2, 1, 2, Matrix::identity(f2, 2));
    LinearCode hamming = LinearCode::from_parity(f2, 1, 7, hamming_parity(f2, 1, 3));
    LinearCode ds = zero.direct_sum(hamming);
    CHECK(ds.length() == 9);
    CHECK(ds.dim() == 4);
    CHECK(ds.min_weight_by_enumeration() == hamming.min_distance());

    // [4,1,4] repetition with itself: dimensions add
    Matrix g(f2, 1, 4);
    for (size_t j = 0; j < 4; ++j) g.at(0, j) = f2.one();
    LinearCode rep4 = LinearCode::from_generator(f2, 1, 4, g);
    CHECK(rep4.u_u_plus_v(rep4).dim() == 2);

    // d(u|u+v) = min(2 d1, d2) on random pairs, both sides brute-forced
    std::mt19937_64 rng(107);
    for (int t = 0; t < 50; ++t) {
        LinearCode c1 = random_code(f2, 4, 2, rng);
        LinearCode c2 = random_code(f2, 4, 2, rng);
        LinearCode uv = c1.u_u_plus_v(c2);
        size_t lhs = uv.min_weight_by_enumeration();
        size_t rhs = std::min(2 * c1.min_weight_by_enumeration(), c2.min_weight_by_enumeration());
        CHECK(lhs == rhs);
    }
}

TEST_CASE("cyclic codes") {
    Field f2(2, 1);
    Matrix g(f2, 1, 5);
    for (size_t j = 0; j < 5; ++j) g.at(0, j) = f2.one();
    CHECK(LinearCode::from_generator(f2, 1, 5, g).is_cyclic());  // repetition

    // brute-force shift test on all codewords agrees with is_cyclic
    LinearCode hamming = LinearCode::from_parity(f2, 1, 7, hamming_parity(f2, 1, 3));
    auto brute_cyclic = [](const LinearCode& c) {
        for (const auto& w : c.codewords())
            if (!c.contains(cyclic_shift(w))) return false;
        return true;
    };
    CHECK(hamming.is_cyclic() == brute_cyclic(hamming));
    LinearCode punct = hamming.puncture({3});
    CHECK(punct.is_cyclic() == brute_cyclic(punct));

    // D_{2,3} over the splitting field GF(4)
    Field f4(2, 2);
    auto divs = divisors_of(f4, 3);
    CHECK(divs.size() == 8);
    size_t by_deg[4] = {0, 0, 0, 0};
    for (const auto& d : divs) {
        CHECK(d.splitting_degree == 2);
        by_deg[d.g.size() - 1]++;
    }
    CHECK(by_deg[0] == 1);  // binomial counts C(3, nu)
    CHECK(by_deg[1] == 3);
    CHECK(by_deg[2] == 3);
    CHECK(by_deg[3] == 1);

    for (const auto& d : divs) {
        LinearCode c = cyclic_code(f4, d, 1);
        CHECK(c.dim() == 3 - (d.g.size() - 1));
        if (c.dim() > 0) CHECK(c.is_cyclic());
    }

    // g = t - 1: the zero-sum code; oracle enumerates the multiples of g
    CyclicSpec tm1{3, 2, {-f4.one(), f4.one()}};
    LinearCode zsum = cyclic_code(f4, tm1, 1);
    CHECK(zsum.dim() == 2);
    std::set<std::vector<Element>> expected;
    auto elems = f4.subfield(2);
    for_each_tuple(3, 4, [&](const std::vector<uint64_t>& t) {
        // u(t) * (t - 1) mod t^3 - 1, coefficients cyclically wrapped
        std::vector<Element> w(3, f4.zero());
        for (size_t i = 0; i < 3; ++i) {
            // u_i * (t^{i+1} - t^i)
            w[(i + 1) % 3] = w[(i + 1) % 3] + elems[t[i]];
            w[i] = w[i] - elems[t[i]];
        }
        expected.insert(w);
    });
    CHECK(word_set(zsum.codewords()) == expected);
}

TEST_CASE("hamming parity matrices") {
    Field f2(2, 1);
    Matrix h23 = hamming_parity(f2, 1, 3);
    CHECK(h23.cols() == 7);
    CHECK(h23.rank() == 3);

    Field f3(3, 1);
    Matrix h32 = hamming_parity(f3, 1, 2);
    CHECK(h32.cols() == 4);
    CHECK(LinearCode::from_parity(f3, 1, 4, h32).min_distance() == 3);

    for (auto [f, e, r] : {std::tuple<Field, uint32_t, uint32_t>{f2, 1, 3}, {f3, 1, 2}, {Field(2, 2), 2, 2}}) {
        Matrix h = hamming_parity(f, e, r);
        // rk(H_1..H_r) = r and H_{r-1} + H_r = H_{r+1}
        std::vector<size_t> firstr(r);
        for (uint32_t i = 0; i < r; ++i) firstr[i] = i;
        CHECK(h.select_columns(firstr).rank() == r);
        for (uint32_t i = 0; i < r; ++i)
            CHECK(h.at(i, r - 2) + h.at(i, r - 1) == h.at(i, r));
        // pairwise non-proportional columns
        for (size_t a = 0; a < h.cols(); ++a)
            for (size_t b = a + 1; b < h.cols(); ++b) {
                std::vector<size_t> two = {a, b};
                CHECK(h.select_columns(two).rank() == 2);
            }
    }
}

TEST_CASE("near-MDS") {
    Field f2(2, 1);
    Matrix h(f2, 2, 4);
    h.at(0, 0) = f2.one();
    h.at(0, 1) = f2.one();
    h.at(1, 2) = f2.one();
    h.at(1, 3) = f2.one();
    LinearCode c = LinearCode::from_parity(f2, 1, 4, h);
    CHECK(c.is_near_mds());
    CHECK(c.near_mds_by_rank());

    // [n,1,n] repetition is MDS, not near MDS
    Matrix g(f2, 1, 4);
    for (size_t j = 0; j < 4; ++j) g.at(0, j) = f2.one();
    LinearCode rep = LinearCode::from_generator(f2, 1, 4, g);
    CHECK_FALSE(rep.is_near_mds());

    // the two routes agree on random codes
    std::mt19937_64 rng(113);
    Field f3(3, 1);
    for (int t = 0; t < 100; ++t) {
        LinearCode rc = random_code(t % 2 ? f2 : f3, 5 + t % 3, 2 + t % 2, rng);
        CHECK(rc.is_near_mds() == rc.near_mds_by_rank());
    }
}

TEST_CASE("equality up to extension") {
    Field f4(2, 2);
    Matrix h(f4, 1, 3);
    h.at(0, 0) = f4.one();
    h.at(0, 1) = f4.one();
    h.at(0, 2) = f4.one();
    LinearCode c2 = LinearCode::from_parity(f4, 1, 3, h);  // over GF(2)
    LinearCode c4 = LinearCode::from_parity(f4, 2, 3, h);  // scalar extension to GF(4)
    CHECK(c2.equal_up_to_extension(c2));
    CHECK(c2.equal_up_to_extension(c4));

    // distinct column orders: agreement with the stacked-rank oracle
    std::mt19937_64 rng(127);
    Field f2(2, 1);
    for (int t = 0; t < 40; ++t) {
        LinearCode a = random_code(f2, 5, 2, rng);
        std::vector<size_t> perm = {0, 1, 2, 3, 4};
        std::shuffle(perm.begin(), perm.end(), rng);
        Matrix hb = a.parity().select_columns(perm);
        LinearCode b = LinearCode::from_parity(f2, 1, 5, hb);
        bool stacked = a.parity().vstack(b.parity()).rank() == a.parity().rank() &&
                       a.parity().rows() == b.parity().rows();
        CHECK(a.equal_up_to_extension(b) == stacked);
    }
}

TEST_CASE("punctured weight identity (small sample)") {
    // Wt_{d-s}(Pi_gamma C) = Pi_gamma(Wt_d(C) minus words vanishing somewhere on gamma)
    Field f2(2, 1);
    std::mt19937_64 rng(131);
    for (int t = 0; t < 20; ++t) {
        LinearCode c = random_code(f2, 8, 4, rng);
        size_t d = c.min_distance();
        for (size_t s = 1; s < d; ++s) {
            for (const auto& gamma : combinations(8, s)) {
                auto lhs = word_set(c.puncture(gamma).words_of_weight(d - s));
                std::set<std::vector<Element>> rhs;
                for (const auto& w : c.words_of_weight(d)) {
                    bool vanishes = false;
                    for (size_t gi : gamma)
                        if (w[gi].is_zero()) vanishes = true;
                    if (vanishes) continue;
                    std::vector<Element> pw;
                    for (size_t j = 0; j < 8; ++j)
                        if (std::find(gamma.begin(), gamma.end(), j) == gamma.end()) pw.push_back(w[j]);
                    rhs.insert(pw);
                }
                CHECK(lhs == rhs);
            }
        }
    }
}
