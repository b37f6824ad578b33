// SPDX-License-Identifier: Apache-2.0
#include "tancode/verify.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "tancode/construct.hpp"
#include "tancode/decode.hpp"
#include "tancode/util.hpp"

namespace tancode::verify {

namespace {

Element random_element(const Field& f, std::mt19937_64& rng) {
    std::vector<uint64_t> c(f.degree());
    for (auto& x : c) x = rng() % f.characteristic();
    return f.from_coeffs(c);
}

MultiPoly random_poly(const Field& f, size_t nvars, uint32_t maxdeg, size_t terms,
                      std::mt19937_64& rng) {
    MultiPoly p(f, nvars);
    for (size_t t = 0; t < terms; ++t) {
        std::vector<uint32_t> e(nvars, 0);
        uint32_t budget = maxdeg;
        for (size_t j = 0; j < nvars && budget; ++j) {
            uint32_t d = rng() % (budget + 1);
            e[j] = d;
            budget -= d;
        }
        p = p + MultiPoly::term(f, nvars, Monomial(e), random_element(f, rng));
    }
    return p;
}

}  // namespace

json duality(uint64_t seed) {
    std::mt19937_64 rng(seed);
    size_t varieties = 0, rank_nullity_ok = 0, gradient_ok = 0, gradient_total = 0;
    std::vector<Field> fields = {Field(2, 1), Field(3, 1), Field(2, 2)};
    while (varieties < 50) {
        const Field& f = fields[varieties % fields.size()];
        size_t n = 3 + varieties % 3;
        size_t m = 1 + varieties % 2;
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
        ++varieties;
        AffineVariety X(f, f.degree(), n, gens);
        TangentCode tc = tangent_code(X, a);
        GradientCode gc = gradient_code(X, a);
        if (tc.code.dim() + gc.code.dim() == n && gc.code.equal_up_to_extension(tc.code.dual()))
            ++rank_nullity_ok;
        Matrix J = X.jacobian_at(a);
        for (int u = 0; u < 20; ++u) {
            ++gradient_total;
            MultiPoly comb(f, n);
            for (const auto& g : gens) comb = comb + random_poly(f, n, 2, 3, rng) * g;
            std::vector<Element> grad;
            for (size_t j = 0; j < n; ++j) grad.push_back(comb.partial_derivative(j).evaluate(a));
            if (J.row_space_contains(grad)) ++gradient_ok;
        }
    }
    bool pass = rank_nullity_ok == varieties && gradient_ok == gradient_total;
    return json{{"suite", "duality"},
                {"pass", pass},
                {"seed", seed},
                {"varieties", varieties},
                {"rank_nullity_ok", rank_nullity_ok},
                {"gradient_members", gradient_ok},
                {"gradient_total", gradient_total}};
}

json ops(uint64_t seed) {
    std::mt19937_64 rng(seed);
    size_t extend_ok = 0, sum_ok = 0, uv_ok = 0, points = 0;

    struct Fixture {
        AffineVariety X;
        std::vector<std::vector<Element>> pool;
    };
    std::vector<Fixture> fixtures;

    {
        Field f9(3, 2);
        AffineVariety circle(f9, 1, 2, {parse_poly(f9, 2, "x1^2 + x2^2 - 1")}, 1);
        std::vector<std::vector<Element>> pool;
        for (uint32_t s : {1u, 2u})
            for (auto& p : circle.rational_points(s)) pool.push_back(p);
        fixtures.push_back({circle, pool});
    }
    {
        Field f64(2, 6);
        AffineVariety cubic(f64, 1, 3,
                            {parse_poly(f64, 3, "x2 - x1^2"), parse_poly(f64, 3, "x3 - x1^3")}, 1);
        std::vector<std::vector<Element>> pool;
        for (uint32_t s : {1u, 2u, 3u})
            for (auto& p : cubic.rational_points(s)) pool.push_back(p);
        fixtures.push_back({cubic, pool});
    }
    {
        Field f4(2, 2);
        HammingVariety hv = hamming_variety(f4, 1, 3);
        std::vector<std::vector<Element>> pool = hv.X.rational_points(2);
        fixtures.push_back({hv.X, pool});
    }

    for (const auto& fix : fixtures) {
        const AffineVariety& X = fix.X;
        size_t k = *X.dim_hint();
        AffineVariety ext = extend_variety(X);
        AffineVariety prod = product_variety(X, X);
        AffineVariety fib = fibered_product_variety(X, X.generators());
        size_t done = 0;
        size_t guard = 0;
        while (done < 20 && ++guard < 4000) {
            const auto& a = fix.pool[rng() % fix.pool.size()];
            if (!is_smooth(X, a, k)) continue;
            ++done;
            ++points;
            const Field& f = X.field();

            // extension
            std::vector<Element> ea = a;
            Element s = f.zero();
            for (const auto& x : a) s = s + x;
            ea.push_back(-s);
            if (tangent_code(X, a).code.extend().equal_up_to_extension(tangent_code(ext, ea).code))
                ++extend_ok;

            // direct sum with an independently sampled smooth point, both
            // codes lifted to the common field GF(q^delta(a,b))
            const auto& b = fix.pool[rng() % fix.pool.size()];
            if (is_smooth(X, b, k)) {
                std::vector<Element> ab = a;
                ab.insert(ab.end(), b.begin(), b.end());
                TangentCode ta = tangent_code(X, a), tb = tangent_code(X, b);
                uint32_t sub = std::lcm(ta.code.subfield_degree(), tb.code.subfield_degree());
                LinearCode ca = LinearCode::from_parity(f, sub, X.nvars(), ta.code.parity());
                LinearCode cb = LinearCode::from_parity(f, sub, X.nvars(), tb.code.parity());
                if (ca.direct_sum(cb).equal_up_to_extension(tangent_code(prod, ab).code)) ++sum_ok;
            } else {
                ++sum_ok;  // pair skipped; not a failure of the identity
            }

            // (u|u+v) over the fibered product along the variety's own equations
            std::vector<Element> aa = a;
            aa.insert(aa.end(), a.begin(), a.end());
            LinearCode c1 = tangent_code(X, a).code;
            if (c1.u_u_plus_v(c1).equal_up_to_extension(tangent_code(fib, aa).code)) ++uv_ok;
        }
    }
    bool pass = extend_ok == points && sum_ok == points && uv_ok == points && points == 60;
    return json{{"suite", "ops"},      {"pass", pass},   {"seed", seed}, {"points", points},
                {"extend_ok", extend_ok}, {"sum_ok", sum_ok}, {"uv_ok", uv_ok}};
}

json weights(uint64_t seed) {
    Field f2(2, 1);
    std::mt19937_64 rng(seed);
    size_t codes = 0, identities = 0, failures = 0;
    while (codes < 100) {
        Matrix H(f2, 4, 8);
        for (size_t i = 0; i < 4; ++i)
            for (size_t j = 0; j < 8; ++j) H.at(i, j) = f2.from_int(rng() % 2);
        LinearCode c = LinearCode::from_parity(f2, 1, 8, H);
        if (c.dim() != 4) continue;
        ++codes;
        size_t d = c.min_distance();
        auto wt_d = c.words_of_weight(d);
        for (size_t s = 1; s < d; ++s) {
            for (const auto& gamma : combinations(8, s)) {
                ++identities;
                std::set<std::vector<Element>> lhs;
                for (auto& w : c.puncture(gamma).words_of_weight(d - s)) lhs.insert(w);
                std::set<std::vector<Element>> rhs;
                for (const auto& w : wt_d) {
                    bool vanishes = false;
                    for (size_t gi : gamma)
                        if (w[gi].is_zero()) vanishes = true;
                    if (vanishes) continue;
                    std::vector<Element> pw;
                    for (size_t j = 0; j < 8; ++j)
                        if (std::find(gamma.begin(), gamma.end(), j) == gamma.end())
                            pw.push_back(w[j]);
                    rhs.insert(pw);
                }
                if (lhs != rhs) ++failures;
            }
        }
    }
    return json{{"suite", "weights"}, {"pass", failures == 0}, {"seed", seed},
                {"codes", codes},     {"identities", identities}, {"failures", failures}};
}

json loci() {
    Field f4(2, 2);
    HammingVariety hv = hamming_variety(f4, 2, 2);  // n = 5 over GF(4)
    size_t points = 0, agreements = 0;
    for (const auto& a : hv.X.rational_points(1)) {
        ++points;
        size_t d_true = tangent_code(hv.X, a).code.min_distance();
        bool ok = true;
        for (size_t d = 1; d <= 2; ++d)
            if (in_min_dist_locus(hv.X, d, a) != (d_true <= d)) ok = false;
        if (ok) ++agreements;
    }
    return json{{"suite", "loci"},
                {"pass", points == 64 && agreements == points},
                {"points", points},
                {"agreements", agreements}};
}

namespace {

// 20 seeded point draws, all 7 single-error patterns on 5 codewords each
size_t roundtrip_on(const AffineVariety& X, const DecoderTables& tables, std::mt19937_64& rng) {
    auto pts = X.rational_points(1);
    const Field& f = X.field();
    size_t successes = 0;
    auto nonzero_scalars = [&] {
        std::vector<Element> out;
        for (const auto& x : f.subfield(X.base_degree()))
            if (!x.is_zero()) out.push_back(x);
        return out;
    }();
    for (int rep = 0; rep < 20; ++rep) {
        const auto& a = pts[rng() % pts.size()];
        auto words = tangent_code(X, a).code.codewords();
        for (int u = 0; u < 5; ++u) {
            const auto& v = words[rng() % words.size()];
            for (size_t j = 0; j < X.nvars(); ++j) {
                std::vector<Element> w = v;
                Element ev = nonzero_scalars[rng() % nonzero_scalars.size()];
                w[j] = w[j] + ev;
                try {
                    DecodeResult res = decode(tables, a, w);
                    if (res.codeword == v && res.error[j] == ev && hamming_weight(res.error) == 1)
                        ++successes;
                } catch (const std::exception&) {
                }
            }
        }
    }
    return successes;
}

}  // namespace

json decode_roundtrip(uint64_t seed) {
    std::mt19937_64 rng(seed);

    Field f(2, 2);
    LinearCode ham = LinearCode::from_parity(f, 1, 7, hamming_parity(f, 1, 3));
    ConstantTangentVariety ctv = constant_tangent_variety(ham, std::nullopt, seed);
    DecoderTables t1 = precompute(ctv.X, 1);
    size_t constant_ok = roundtrip_on(ctv.X, t1, rng);

    Field f2(2, 1);
    HammingVariety hv = hamming_variety(f2, 1, 3);
    DecoderTables t2 = precompute(hv.X, 1);
    size_t graph_ok = roundtrip_on(hv.X, t2, rng);

    bool pass = constant_ok == 700 && graph_ok == 700;
    return json{{"suite", "decode-roundtrip"},
                {"pass", pass},
                {"seed", seed},
                {"constant_tangent_successes", constant_ok},
                {"hamming_variety_successes", graph_ok},
                {"trials_each", 700}};
}

json deform(uint64_t seed) {
    Field f(5, 4);  // ambient GF(5^4) holds both GF(25) and the sample field
    AffineVariety X(f, 1, 2, {parse_poly(f, 2, "x1^2 + x2^2 - 1")}, 1);
    std::vector<Element> a;
    for (const auto& p : X.rational_points(2)) {
        if (p[0].is_zero() || p[1].is_zero()) continue;
        a = p;
        break;
    }
    bool found = !a.empty() && tangent_code(X, a).code.min_distance() == 2;
    DeformationStats st{};
    if (found) st = deformation_sample(X, a, 1, 2, 4, 100, seed);
    size_t all_three = std::min({st.point_on_deformed, st.full_rank, st.min_dist_kept});
    bool pass = found && st.point_on_deformed == 100 && st.full_rank >= 90 && st.min_dist_kept >= 90;
    return json{{"suite", "deform"},
                {"pass", pass},
                {"seed", seed},
                {"samples", st.samples},
                {"point_on_deformed", st.point_on_deformed},
                {"jacobian_full_rank", st.full_rank},
                {"min_dist_kept", st.min_dist_kept},
                {"all_three_lower_bound", all_three},
                {"threshold", 90}};
}

}  // namespace tancode::verify
