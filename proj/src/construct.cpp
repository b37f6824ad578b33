// SPDX-License-Identifier: Apache-2.0
#include "tancode/construct.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "tancode/util.hpp"

namespace tancode {

std::vector<Element> Morphism::apply(const std::vector<Element>& a) const {
    std::vector<Element> out;
    out.reserve(components.size());
    for (const auto& c : components) out.push_back(c.evaluate(a));
    return out;
}

Matrix Morphism::differential_at(const std::vector<Element>& a) const {
    return jacobian_at(components, a);
}

namespace {

uint64_t subfield_order(const Field& f, uint32_t e) {
    uint64_t q = 1;
    for (uint32_t i = 0; i < e; ++i) q *= f.characteristic();
    return q;
}

// L^{beta}(x_v^p) as a polynomial in n variables
MultiPoly lagrange_of_var_power(const Field& f, uint32_t e, const Element& beta, size_t n, size_t v) {
    auto coeffs = lagrange_basis(f, e, beta);
    const uint32_t p = static_cast<uint32_t>(f.characteristic());
    MultiPoly out(f, n);
    for (size_t s = 0; s < coeffs.size(); ++s) {
        if (coeffs[s].is_zero()) continue;
        out = out + MultiPoly::term(f, n, Monomial::var(v, static_cast<uint32_t>(s) * p), coeffs[s]);
    }
    return out;
}

// shared Lagrange/Frobenius interpolation core: rows(a) x n matrices over S
std::vector<MultiPoly> interpolate_matrix_family(const CodeFamily& fam, bool require_invertible) {
    const Field& f = fam.field;
    const uint32_t e = fam.e;
    if (fam.points.empty()) throw domain_error("empty interpolation family");
    if (fam.points.size() != fam.matrices.size())
        throw domain_error("one matrix per interpolation point required");
    const size_t n = fam.points.front().size();
    const size_t rows = fam.matrices.front().rows();
    const uint64_t q = subfield_order(f, e);
    const uint32_t p = static_cast<uint32_t>(f.characteristic());
    if (q > kMaxTotalDegree) throw budget_error("interpolation base field exceeds the degree cap");

    std::set<std::vector<Element>> seen;
    for (size_t i = 0; i < fam.points.size(); ++i) {
        const auto& a = fam.points[i];
        if (a.size() != n) throw domain_error("interpolation points of mixed dimension");
        for (const auto& c : a)
            if (!c.in_subfield(e)) throw domain_error("interpolation point outside GF(q)");
        if (!seen.insert(a).second) throw domain_error("duplicate interpolation point");
        const Matrix& H = fam.matrices[i];
        if (H.rows() != rows || H.cols() != n) throw domain_error("interpolation matrices of mixed shape");
        if (!H.all_entries_in_subfield(e)) throw domain_error("interpolation matrix outside GF(q)");
        if (H.rank() != rows) throw domain_error("rank-deficient interpolation matrix");
        if (require_invertible && rows != n) throw domain_error("isometry matrices must be square");
    }

    // x_j - x_j^q
    std::vector<MultiPoly> lin;
    for (size_t j = 0; j < n; ++j)
        lin.push_back(MultiPoly::variable(f, n, j) -
                      MultiPoly::term(f, n, Monomial::var(j, static_cast<uint32_t>(q)), f.one()));

    std::vector<MultiPoly> gens(rows, MultiPoly(f, n));
    for (size_t idx = 0; idx < fam.points.size(); ++idx) {
        const auto& a = fam.points[idx];
        MultiPoly factor = MultiPoly::constant(f, n, f.one());
        for (size_t v = 0; v < n; ++v) factor = factor * lagrange_of_var_power(f, e, a[v].pow(p), n, v);
        for (size_t i = 0; i < rows; ++i) {
            MultiPoly bracket(f, n);
            for (size_t j = 0; j < n; ++j) {
                const Element& h = fam.matrices[idx].at(i, j);
                if (!h.is_zero()) bracket = bracket + lin[j] * h;
            }
            gens[i] = gens[i] + bracket * factor;
        }
    }

    // postcondition: the Jacobian reproduces every assigned matrix
    for (size_t idx = 0; idx < fam.points.size(); ++idx) {
        Matrix J = jacobian_at(gens, fam.points[idx]);
        if (J != fam.matrices[idx]) throw std::logic_error("interpolation postcondition failed");
    }
    return gens;
}

}  // namespace

// -------------------------------------------------- stabilizing embedding --

StabilizedVariety variety_from_code(const LinearCode& C, const std::vector<size_t>& sigma,
                                    const std::optional<HigherTerms>& higher) {
    const Field& f = C.field();
    const uint32_t e = C.subfield_degree();
    const size_t n = C.length();
    const size_t k = C.dim();
    if (k == 0 || k == n) throw domain_error("construction needs 1 <= k <= n-1");
    const size_t d = C.min_distance();
    if (sigma.size() != d) throw domain_error("sigma must have the minimum-distance cardinality");
    if (d > n - k) throw domain_error("construction needs d <= n-k");

    // a codeword supported exactly on sigma
    Matrix hsig = C.parity().select_columns(sigma);
    Matrix ker = hsig.nullspace();
    if (ker.rows() == 0) throw domain_error("sigma does not support a codeword");
    std::vector<Element> csig = ker.row(0);
    for (const auto& x : csig)
        if (x.is_zero()) throw std::logic_error("minimum-weight support with a zero entry");

    // first alpha (lex) with invertible H_alpha and sigma not inside alpha
    std::optional<std::vector<size_t>> alpha;
    for (const auto& cand : combinations(n, n - k)) {
        if (C.parity().select_columns(cand).det().is_zero()) continue;
        bool contains_sigma = true;
        for (size_t s : sigma)
            if (std::find(cand.begin(), cand.end(), s) == cand.end()) contains_sigma = false;
        if (contains_sigma) continue;
        alpha = cand;
        break;
    }
    if (!alpha) throw domain_error("every invertible column tuple contains sigma");

    Matrix A = C.parity().select_columns(*alpha).inverse();
    Matrix H = A * C.parity();  // H_alpha = I

    // distinguished sigma_nu outside alpha, and the dependence coefficients
    size_t sigma_nu = n;
    for (size_t s : sigma)
        if (std::find(alpha->begin(), alpha->end(), s) == alpha->end()) {
            sigma_nu = s;
            break;
        }
    size_t nu_pos = std::find(sigma.begin(), sigma.end(), sigma_nu) - sigma.begin();
    Element cnu_inv = csig[nu_pos].inverse();
    std::map<size_t, Element> lambda;  // s in sigma \ {sigma_nu}
    for (size_t i = 0; i < sigma.size(); ++i) {
        if (sigma[i] == sigma_nu) continue;
        lambda.emplace(sigma[i], -(csig[i] * cnu_inv));
    }

    std::vector<bool> in_alpha(n, false);
    std::map<size_t, size_t> alpha_row;  // variable -> generator row
    for (size_t i = 0; i < alpha->size(); ++i) {
        in_alpha[(*alpha)[i]] = true;
        alpha_row[(*alpha)[i]] = i;
    }

    // univariate pieces f_{i,s}(t), returned as coefficient lists (power -> coeff)
    auto piece = [&](size_t i, size_t s) {
        std::map<uint32_t, Element> c;
        if (in_alpha[s]) {
            if (alpha_row[s] == i) c.emplace(1, f.one());
            return c;
        }
        if (!H.at(i, s).is_zero()) c.emplace(1, H.at(i, s));
        if (higher) {
            for (const auto& [key, coeff] : *higher) {
                auto [gi, vs, r] = key;
                if (gi == i && vs == s && !coeff.is_zero()) {
                    if (!coeff.in_subfield(e)) throw domain_error("higher-order coefficient outside GF(q)");
                    if (r < 2) throw domain_error("higher-order powers start at 2");
                    c.emplace(r, coeff);
                }
            }
        } else if (!H.at(i, s).is_zero()) {
            c.emplace(2, H.at(i, s));  // default a_{i,s,2} = H_{is}
        }
        return c;
    };

    std::vector<MultiPoly> gens;
    for (size_t i = 0; i < n - k; ++i) {
        MultiPoly fi(f, n);
        for (size_t s = 0; s < n; ++s) {
            if (s == sigma_nu) continue;
            if (in_alpha[s] && alpha_row[s] != i) continue;
            for (const auto& [r, c] : piece(i, s))
                fi = fi + MultiPoly::term(f, n, Monomial::var(s, r), c);
        }
        // f_{i,sigma_nu}(x_{sigma_nu}) = sum_{s in sigma, s != sigma_nu} lambda_s f_{i,s}(x_{sigma_nu})
        for (const auto& [s, lam] : lambda) {
            for (const auto& [r, c] : piece(i, s))
                fi = fi + MultiPoly::term(f, n, Monomial::var(sigma_nu, r), lam * c);
        }
        gens.push_back(fi);
    }

    // section over the free coordinates: x_{alpha_i} = -(the rest of f_i)
    std::vector<MultiPoly> exprs;
    for (size_t i = 0; i < n - k; ++i)
        exprs.push_back(-(gens[i] - MultiPoly::variable(f, n, (*alpha)[i])));
    Section sec{*alpha, exprs};

    AffineVariety X(f, e, n, gens, k, sec);

    // universal word
    std::vector<Element> v(n, f.zero());
    for (const auto& [s, lam] : lambda) v[s] = lam;
    v[sigma_nu] = -f.one();

    // postconditions: T_0 = C as a row space, universal word tangent at samples
    std::vector<Element> zero(n, f.zero());
    if (!Matrix::same_row_space(X.jacobian_at(zero), C.parity()))
        throw std::logic_error("tangent space at 0 does not reproduce the code");
    for (const auto& a : X.rational_points(1)) {
        auto syn = X.jacobian_at(a).mul_vec(v);
        for (const auto& s : syn)
            if (!s.is_zero()) throw std::logic_error("universal word is not tangent");
    }

    return StabilizedVariety{std::move(X), *alpha, sigma_nu, std::move(v), std::move(H)};
}

// ------------------------------------------------- family interpolation ----

std::vector<MultiPoly> interpolate_code_family(const CodeFamily& fam) {
    return interpolate_matrix_family(fam, false);
}

// --------------------------------------------- constant tangent varieties --

ConstantTangentVariety constant_tangent_variety(const LinearCode& C,
                                                const std::optional<std::vector<MultiPoly>>& g,
                                                uint64_t seed) {
    const Field& f = C.field();
    const uint32_t e = C.subfield_degree();
    const size_t n = C.length();
    const Matrix& H = C.parity();
    const size_t m = H.rows();
    const uint32_t p = static_cast<uint32_t>(f.characteristic());

    // pivot columns of the RREF parity matrix form an identity submatrix
    std::vector<size_t> pivots;
    for (size_t i = 0; i < m; ++i)
        for (size_t j = 0; j < n; ++j)
            if (!H.at(i, j).is_zero()) {
                pivots.push_back(j);
                break;
            }
    std::vector<bool> bound(n, false);
    for (size_t j : pivots) bound[j] = true;
    std::vector<size_t> free_vars;
    for (size_t j = 0; j < n; ++j)
        if (!bound[j]) free_vars.push_back(j);

    std::vector<MultiPoly> gs;
    bool section_ok = true;
    if (g) {
        if (g->size() != m) throw domain_error("one g_i per parity row required");
        for (const auto& gi : *g) {
            if (gi.nvars() != n) throw domain_error("g_i variable count mismatch");
            if (!gi.coefficients_in_subfield(e)) throw domain_error("g_i not defined over GF(q)");
            for (size_t b : pivots)
                for (const auto& [mono, c] : gi.terms())
                    if (mono.exp(b) > 0) section_ok = false;
        }
        gs = *g;
    } else {
        // seeded sparse quadratics in the free coordinates
        std::mt19937_64 rng(seed);
        auto scalars = f.subfield(e);
        for (size_t i = 0; i < m; ++i) {
            MultiPoly gi(f, n);
            if (!free_vars.empty()) {
                size_t terms = 1 + rng() % 2;
                for (size_t t = 0; t < terms; ++t) {
                    size_t u = free_vars[rng() % free_vars.size()];
                    size_t v = free_vars[rng() % free_vars.size()];
                    Element c = scalars[1 + rng() % (scalars.size() - 1)];
                    gi = gi + MultiPoly::term(f, n, Monomial::var(u) * Monomial::var(v), c);
                }
            }
            gs.push_back(gi);
        }
    }

    std::vector<MultiPoly> gens;
    for (size_t i = 0; i < m; ++i) {
        MultiPoly fi(f, n);
        for (size_t j = 0; j < n; ++j)
            if (!H.at(i, j).is_zero()) fi = fi + MultiPoly::variable(f, n, j) * H.at(i, j);
        fi = fi + gs[i].frobenius_substitute(p);
        gens.push_back(fi);
    }
    if (gens.empty()) gens.push_back(MultiPoly(f, n));  // the full space

    std::optional<Section> sec;
    if (section_ok && m > 0) {
        std::vector<MultiPoly> exprs;
        for (size_t i = 0; i < m; ++i)
            exprs.push_back(-(gens[i] - MultiPoly::variable(f, n, pivots[i])));
        sec = Section{pivots, exprs};
    }
    AffineVariety X(f, e, n, gens, C.dim(), sec);
    return ConstantTangentVariety{std::move(X), seed, std::move(gs)};
}

// ----------------------------------------------------- Hamming varieties ---

HammingVariety hamming_variety(const Field& f, uint32_t e, uint32_t r) {
    Matrix H = hamming_parity(f, e, r);
    const size_t n = H.cols();
    if (n > kMaxVars) throw budget_error("Hamming length exceeds the variable cap");
    std::vector<MultiPoly> gens;
    for (size_t i = 0; i < r; ++i) {
        MultiPoly fi(f, n);
        for (size_t j = 0; j < n; ++j) {
            if (H.at(i, j).is_zero()) continue;
            fi = fi + MultiPoly::variable(f, n, j) * H.at(i, j);
            if (j >= r + 1) fi = fi + MultiPoly::term(f, n, Monomial::var(j, 2), H.at(i, j));
        }
        gens.push_back(fi);
    }
    // first r columns are the identity: the variety is a graph over the rest
    std::vector<size_t> bound(r);
    for (uint32_t i = 0; i < r; ++i) bound[i] = i;
    std::vector<MultiPoly> exprs;
    for (size_t i = 0; i < r; ++i) exprs.push_back(-(gens[i] - MultiPoly::variable(f, n, i)));
    AffineVariety X(f, e, n, gens, n - r, Section{bound, exprs});
    return HammingVariety{std::move(X), std::move(H)};
}

// ------------------------------------------------------ cyclic families ----

CyclicAssembly cyclic_assembly(const Field& f, size_t n, uint64_t seed) {
    CyclicAssembly out;
    out.specs = divisors_of(f, n);
    for (size_t i = 0; i < out.specs.size(); ++i) {
        LinearCode c = cyclic_code(f, out.specs[i], 1);
        out.components.push_back(constant_tangent_variety(c, std::nullopt, seed + i));
    }
    return out;
}

CyclicPlusNoncyclic cyclic_plus_noncyclic(const Field& f, size_t n, size_t k, size_t M,
                                          uint64_t seed) {
    const uint64_t p = f.characteristic();
    if (k < 1 || k >= n) throw domain_error("dimension must satisfy 1 <= k < n");
    const uint32_t m = splitting_degree(p, n);

    // smallest s with m | s, GF(p^s) inside the ambient field and
    // p^s - C(n,k) >= M
    uint64_t choose = 1;
    for (size_t i = 0; i < k; ++i) choose = choose * (n - i) / (i + 1);
    uint32_t s = 0;
    for (uint32_t cand = m; cand <= f.degree(); cand += m) {
        if (f.degree() % cand != 0) continue;
        uint64_t ps = 1;
        bool over = false;
        for (uint32_t i = 0; i < cand; ++i) {
            ps *= p;
            if (ps > (1ull << 40)) {
                over = true;
                break;
            }
        }
        if (!over && ps >= choose + M) {
            s = cand;
            break;
        }
    }
    if (s == 0) throw budget_error("no feasible GF(p^s) for the requested family inside the ambient field");

    // all cyclic [n,k] codes: divisors of degree n-k
    std::vector<Matrix> mats;
    for (const auto& spec : divisors_of(f, n)) {
        if (spec.g.size() - 1 != n - k) continue;
        mats.push_back(cyclic_code(f, spec, s / m).parity());
    }
    const size_t cyclic_count = mats.size();

    // at least M random non-cyclic codes over GF(p^s)
    std::mt19937_64 rng(seed);
    auto scalars = f.subfield(s);
    size_t found = 0, attempts = 0;
    while (found < M) {
        if (++attempts > 1000 * (M + 1)) throw budget_error("could not sample non-cyclic codes");
        Matrix H(f, n - k, n);
        for (size_t i = 0; i < n - k; ++i)
            for (size_t j = 0; j < n; ++j) H.at(i, j) = scalars[rng() % scalars.size()];
        if (H.rank() != n - k) continue;
        LinearCode c = LinearCode::from_parity(f, s, n, H);
        if (c.is_cyclic()) continue;
        mats.push_back(c.parity());
        ++found;
    }

    // distinct seeded points of GF(p^s)^n
    std::set<std::vector<Element>> pts;
    while (pts.size() < mats.size()) {
        std::vector<Element> a;
        for (size_t j = 0; j < n; ++j) a.push_back(scalars[rng() % scalars.size()]);
        pts.insert(a);
    }

    CodeFamily fam{f, s, std::vector<std::vector<Element>>(pts.begin(), pts.end()), mats};
    CyclicPlusNoncyclic out{fam, interpolate_code_family(fam), s, cyclic_count};
    return out;
}

// --------------------------------------------------- isometry morphisms ----

Morphism isometry_morphism(const std::vector<MultiPoly>& psis, const std::vector<size_t>& perm) {
    if (psis.empty()) throw domain_error("empty component list");
    const Field& f = psis.front().field();
    const size_t n = psis.size();
    if (perm.size() != n) throw domain_error("permutation size mismatch");
    std::vector<bool> seen(n, false);
    for (size_t v : perm) {
        if (v >= n || seen[v]) throw domain_error("not a permutation");
        seen[v] = true;
    }
    const uint32_t p = static_cast<uint32_t>(f.characteristic());

    std::vector<MultiPoly> comps;
    MultiPoly excluded = MultiPoly::constant(f, n, f.one());
    std::vector<MultiPoly> sub;
    for (const auto& psi : psis) {
        if (psi.nvars() != n) throw domain_error("component variable count mismatch");
        sub.push_back(psi.frobenius_substitute(p));
    }
    for (size_t i = 0; i < n; ++i)
        comps.push_back(MultiPoly::variable(f, n, perm[i]) * sub[perm[i]]);
    for (size_t i = 0; i < n; ++i) excluded = excluded * sub[i];
    // smallest GF(p^e) holding every coefficient
    uint32_t e = 1;
    for (const auto& psi : psis)
        for (const auto& [mono, c] : psi.terms()) e = std::lcm(e, c.prime_degree());
    return Morphism{f, e, std::move(comps), std::move(excluded)};
}

Morphism interpolate_isometries(const CodeFamily& fam) {
    for (const auto& H : fam.matrices)
        if (H.det().is_zero()) throw domain_error("singular isometry matrix");
    std::vector<MultiPoly> comps = interpolate_matrix_family(fam, true);
    return Morphism{fam.field, fam.e, std::move(comps), std::nullopt};
}

}  // namespace tancode
