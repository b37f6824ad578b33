// SPDX-License-Identifier: Apache-2.0
#include "tancode/variety.hpp"

#include <algorithm>
#include <random>

#include "tancode/util.hpp"

namespace tancode {

AffineVariety::AffineVariety(Field f, uint32_t e, size_t n, std::vector<MultiPoly> gens,
                             std::optional<size_t> dim_hint, std::optional<Section> section)
    : field_(std::move(f)), e_(e), n_(n), gens_(std::move(gens)), dim_hint_(dim_hint),
      section_(std::move(section)) {
    if (e_ == 0 || field_.degree() % e_ != 0) throw domain_error("base field GF(p^e) requires e | M");
    if (n_ > kMaxVars) throw budget_error("variable count exceeds cap");
    if (gens_.empty()) throw domain_error("variety needs at least one generator");
    for (const auto& g : gens_) {
        if (g.nvars() != n_) throw domain_error("generator variable count mismatch");
        if (g.field() != field_) throw domain_error("generator over a different ambient field");
        if (!g.coefficients_in_subfield(e_)) throw domain_error("generator not defined over GF(q)");
    }
    if (section_) {
        if (section_->bound.size() != section_->exprs.size())
            throw domain_error("section: one expression per bound variable");
        for (const auto& ex : section_->exprs) {
            if (ex.nvars() != n_) throw domain_error("section expression variable count mismatch");
            if (!ex.coefficients_in_subfield(e_)) throw domain_error("section not defined over GF(q)");
            for (size_t b : section_->bound)
                for (const auto& [mono, c] : ex.terms())
                    if (mono.exp(b) > 0) throw domain_error("section expression uses a bound variable");
        }
    }
}

bool AffineVariety::contains(const std::vector<Element>& a) const {
    for (const auto& g : gens_)
        if (!g.evaluate(a).is_zero()) return false;
    return true;
}

Matrix AffineVariety::jacobian_at(const std::vector<Element>& a) const {
    return tancode::jacobian_at(gens_, a);
}

uint32_t AffineVariety::delta(const std::vector<Element>& a) const {
    return definition_degree(a, e_);
}

std::vector<std::vector<Element>> AffineVariety::rational_points(uint32_t s, const EnumBudget& budget) const {
    uint32_t sub = e_ * s;
    if (sub == 0 || field_.degree() % sub != 0)
        throw domain_error("GF(q^s) does not embed in the ambient field");
    auto scalars = field_.subfield(sub);
    std::sort(scalars.begin(), scalars.end());
    const uint64_t qs = scalars.size();

    std::vector<std::vector<Element>> points;
    const size_t free_count = section_ ? n_ - section_->bound.size() : n_;
    uint64_t total = 1;
    for (size_t i = 0; i < free_count; ++i) {
        total *= qs;
        if (total > budget.max_points) throw budget_error("point enumeration exceeds budget");
    }

    if (section_) {
        std::vector<bool> is_bound(n_, false);
        for (size_t b : section_->bound) is_bound[b] = true;
        std::vector<size_t> free_vars;
        for (size_t j = 0; j < n_; ++j)
            if (!is_bound[j]) free_vars.push_back(j);
        for_each_tuple(free_vars.size(), qs, [&](const std::vector<uint64_t>& t) {
            std::vector<Element> a(n_, field_.zero());
            for (size_t i = 0; i < free_vars.size(); ++i) a[free_vars[i]] = scalars[t[i]];
            for (size_t i = 0; i < section_->bound.size(); ++i)
                a[section_->bound[i]] = section_->exprs[i].evaluate(a);
            points.push_back(std::move(a));
        });
        return points;
    }

    for_each_tuple(n_, qs, [&](const std::vector<uint64_t>& t) {
        std::vector<Element> a;
        a.reserve(n_);
        for (size_t j = 0; j < n_; ++j) a.push_back(scalars[t[j]]);
        if (contains(a)) points.push_back(std::move(a));
    });
    return points;
}

TangentCode tangent_code(const AffineVariety& X, const std::vector<Element>& a) {
    if (!X.contains(a)) throw domain_error("point does not lie on the variety");
    uint32_t d = X.delta(a);
    LinearCode code = LinearCode::from_parity(X.field(), X.base_degree() * d, X.nvars(), X.jacobian_at(a));
    return TangentCode{a, d, std::move(code)};
}

GradientCode gradient_code(const AffineVariety& X, const std::vector<Element>& a) {
    if (!X.contains(a)) throw domain_error("point does not lie on the variety");
    uint32_t d = X.delta(a);
    LinearCode code =
        LinearCode::from_generator(X.field(), X.base_degree() * d, X.nvars(), X.jacobian_at(a));
    return GradientCode{a, d, std::move(code)};
}

// --------------------------------------------------------------- loci ------

bool in_min_dist_locus(const AffineVariety& X, size_t d, const std::vector<Element>& a) {
    if (!X.contains(a)) throw domain_error("point does not lie on the variety");
    if (d < 1 || d > X.nvars()) throw domain_error("distance parameter out of range");
    Matrix J = X.jacobian_at(a);
    const size_t m = X.ngens();
    // member iff some column d-tuple has every dxd row-minor vanishing
    for (const auto& cols : combinations(X.nvars(), d)) {
        bool all_vanish = true;
        if (d <= m) {
            for (const auto& rows : combinations(m, d)) {
                if (!J.select_rows(rows).select_columns(cols).det().is_zero()) {
                    all_vanish = false;
                    break;
                }
            }
        }
        // d > m: no dxd minors exist, the columns are forced dependent
        if (all_vanish) return true;
    }
    return false;
}

bool in_rank_locus(const AffineVariety& X, size_t r, const std::vector<Element>& a) {
    if (!X.contains(a)) throw domain_error("point does not lie on the variety");
    Matrix J = X.jacobian_at(a);
    const size_t m = X.ngens(), n = X.nvars();
    if (r >= std::min(m, n)) return true;  // no (r+1)-minors of full shape
    for (const auto& rows : combinations(m, r + 1))
        for (const auto& cols : combinations(n, r + 1))
            if (!J.select_rows(rows).select_columns(cols).det().is_zero()) return false;
    return true;
}

bool in_constant_code_locus(const AffineVariety& X, const LinearCode& C, const std::vector<Element>& a) {
    if (!X.contains(a)) throw domain_error("point does not lie on the variety");
    if (C.length() != X.nvars()) throw domain_error("code length differs from the ambient dimension");
    Matrix J = X.jacobian_at(a);
    const Matrix& H = C.parity();
    const size_t r = H.rows();
    const size_t n = X.nvars();
    // every generator row lies in the row space of H: stacked (r+1)-minors vanish
    for (size_t j = 0; j < X.ngens(); ++j) {
        Matrix stacked = H.vstack(Matrix::from_rows(X.field(), {J.row(j)}));
        if (r + 1 > n) continue;  // no minors of that order
        for (const auto& cols : combinations(n, r + 1)) {
            if (!stacked.select_columns(cols).det().is_zero()) return false;
        }
    }
    // rank threshold: dim T_a <= dim C
    if (r == 0) return true;
    return !in_rank_locus(X, r - 1, a);
}

bool in_nmds_locus(const AffineVariety& X, size_t k, const std::vector<Element>& a) {
    if (!X.contains(a)) throw domain_error("point does not lie on the variety");
    const size_t n = X.nvars();
    if (k < 1 || k + 1 > n) throw domain_error("dimension out of range for the near-MDS locus");
    // d(T_a) = n-k: inside X^{(<= n-k)} but outside X^{(<= n-k-1)}
    if (n - k >= 2 && in_min_dist_locus(X, n - k - 1, a)) return false;
    if (!in_min_dist_locus(X, n - k, a)) return false;
    // rank criterion minors: for every (n-k+1)-column tuple some (n-k)-minor survives
    Matrix J = X.jacobian_at(a);
    const size_t m = X.ngens();
    if (m < n - k) return false;
    for (const auto& beta : combinations(n, n - k + 1)) {
        bool some_nonzero = false;
        for (const auto& rows : combinations(m, n - k)) {
            for (const auto& sub : combinations(beta.size(), n - k)) {
                std::vector<size_t> cols;
                for (size_t s : sub) cols.push_back(beta[s]);
                if (!J.select_rows(rows).select_columns(cols).det().is_zero()) {
                    some_nonzero = true;
                    break;
                }
            }
            if (some_nonzero) break;
        }
        if (!some_nonzero) return false;
    }
    return true;
}

bool is_smooth(const AffineVariety& X, const std::vector<Element>& a, size_t k) {
    if (!X.contains(a)) throw domain_error("point does not lie on the variety");
    return X.jacobian_at(a).rank() == X.nvars() - k;
}

bool puncturing_etale_at(const AffineVariety& X, const std::vector<size_t>& gamma,
                         const std::vector<Element>& a) {
    if (!X.contains(a)) throw domain_error("point does not lie on the variety");
    if (gamma.empty()) return true;
    Matrix J = X.jacobian_at(a);
    return J.select_columns(gamma).rank() == gamma.size();
}

size_t estimate_dimension(const AffineVariety& X, uint32_t s, const EnumBudget& budget) {
    size_t max_rank = 0;
    for (const auto& a : X.rational_points(s, budget))
        max_rank = std::max(max_rank, X.jacobian_at(a).rank());
    return X.nvars() - max_rank;
}

// ---------------------------------------------------- variety operations ---

AffineVariety puncture_variety(const AffineVariety& X, const std::vector<size_t>& gamma,
                               const GroebnerBudget& budget) {
    if (gamma.empty() || gamma.size() >= X.nvars()) throw domain_error("bad puncture index set");
    auto er = elimination_basis(X.generators(), gamma, budget);
    const size_t n = X.nvars();
    std::vector<bool> del(n, false);
    for (size_t g : gamma) del[g] = true;
    std::vector<size_t> newidx(n, 0);
    size_t next = 0;
    for (size_t j = 0; j < n; ++j)
        if (!del[j]) newidx[j] = next++;
    std::vector<MultiPoly> gens;
    for (const auto& h : er.eliminants) gens.push_back(h.rename_vars(newidx, next));
    // dense image: the closure is the whole affine space, generated by 0
    if (gens.empty()) gens.push_back(MultiPoly(X.field(), next));
    return AffineVariety(X.field(), X.base_degree(), next, std::move(gens), std::nullopt, std::nullopt);
}

AffineVariety shorten_variety(const AffineVariety& X, const std::vector<size_t>& gamma) {
    if (gamma.empty() || gamma.size() >= X.nvars()) throw domain_error("bad shorten index set");
    const size_t n = X.nvars();
    std::vector<bool> del(n, false);
    for (size_t g : gamma) {
        if (g >= n) throw domain_error("shorten index out of range");
        del[g] = true;
    }
    std::vector<size_t> newidx(n, 0);
    size_t next = 0;
    for (size_t j = 0; j < n; ++j)
        if (!del[j]) newidx[j] = next++;
    std::vector<MultiPoly> gens;
    for (const auto& f : X.generators()) {
        MultiPoly g = f;
        for (size_t v : gamma) g = g.substitute(v, X.field().zero());
        gens.push_back(g.rename_vars(newidx, next));
    }
    return AffineVariety(X.field(), X.base_degree(), next, std::move(gens), std::nullopt, std::nullopt);
}

AffineVariety extend_variety(const AffineVariety& X) {
    const size_t n = X.nvars();
    std::vector<size_t> keep(n);
    for (size_t j = 0; j < n; ++j) keep[j] = j;
    std::vector<MultiPoly> gens;
    for (const auto& f : X.generators()) gens.push_back(f.rename_vars(keep, n + 1));
    MultiPoly hyper(X.field(), n + 1);
    for (size_t j = 0; j <= n; ++j) hyper = hyper + MultiPoly::variable(X.field(), n + 1, j);
    gens.push_back(hyper);
    std::optional<size_t> hint;
    if (X.dim_hint()) hint = *X.dim_hint();
    return AffineVariety(X.field(), X.base_degree(), n + 1, std::move(gens), hint, std::nullopt);
}

AffineVariety product_variety(const AffineVariety& X, const AffineVariety& Y) {
    if (X.field() != Y.field() || X.base_degree() != Y.base_degree())
        throw domain_error("product of varieties over different fields");
    const size_t n = X.nvars(), m = Y.nvars();
    std::vector<size_t> left(n), right(m);
    for (size_t j = 0; j < n; ++j) left[j] = j;
    for (size_t j = 0; j < m; ++j) right[j] = n + j;
    std::vector<MultiPoly> gens;
    for (const auto& f : X.generators()) gens.push_back(f.rename_vars(left, n + m));
    for (const auto& g : Y.generators()) gens.push_back(g.rename_vars(right, n + m));
    std::optional<size_t> hint;
    if (X.dim_hint() && Y.dim_hint()) hint = *X.dim_hint() + *Y.dim_hint();
    return AffineVariety(X.field(), X.base_degree(), n + m, std::move(gens), hint, std::nullopt);
}

AffineVariety fibered_product_variety(const AffineVariety& X, const std::vector<MultiPoly>& g) {
    const size_t n = X.nvars();
    std::vector<size_t> left(n), right(n);
    for (size_t j = 0; j < n; ++j) {
        left[j] = j;
        right[j] = n + j;
    }
    std::vector<MultiPoly> gens;
    for (const auto& f : X.generators()) gens.push_back(f.rename_vars(left, 2 * n));
    for (const auto& gi : g) {
        if (gi.nvars() != n) throw domain_error("morphism component variable count mismatch");
        if (!gi.coefficients_in_subfield(X.base_degree()))
            throw domain_error("morphism not defined over GF(q)");
        gens.push_back(gi.rename_vars(right, 2 * n) - gi.rename_vars(left, 2 * n));
    }
    std::optional<size_t> hint;
    if (X.dim_hint()) hint = *X.dim_hint() + n - g.size();
    return AffineVariety(X.field(), X.base_degree(), 2 * n, std::move(gens), hint, std::nullopt);
}

// --------------------------------------------------------- deformations ----

DeformationStats deformation_sample(const AffineVariety& X, const std::vector<Element>& a, size_t k,
                                    size_t d, uint32_t ext_degree, size_t count, uint64_t seed) {
    if (!X.contains(a)) throw domain_error("point does not lie on the variety");
    const Field& fld = X.field();
    if (ext_degree == 0 || fld.degree() % ext_degree != 0)
        throw domain_error("deformation field GF(p^ext) must embed in the ambient field");

    // non-constant supports S(f_j) and the values a^nu
    struct SupportTerm {
        Monomial mono;
        Element at_a;
    };
    std::vector<std::vector<SupportTerm>> support;
    for (const auto& f : X.generators()) {
        std::vector<SupportTerm> st;
        for (const auto& [m, c] : f.terms()) {
            if (m.is_one()) continue;
            Element v = MultiPoly::term(fld, X.nvars(), m, fld.one()).evaluate(a);
            st.push_back(SupportTerm{m, v});
        }
        support.push_back(std::move(st));
    }

    auto scalars = fld.subfield(ext_degree);
    std::mt19937_64 rng(seed);
    DeformationStats stats;
    stats.samples = count;
    stats.seed = seed;

    for (size_t trial = 0; trial < count; ++trial) {
        std::vector<MultiPoly> deformed;
        for (size_t j = 0; j < support.size(); ++j) {
            MultiPoly F(fld, X.nvars());
            for (const auto& st : support[j]) {
                Element gamma = scalars[rng() % scalars.size()];
                if (gamma.is_zero()) continue;
                F = F + MultiPoly::term(fld, X.nvars(), st.mono, gamma) -
                    MultiPoly::constant(fld, X.nvars(), gamma * st.at_a);
            }
            deformed.push_back(std::move(F));
        }
        bool on = true;
        for (const auto& F : deformed)
            if (!F.evaluate(a).is_zero()) on = false;
        if (on) ++stats.point_on_deformed;

        Matrix J = tancode::jacobian_at(deformed, a);
        if (J.rank() == X.nvars() - k) ++stats.full_rank;

        LinearCode code = LinearCode::from_parity(fld, fld.degree(), X.nvars(), J);
        if (code.dim() >= 1 && code.min_distance() >= d) ++stats.min_dist_kept;
    }
    return stats;
}

}  // namespace tancode
