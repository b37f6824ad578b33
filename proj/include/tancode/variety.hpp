// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "tancode/codes.hpp"
#include "tancode/groebner.hpp"
#include "tancode/poly.hpp"

namespace tancode {

/// Graph parameterization: the variety is the graph of polynomial expressions
/// for the bound variables over the free ones, so rational points enumerate
/// in q^(s * #free) steps instead of q^(s * n).
struct Section {
    std::vector<size_t> bound;     // bound variable indices
    std::vector<MultiPoly> exprs;  // one per bound variable, free variables only
};

struct EnumBudget {
    uint64_t max_points = 1ull << 24;
};

/**
 * Affine variety V(f_1..f_m) in n variables, defined over GF(q), q = p^e,
 * inside the ambient field. All tangent/gradient code data derives from the
 * generator list.
 */
class AffineVariety {
  public:
    AffineVariety(Field f, uint32_t e, size_t n, std::vector<MultiPoly> gens,
                  std::optional<size_t> dim_hint = std::nullopt,
                  std::optional<Section> section = std::nullopt);

    const Field& field() const { return field_; }
    uint32_t base_degree() const { return e_; }  // q = p^e
    size_t nvars() const { return n_; }
    size_t ngens() const { return gens_.size(); }
    const std::vector<MultiPoly>& generators() const { return gens_; }
    std::optional<size_t> dim_hint() const { return dim_hint_; }
    const std::optional<Section>& section() const { return section_; }

    bool contains(const std::vector<Element>& a) const;
    Matrix jacobian_at(const std::vector<Element>& a) const;
    /// delta(a) over GF(q).
    uint32_t delta(const std::vector<Element>& a) const;

    /// Exact point set X(GF(q^s)); uses the section map when available,
    /// exhaustive scan otherwise.
    std::vector<std::vector<Element>> rational_points(uint32_t s, const EnumBudget& budget = {}) const;

  private:
    Field field_;
    uint32_t e_;
    size_t n_;
    std::vector<MultiPoly> gens_;
    std::optional<size_t> dim_hint_;
    std::optional<Section> section_;
};

/// Finite Zariski tangent space at a, as a linear code over GF(q^delta(a))
/// with the Jacobian as parity-check matrix.
struct TangentCode {
    std::vector<Element> point;
    uint32_t delta;
    LinearCode code;
};

TangentCode tangent_code(const AffineVariety& X, const std::vector<Element>& a);

/// Row span of the Jacobian at a: the dual of the tangent code.
struct GradientCode {
    std::vector<Element> point;
    uint32_t delta;
    LinearCode code;
};

GradientCode gradient_code(const AffineVariety& X, const std::vector<Element>& a);

/// Membership in the determinantal locus X^{(<= d)}: there is a d-tuple of
/// columns i such that every dxd generator-row minor on those columns
/// vanishes at a. Evaluates the minors directly.
bool in_min_dist_locus(const AffineVariety& X, size_t d, const std::vector<Element>& a);
/// rk Jacobian(a) <= r via vanishing of all (r+1)-minors.
bool in_rank_locus(const AffineVariety& X, size_t r, const std::vector<Element>& a);
/// Tangent code coincides with C after scalar extension: stacked-minor
/// equations plus the rank threshold.
bool in_constant_code_locus(const AffineVariety& X, const LinearCode& C, const std::vector<Element>& a);
/// Near-MDS locus for a k-dimensional variety (minor conditions).
bool in_nmds_locus(const AffineVariety& X, size_t k, const std::vector<Element>& a);

/// rk Jacobian(a) = n - k.
bool is_smooth(const AffineVariety& X, const std::vector<Element>& a, size_t k);
/// No nonzero tangent word supported inside gamma: the gamma columns of the
/// Jacobian are independent.
bool puncturing_etale_at(const AffineVariety& X, const std::vector<size_t>& gamma,
                         const std::vector<Element>& a);
/// Estimated dimension: n minus the maximal Jacobian rank over X(GF(q^s)).
size_t estimate_dimension(const AffineVariety& X, uint32_t s, const EnumBudget& budget = {});

/// Closure of the image of the puncturing: eliminates x_gamma and renumbers.
AffineVariety puncture_variety(const AffineVariety& X, const std::vector<size_t>& gamma,
                               const GroebnerBudget& budget = {});
/// Adds x_i = 0 for i in gamma, then deletes those coordinates.
AffineVariety shorten_variety(const AffineVariety& X, const std::vector<size_t>& gamma);
/// Generators plus x_1 + ... + x_n + x_{n+1}.
AffineVariety extend_variety(const AffineVariety& X);
AffineVariety product_variety(const AffineVariety& X, const AffineVariety& Y);
/// X x_{g(X)} A^n: F(x) together with g_i(y) - g_i(x) in 2n variables.
AffineVariety fibered_product_variety(const AffineVariety& X, const std::vector<MultiPoly>& g);

struct DeformationStats {
    size_t samples = 0;
    size_t point_on_deformed = 0;  // a in X_gamma
    size_t full_rank = 0;          // Jacobian rank n-k at a
    size_t min_dist_kept = 0;      // d(T_a(X_gamma)) >= d
    uint64_t seed = 0;
};

/// Samples `count` coefficient tuples gamma from the deformation space of the
/// generators at a (supported on their non-constant monomials), drawing
/// entries from GF(p^ext_degree), and reports how often the deformed variety
/// keeps the point, the rank, and the minimum distance d.
DeformationStats deformation_sample(const AffineVariety& X, const std::vector<Element>& a, size_t k,
                                    size_t d, uint32_t ext_degree, size_t count, uint64_t seed);

}  // namespace tancode
