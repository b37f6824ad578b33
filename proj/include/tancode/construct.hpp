// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <tuple>
#include <vector>

#include "tancode/variety.hpp"

namespace tancode {

/// Polynomial self-map of affine n-space, with an optional hypersurface off
/// which its differentials are invertible.
struct Morphism {
    Field field;
    uint32_t e = 1;  // defined over GF(p^e)
    std::vector<MultiPoly> components;
    std::optional<MultiPoly> excluded;

    std::vector<Element> apply(const std::vector<Element>& a) const;
    Matrix differential_at(const std::vector<Element>& a) const;
};

/// Finite family of parity-check (or isometry) matrices indexed by points of
/// GF(q)^n, all of one shape.
struct CodeFamily {
    Field field;
    uint32_t e = 1;
    std::vector<std::vector<Element>> points;
    std::vector<Matrix> matrices;
};

/// Result of the stabilizing construction: an embedded affine k-space whose
/// tangent code at 0 is C and whose every tangent code contains a word
/// supported inside sigma.
struct StabilizedVariety {
    AffineVariety X;
    std::vector<size_t> alpha;            // pivot coordinates (bound by the section)
    size_t sigma_nu = 0;                  // the distinguished coordinate of sigma
    std::vector<Element> universal_word;  // in every tangent code, support inside sigma
    Matrix normalized_parity;             // H with H_alpha = I
};

/// Caller-supplied higher-order coefficients a_{i,s,r} (generator, variable,
/// power r >= 2). Missing entries default to a_{i,s,2} = H_{is}; an empty map
/// with use_default = false yields the linear variety.
using HigherTerms = std::map<std::tuple<size_t, size_t, uint32_t>, Element>;

StabilizedVariety variety_from_code(const LinearCode& C, const std::vector<size_t>& sigma,
                                    const std::optional<HigherTerms>& higher = std::nullopt);

/// Lagrange/Frobenius interpolation of a family of full-rank parity matrices:
/// generators vanish on all of GF(q)^n and have Jacobian H(a) at each a in S.
std::vector<MultiPoly> interpolate_code_family(const CodeFamily& fam);

struct ConstantTangentVariety {
    AffineVariety X;
    uint64_t seed = 0;
    std::vector<MultiPoly> g;  // the chosen g_i, before Frobenius substitution
};

/// Smooth variety with constant Jacobian H: linear part plus g_i(x^p).
/// Default g_i are seeded sparse quadratics in the free coordinates, so the
/// result always carries a section map.
ConstantTangentVariety constant_tangent_variety(const LinearCode& C,
                                                const std::optional<std::vector<MultiPoly>>& g =
                                                    std::nullopt,
                                                uint64_t seed = 1);

struct HammingVariety {
    AffineVariety X;
    Matrix H;
};

/// The embedded affine (n-r)-space whose tangent codes are Hamming codes at
/// q^{n-r} points (char 2) or q(q-1)^{n-r-1} points (odd char).
HammingVariety hamming_variety(const Field& f, uint32_t e, uint32_t r);

struct CyclicAssembly {
    std::vector<CyclicSpec> specs;
    std::vector<ConstantTangentVariety> components;
};

/// One constant-tangent component per divisor of t^n - 1: every tangent code
/// of the disjoint union is cyclic, and every cyclic code of length n appears.
CyclicAssembly cyclic_assembly(const Field& f, size_t n, uint64_t seed = 1);

struct CyclicPlusNoncyclic {
    CodeFamily family;
    std::vector<MultiPoly> generators;
    uint32_t s = 0;             // codes live over GF(p^s)
    size_t cyclic_count = 0;    // leading entries of family are the cyclic codes
};

/// Interpolated family containing every cyclic [n,k] code plus at least M
/// non-cyclic ones, over GF(p^s) with p^s - C(n,k) >= M.
CyclicPlusNoncyclic cyclic_plus_noncyclic(const Field& f, size_t n, size_t k, size_t M,
                                          uint64_t seed = 1);

/// Morphism x_i -> x_{perm(i)} * psi_{perm(i)}(x^p) whose differentials off
/// V(prod psi_i(x^p)) are monomial matrices, hence weight-preserving.
Morphism isometry_morphism(const std::vector<MultiPoly>& psis, const std::vector<size_t>& perm);

/// Interpolates a family of invertible matrices as differentials: the
/// Jacobian of the result at each a in S equals the given matrix exactly.
Morphism interpolate_isometries(const CodeFamily& fam);

}  // namespace tancode
