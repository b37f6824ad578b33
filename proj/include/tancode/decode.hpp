// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "tancode/variety.hpp"

namespace tancode {

/**
 * Shared decoder tables for every tangent code of one variety: per t-tuple of
 * coordinates the lex eliminants of those variables with their symbolic
 * Jacobians, and per (generator-tuple, coordinate-tuple) pair the determinant
 * Delta_{ji} with the adjugate product P_{ji} = adj(df_j/dx_i) * (df_j/dx).
 * The rational matrix (df_j/dx_i)^{-1} (df_j/dx) is kept as (Delta, P) so all
 * arithmetic stays polynomial; the one division happens at evaluation time.
 */
struct DecoderTables {
    Field field;
    uint32_t e = 1;
    size_t n = 0;
    size_t t = 0;
    std::vector<MultiPoly> gens;

    struct TupleData {
        std::vector<size_t> idx;            // t coordinates, ascending
        std::vector<MultiPoly> eliminants;  // G_{not i}
        PolyMatrix elim_jacobian;           // d G_{not i} / dx, |G| x n
    };
    std::vector<TupleData> tuples;  // lex order over the t-subsets

    struct DetData {
        std::vector<size_t> rows;  // generator tuple j
        std::vector<size_t> cols;  // coordinate tuple i
        MultiPoly delta;           // det(df_j/dx_i)
        PolyMatrix adj_product;    // adj(df_j/dx_i) * (df_j/dx), t x n
    };
    std::vector<DetData> dets;

    const TupleData& tuple(const std::vector<size_t>& idx) const;
};

/// Step 1 + 2 of the decoding scheme: one Buchberger run per coordinate
/// tuple (optionally in parallel), then all determinants and adjugate
/// products. The adjugate identity is spot-checked at seeded random points.
DecoderTables precompute(const AffineVariety& X, size_t t, const GroebnerBudget& budget = {},
                         unsigned jobs = 1, uint64_t check_seed = 1);

/// True iff (d G_{not i}/dx)(a) w^t = 0: w is tangent to the cylinder over
/// the closed puncturing, i.e. w has an error supported by i (when d(T_a) > t).
bool error_support_test(const DecoderTables& tables, const std::vector<Element>& a,
                        const std::vector<Element>& w, const std::vector<size_t>& idx);

struct DecodeResult {
    std::vector<Element> codeword;
    std::vector<Element> error;
    std::vector<size_t> support;  // the accepted coordinate tuple
};

/// Steps 3-5: scan the tuples in lex order, accept the first whose eliminant
/// syndrome vanishes and whose solved correction is tangent (the cylinder
/// test alone can pass spuriously where the puncturing image is singular),
/// then read the error off (Delta, P). Requires d(T_a) >= 2t+1, verified from
/// the tangent code unless certified_d says otherwise. Throws domain_error
/// when w carries no weight <= t error.
DecodeResult decode(const DecoderTables& tables, const std::vector<Element>& a,
                    const std::vector<Element>& w,
                    std::optional<size_t> certified_d = std::nullopt);

/// The weight <= floor((d-1)/2) coset representative of w + T_a when one
/// exists within the table budget t; nullopt otherwise. Total function.
std::optional<std::vector<Element>> coset_leader(const DecoderTables& tables,
                                                 const std::vector<Element>& a,
                                                 const std::vector<Element>& w);

}  // namespace tancode
