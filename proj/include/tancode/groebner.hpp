// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <vector>

#include "tancode/poly.hpp"

namespace tancode {

/// Lexicographic order given by a priority permutation of the variables:
/// x_{priority[0]} > x_{priority[1]} > ...  Every construction here relies on lex,
/// so no other order classes are provided.
struct MonomialOrder {
    std::vector<size_t> priority;

    static MonomialOrder lex(size_t n);
    /// Variables in `first` (sorted ascending) take top priority, the rest
    /// follow in ascending index order.
    static MonomialOrder eliminating(size_t n, std::vector<size_t> first);

    bool less(const Monomial& a, const Monomial& b) const;
    bool greater(const Monomial& a, const Monomial& b) const { return less(b, a); }
};

/// Leading monomial/term under an order; scans the sparse term map.
std::pair<Monomial, Element> leading_term(const MultiPoly& f, const MonomialOrder& ord);

struct DivisionResult {
    std::vector<MultiPoly> quotients;
    MultiPoly remainder;
};

/// Multivariate division: f = sum q_i * divisors_i + r, no monomial of r
/// divisible by any leading monomial of the divisors.
DivisionResult divide(const MultiPoly& f, const std::vector<MultiPoly>& divisors,
                      const MonomialOrder& ord);

/// S(h1,h2) = (x^g / LT h1) h1 - (x^g / LT h2) h2 with x^g = lcm of leading monomials.
MultiPoly s_polynomial(const MultiPoly& h1, const MultiPoly& h2, const MonomialOrder& ord);

struct GroebnerBudget {
    size_t max_basis = 4096;
};

/// Reduced Groebner basis together with a cofactor matrix: basis[k] =
/// sum_j cofactors[k][j] * F[j] exactly, maintained through every reduction.
struct CofactorBasis {
    std::vector<MultiPoly> basis;
    std::vector<std::vector<MultiPoly>> cofactors;
    MonomialOrder order;
};

CofactorBasis buchberger_cofactors(const std::vector<MultiPoly>& F, const MonomialOrder& ord,
                                   const GroebnerBudget& budget = {});

/// Eliminants of the variables in `elim`: the basis elements free of those
/// variables, computed under the eliminating lex order, with their cofactor
/// rows (one row per eliminant, expressing it over the input generators).
struct EliminationResult {
    std::vector<MultiPoly> eliminants;
    std::vector<std::vector<MultiPoly>> cofactors;
    CofactorBasis full;
};

EliminationResult elimination_basis(const std::vector<MultiPoly>& F, std::vector<size_t> elim,
                                    const GroebnerBudget& budget = {});

/// Leading-term criterion for finiteness of the puncturing deleting the
/// gamma coordinates: true iff for every i in gamma the eliminating-order
/// basis has an element whose leading monomial is a pure power of x_i.
bool puncturing_is_finite(const std::vector<MultiPoly>& F, const std::vector<size_t>& gamma,
                          const GroebnerBudget& budget = {});

/// Desk-scale separability heuristic, not a decision procedure: for each
/// i in gamma take the minimal-degree basis element with pure-power leading
/// monomial x_i^d and require its x_i-derivative to be nonzero modulo the
/// ideal. Returns false when the puncturing is not even finite.
bool puncturing_separable_heuristic(const std::vector<MultiPoly>& F,
                                    const std::vector<size_t>& gamma,
                                    const GroebnerBudget& budget = {});

}  // namespace tancode
