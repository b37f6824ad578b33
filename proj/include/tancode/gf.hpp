// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "tancode/errors.hpp"

namespace tancode {

class Element;

/**
 * Ambient finite field GF(p^M).
 *
 * One field object fixes the arithmetic for a whole session; every subfield
 * question is answered by Frobenius tests on elements rather than by separate
 * field objects. Immutable and cheap to copy (shared representation).
 *
 * The default modulus is the lexicographically smallest monic irreducible of
 * degree M over GF(p), "smallest" meaning the integer encoding
 * c0 + c1*p + ... + c_{M-1}*p^{M-1} of the non-leading coefficients.
 */
class Field {
  public:
    Field(uint64_t p, uint32_t M);
    /// modulus = c0..cM with cM = 1; must be irreducible over GF(p).
    Field(uint64_t p, uint32_t M, std::vector<uint64_t> modulus);

    uint64_t characteristic() const;
    uint32_t degree() const;  // M
    const std::vector<uint64_t>& modulus() const;
    /// p^M; construction rejects fields with p^M > 2^62.
    uint64_t order() const;

    Element zero() const;
    Element one() const;
    /// Prime-subfield element c mod p.
    Element from_int(uint64_t c) const;
    /// Residue of the indeterminate t.
    Element indeterminate() const;
    /// Smallest primitive element by coefficient encoding; the `g` of
    /// element literals. Computed lazily, order verified against p^M - 1.
    Element generator() const;
    /// Coefficient vector c0..c_{k-1}, k <= M (padded with zeros).
    Element from_coeffs(const std::vector<uint64_t>& c) const;

    /// All elements of GF(p^s) inside the ambient field, s | M.
    /// Deterministic order: 0 first, then powers of the subfield generator.
    std::vector<Element> subfield(uint32_t s) const;

    /// Element literal: "INT", "g", "g^INT" or "[c0,c1,...]".
    Element parse(std::string_view literal) const;

    bool operator==(const Field& o) const;
    bool operator!=(const Field& o) const { return !(*this == o); }

  private:
    struct Data;
    std::shared_ptr<const Data> d_;
    friend class Element;
};

/// Element of the ambient field: residue modulo the field modulus, stored as
/// a coefficient vector of length M over GF(p). Immutable value.
class Element {
  public:
    const Field& field() const { return field_; }
    bool is_zero() const;
    bool is_one() const;
    uint64_t coeff(uint32_t i) const { return c_[i]; }
    const std::vector<uint64_t>& coeffs() const { return c_; }

    Element operator+(const Element& o) const;
    Element operator-(const Element& o) const;
    Element operator-() const;
    Element operator*(const Element& o) const;
    Element operator/(const Element& o) const;
    bool operator==(const Element& o) const;
    bool operator!=(const Element& o) const { return !(*this == o); }
    /// Lexicographic on coefficient vectors; a container ordering, nothing more.
    bool operator<(const Element& o) const { return c_ < o.c_; }

    Element inverse() const;
    Element pow(uint64_t e) const;
    /// x^(p^s), the Frobenius automorphism of degree s.
    Element frobenius(uint32_t s) const;
    /// x in GF(p^s), tested as x^(p^s) == x. Requires s | M.
    bool in_subfield(uint32_t s) const;
    /// Degree of the element over GF(p): least s | M with x^(p^s) == x.
    uint32_t prime_degree() const;

    /// Canonical literal: decimal for M = 1, "[c0,...,c_{M-1}]" otherwise.
    std::string str() const;

  private:
    Element(Field f, std::vector<uint64_t> c) : field_(std::move(f)), c_(std::move(c)) {}
    Field field_;
    std::vector<uint64_t> c_;
    friend class Field;
};

/// delta(a) over GF(q), q = p^e: least s with a_i^(q^s) = a_i for all i.
/// Equals the lcm of the coordinate degrees.
uint32_t definition_degree(const std::vector<Element>& a, uint32_t e);

/// Lagrange basis polynomial L^beta of GF(q), q = p^e, as dense univariate
/// coefficients c[0..q-1] over the ambient field: L^beta(beta) = 1 and
/// L^beta vanishes on the rest of GF(q).
std::vector<Element> lagrange_basis(const Field& f, uint32_t e, const Element& beta);

/// Evaluate dense univariate coefficients at x.
Element eval_univariate(const std::vector<Element>& coeffs, const Element& x);

}  // namespace tancode
