// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "tancode/gf.hpp"

namespace tancode {

/// Desk-scale caps, enforced with explicit errors.
inline constexpr size_t kMaxVars = 24;
inline constexpr uint32_t kMaxTotalDegree = 64;

/// Exponent vector with trailing zeros normalized away; x^nu.
class Monomial {
  public:
    Monomial() = default;
    explicit Monomial(std::vector<uint32_t> exps);
    /// x_j^k, variables 0-based.
    static Monomial var(size_t j, uint32_t k = 1);

    uint32_t exp(size_t j) const { return j < e_.size() ? e_[j] : 0; }
    size_t nvars_used() const { return e_.size(); }
    uint32_t total_degree() const;
    bool is_one() const { return e_.empty(); }

    Monomial operator*(const Monomial& o) const;
    bool divides(const Monomial& o) const;
    /// this / o; requires o.divides(*this) == false -> throws
    Monomial quotient(const Monomial& o) const;
    static Monomial lcm(const Monomial& a, const Monomial& b);

    bool operator==(const Monomial& o) const { return e_ == o.e_; }
    bool operator!=(const Monomial& o) const { return e_ != o.e_; }
    /// Plain lex with x0 > x1 > ...; the canonical storage order.
    bool operator<(const Monomial& o) const;

    const std::vector<uint32_t>& exps() const { return e_; }

  private:
    std::vector<uint32_t> e_;
};

/// Sparse multivariate polynomial over the ambient field. Immutable value;
/// no zero coefficients are stored.
class MultiPoly {
  public:
    MultiPoly(Field f, size_t nvars);  // zero polynomial
    static MultiPoly constant(const Field& f, size_t nvars, const Element& c);
    static MultiPoly variable(const Field& f, size_t nvars, size_t j);
    static MultiPoly term(const Field& f, size_t nvars, const Monomial& m, const Element& c);

    const Field& field() const { return field_; }
    size_t nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }
    uint32_t total_degree() const;  // 0 for the zero polynomial
    const std::map<Monomial, Element>& terms() const { return terms_; }
    Element coeff(const Monomial& m) const;
    bool is_constant() const;

    MultiPoly operator+(const MultiPoly& o) const;
    MultiPoly operator-(const MultiPoly& o) const;
    MultiPoly operator-() const;
    MultiPoly operator*(const MultiPoly& o) const;
    MultiPoly operator*(const Element& c) const;
    bool operator==(const MultiPoly& o) const;
    bool operator!=(const MultiPoly& o) const { return !(*this == o); }

    Element evaluate(const std::vector<Element>& a) const;
    MultiPoly partial_derivative(size_t j) const;
    std::vector<MultiPoly> gradient() const;
    /// f(x_1^e, ..., x_n^e); with e = char this kills all formal derivatives.
    MultiPoly frobenius_substitute(uint32_t e) const;
    /// Set x_j := value (partial evaluation; variable count unchanged).
    MultiPoly substitute(size_t j, const Element& value) const;
    /// Re-map variable j -> newidx[j] into a space of new_nvars variables;
    /// every used variable must be mapped (no collisions checked beyond caps).
    MultiPoly rename_vars(const std::vector<size_t>& newidx, size_t new_nvars) const;
    /// All coefficients fixed by the p^s-Frobenius.
    bool coefficients_in_subfield(uint32_t s) const;

    /// Grammar-compatible text, deterministic (descending lex monomials).
    std::string str() const;

  private:
    void add_term(const Monomial& m, const Element& c);
    Field field_;
    size_t nvars_;
    std::map<Monomial, Element> terms_;
};

/// Rectangular array of polynomials with a uniform variable count.
struct PolyMatrix {
    size_t rows = 0, cols = 0;
    std::vector<MultiPoly> entries;  // row-major

    const MultiPoly& at(size_t r, size_t c) const { return entries[r * cols + c]; }
    MultiPoly& at(size_t r, size_t c) { return entries[r * cols + c]; }
};

/// Symbolic Jacobian (df_i/dx_j) of a generator list.
PolyMatrix jacobian(const std::vector<MultiPoly>& F);

class Matrix;  // linalg.hpp
/// Jacobian evaluated at a point: the parity-check matrix of the tangent code.
Matrix jacobian_at(const std::vector<MultiPoly>& F, const std::vector<Element>& a);

/**
 * Polynomial text grammar (whitespace insignificant, variables x1..xn):
 *   poly   := ['+'|'-'] term (('+'|'-') term)*
 *   term   := coeff ('*' factor)* | factor ('*' factor)*
 *   factor := 'x' INT ('^' INT)?
 *   coeff  := element literal (INT, g, g^INT, [c0,c1,...])
 */
MultiPoly parse_poly(const Field& f, size_t nvars, std::string_view text);

}  // namespace tancode
