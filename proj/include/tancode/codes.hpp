// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <vector>

#include "tancode/linalg.hpp"

namespace tancode {

/// Codeword enumeration refuses to expand more than 2^20 words.
inline constexpr uint64_t kEnumCap = 1ull << 20;

/**
 * Length-n linear code over the subfield GF(p^sub) of the ambient field,
 * stored by a parity-check matrix canonicalized to reduced row echelon form
 * (zero rows dropped). Codewords c satisfy H c^t = 0; dim = n - rank H.
 */
class LinearCode {
  public:
    static LinearCode from_parity(const Field& f, uint32_t sub, size_t n, const Matrix& H);
    static LinearCode from_generator(const Field& f, uint32_t sub, size_t n, const Matrix& G);

    const Field& field() const { return field_; }
    /// Degree of the code's field over the prime field.
    uint32_t subfield_degree() const { return sub_; }
    size_t length() const { return n_; }
    size_t dim() const { return n_ - h_.rows(); }
    const Matrix& parity() const { return h_; }
    /// Generator matrix: nullspace basis of H (dim x n).
    Matrix generator() const { return h_.rows() ? h_.nullspace() : Matrix::identity(field_, n_); }

    bool contains(const std::vector<Element>& word) const;

    /// Smallest d with d linearly dependent parity columns; cross-checked by
    /// full codeword enumeration whenever q^k <= 2^20. Zero code is an error.
    size_t min_distance() const;
    /// Minimum weight by exhaustive codeword enumeration (the second route).
    size_t min_weight_by_enumeration() const;

    LinearCode dual() const;
    LinearCode puncture(const std::vector<size_t>& gamma) const;
    LinearCode shorten(const std::vector<size_t>& gamma) const;
    LinearCode extend() const;
    LinearCode direct_sum(const LinearCode& other) const;
    LinearCode u_u_plus_v(const LinearCode& other) const;

    /// Invariant under the cyclic shift (x1,...,xn) -> (x2,...,xn,x1).
    bool is_cyclic() const;
    /// d(C) = n-k and d(dual) = k; requires 1 <= k <= n-1.
    bool is_near_mds() const;
    /// The rank-criterion route: d(C) = n-k and every (n-k+1)-column
    /// submatrix of H has maximal rank. Kept independent of is_near_mds.
    bool near_mds_by_rank() const;

    /// Row spaces of the parity matrices coincide over the common extension.
    bool equal_up_to_extension(const LinearCode& other) const;

    /// All q^k codewords (q = p^sub); throws budget_error past the cap.
    std::vector<std::vector<Element>> codewords() const;
    /// Codewords of exact weight w, brute-forced.
    std::vector<std::vector<Element>> words_of_weight(size_t w) const;

  private:
    LinearCode(Field f, uint32_t sub, size_t n, Matrix h);
    Field field_;
    uint32_t sub_;
    size_t n_;
    Matrix h_;
};

size_t hamming_weight(const std::vector<Element>& w);
std::vector<Element> cyclic_shift(const std::vector<Element>& w);

/// Monic divisor g of t^n - 1 over the splitting field GF(sigma),
/// sigma = p^splitting_degree; the generator polynomial of a cyclic code.
struct CyclicSpec {
    size_t n = 0;
    uint32_t splitting_degree = 0;   // m with sigma = p^m
    std::vector<Element> g;          // dense coefficients, monic, deg <= n
};

/// Degree over GF(p) of the splitting field of t^n - 1 (the multiplicative
/// order of p mod n); requires gcd(p, n) = 1.
uint32_t splitting_degree(uint64_t p, size_t n);

/// The set D_{p,n}: all 2^n monic divisors of t^n - 1 over GF(sigma), grouped
/// by nothing but returned sorted by (degree, coefficients).
std::vector<CyclicSpec> divisors_of(const Field& f, size_t n);

/// Cyclic code <g> in GF(sigma^s)[t]/(t^n - 1); dim = n - deg g.
LinearCode cyclic_code(const Field& f, const CyclicSpec& spec, uint32_t s);

/// Parity-check matrix of the [(q^r-1)/(q-1), n-r, 3] Hamming code over
/// GF(q), q = p^e: one column per projective point, ordered so the first r
/// columns are the unit vectors and column r+1 is their (r-1)+(r) sum, the
/// rest following in lexicographic order.
Matrix hamming_parity(const Field& f, uint32_t e, uint32_t r);

}  // namespace tancode
