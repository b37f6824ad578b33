// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <vector>

#include "tancode/gf.hpp"

namespace tancode {

/// Dense matrix over the ambient field. Exact arithmetic throughout.
class Matrix {
  public:
    Matrix(Field f, size_t rows, size_t cols);
    static Matrix identity(const Field& f, size_t n);
    static Matrix from_rows(const Field& f, const std::vector<std::vector<Element>>& rows);

    const Field& field() const { return field_; }
    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    Element& at(size_t i, size_t j) { return a_[i * cols_ + j]; }
    const Element& at(size_t i, size_t j) const { return a_[i * cols_ + j]; }
    std::vector<Element> row(size_t i) const;

    Matrix operator*(const Matrix& o) const;
    std::vector<Element> mul_vec(const std::vector<Element>& v) const;  // this * v^t
    Matrix transpose() const;
    Matrix vstack(const Matrix& below) const;
    Matrix select_columns(const std::vector<size_t>& idx) const;
    Matrix select_rows(const std::vector<size_t>& idx) const;

    /// Reduced row echelon form with zero rows dropped; canonical for the row space.
    Matrix rref() const;
    size_t rank() const;
    /// Basis of the right nullspace, one vector per row. Entries stay in any
    /// subfield containing the matrix entries.
    Matrix nullspace() const;
    Element det() const;
    /// Classical adjugate; det * inverse without division.
    Matrix adjugate() const;
    Matrix inverse() const;

    bool operator==(const Matrix& o) const;
    bool operator!=(const Matrix& o) const { return !(*this == o); }

    /// Row spaces coincide (compares canonical RREFs).
    static bool same_row_space(const Matrix& a, const Matrix& b);
    /// v lies in the row space.
    bool row_space_contains(const std::vector<Element>& v) const;
    bool all_entries_in_subfield(uint32_t s) const;

  private:
    Field field_;
    size_t rows_, cols_;
    std::vector<Element> a_;
};

}  // namespace tancode
