// SPDX-License-Identifier: Apache-2.0
#include "tancode/linalg.hpp"

#include <algorithm>

namespace tancode {

Matrix::Matrix(Field f, size_t rows, size_t cols)
    : field_(std::move(f)), rows_(rows), cols_(cols), a_(rows * cols, field_.zero()) {}

Matrix Matrix::identity(const Field& f, size_t n) {
    Matrix m(f, n, n);
    for (size_t i = 0; i < n; ++i) m.at(i, i) = f.one();
    return m;
}

Matrix Matrix::from_rows(const Field& f, const std::vector<std::vector<Element>>& rows) {
    size_t r = rows.size();
    size_t c = r ? rows.front().size() : 0;
    Matrix m(f, r, c);
    for (size_t i = 0; i < r; ++i) {
        if (rows[i].size() != c) throw domain_error("ragged rows");
        for (size_t j = 0; j < c; ++j) m.at(i, j) = rows[i][j];
    }
    return m;
}

std::vector<Element> Matrix::row(size_t i) const {
    std::vector<Element> r;
    r.reserve(cols_);
    for (size_t j = 0; j < cols_; ++j) r.push_back(at(i, j));
    return r;
}

Matrix Matrix::operator*(const Matrix& o) const {
    if (cols_ != o.rows_) throw domain_error("matrix product shape mismatch");
    Matrix m(field_, rows_, o.cols_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t k = 0; k < cols_; ++k) {
            const Element& x = at(i, k);
            if (x.is_zero()) continue;
            for (size_t j = 0; j < o.cols_; ++j) m.at(i, j) = m.at(i, j) + x * o.at(k, j);
        }
    return m;
}

std::vector<Element> Matrix::mul_vec(const std::vector<Element>& v) const {
    if (v.size() != cols_) throw domain_error("matrix-vector shape mismatch");
    std::vector<Element> r(rows_, field_.zero());
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < cols_; ++j)
            if (!at(i, j).is_zero() && !v[j].is_zero()) r[i] = r[i] + at(i, j) * v[j];
    return r;
}

Matrix Matrix::transpose() const {
    Matrix m(field_, cols_, rows_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < cols_; ++j) m.at(j, i) = at(i, j);
    return m;
}

Matrix Matrix::vstack(const Matrix& below) const {
    if (below.cols_ != cols_) throw domain_error("vstack shape mismatch");
    Matrix m(field_, rows_ + below.rows_, cols_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < cols_; ++j) m.at(i, j) = at(i, j);
    for (size_t i = 0; i < below.rows_; ++i)
        for (size_t j = 0; j < cols_; ++j) m.at(rows_ + i, j) = below.at(i, j);
    return m;
}

Matrix Matrix::select_columns(const std::vector<size_t>& idx) const {
    Matrix m(field_, rows_, idx.size());
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < idx.size(); ++j) {
            if (idx[j] >= cols_) throw domain_error("column index out of range");
            m.at(i, j) = at(i, idx[j]);
        }
    return m;
}

Matrix Matrix::select_rows(const std::vector<size_t>& idx) const {
    Matrix m(field_, idx.size(), cols_);
    for (size_t i = 0; i < idx.size(); ++i) {
        if (idx[i] >= rows_) throw domain_error("row index out of range");
        for (size_t j = 0; j < cols_; ++j) m.at(i, j) = at(idx[i], j);
    }
    return m;
}

namespace {

// in-place Gauss-Jordan; returns pivot columns
std::vector<size_t> gauss_jordan(Matrix& m) {
    std::vector<size_t> pivots;
    size_t r = 0;
    for (size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        size_t sel = r;
        while (sel < m.rows() && m.at(sel, c).is_zero()) ++sel;
        if (sel == m.rows()) continue;
        if (sel != r)
            for (size_t j = 0; j < m.cols(); ++j) std::swap(m.at(sel, j), m.at(r, j));
        Element inv = m.at(r, c).inverse();
        for (size_t j = 0; j < m.cols(); ++j) m.at(r, j) = m.at(r, j) * inv;
        for (size_t i = 0; i < m.rows(); ++i) {
            if (i == r || m.at(i, c).is_zero()) continue;
            Element f = m.at(i, c);
            for (size_t j = 0; j < m.cols(); ++j) m.at(i, j) = m.at(i, j) - f * m.at(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

}  // namespace

Matrix Matrix::rref() const {
    Matrix m = *this;
    auto pivots = gauss_jordan(m);
    Matrix out(field_, pivots.size(), cols_);
    for (size_t i = 0; i < pivots.size(); ++i)
        for (size_t j = 0; j < cols_; ++j) out.at(i, j) = m.at(i, j);
    return out;
}

size_t Matrix::rank() const {
    Matrix m = *this;
    return gauss_jordan(m).size();
}

Matrix Matrix::nullspace() const {
    Matrix m = *this;
    auto pivots = gauss_jordan(m);
    std::vector<bool> is_pivot(cols_, false);
    for (size_t c : pivots) is_pivot[c] = true;
    std::vector<size_t> free_cols;
    for (size_t c = 0; c < cols_; ++c)
        if (!is_pivot[c]) free_cols.push_back(c);
    Matrix basis(field_, free_cols.size(), cols_);
    for (size_t k = 0; k < free_cols.size(); ++k) {
        size_t fc = free_cols[k];
        basis.at(k, fc) = field_.one();
        for (size_t i = 0; i < pivots.size(); ++i) basis.at(k, pivots[i]) = -m.at(i, fc);
    }
    return basis;
}

Element Matrix::det() const {
    if (rows_ != cols_) throw domain_error("determinant of non-square matrix");
    Matrix m = *this;
    Element d = field_.one();
    for (size_t c = 0; c < cols_; ++c) {
        size_t sel = c;
        while (sel < rows_ && m.at(sel, c).is_zero()) ++sel;
        if (sel == rows_) return field_.zero();
        if (sel != c) {
            for (size_t j = 0; j < cols_; ++j) std::swap(m.at(sel, j), m.at(c, j));
            d = -d;
        }
        d = d * m.at(c, c);
        Element inv = m.at(c, c).inverse();
        for (size_t i = c + 1; i < rows_; ++i) {
            if (m.at(i, c).is_zero()) continue;
            Element f = m.at(i, c) * inv;
            for (size_t j = c; j < cols_; ++j) m.at(i, j) = m.at(i, j) - f * m.at(c, j);
        }
    }
    return d;
}

Matrix Matrix::adjugate() const {
    if (rows_ != cols_) throw domain_error("adjugate of non-square matrix");
    size_t n = rows_;
    Matrix adj(field_, n, n);
    if (n == 0) return adj;
    if (n == 1) {
        adj.at(0, 0) = field_.one();
        return adj;
    }
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            std::vector<size_t> ri, ci;
            for (size_t k = 0; k < n; ++k) {
                if (k != i) ri.push_back(k);
                if (k != j) ci.push_back(k);
            }
            Element minor = select_rows(ri).select_columns(ci).det();
            adj.at(j, i) = ((i + j) % 2) ? -minor : minor;
        }
    return adj;
}

Matrix Matrix::inverse() const {
    Element d = det();
    if (d.is_zero()) throw domain_error("matrix is singular");
    Matrix adj = adjugate();
    Element dinv = d.inverse();
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < cols_; ++j) adj.at(i, j) = adj.at(i, j) * dinv;
    return adj;
}

bool Matrix::operator==(const Matrix& o) const {
    return field_ == o.field_ && rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
}

bool Matrix::same_row_space(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.cols_) return false;
    return a.rref() == b.rref();
}

bool Matrix::row_space_contains(const std::vector<Element>& v) const {
    Matrix ext = vstack(Matrix::from_rows(field_, {v}));
    return ext.rank() == rank();
}

bool Matrix::all_entries_in_subfield(uint32_t s) const {
    for (const auto& x : a_)
        if (!x.in_subfield(s)) return false;
    return true;
}

}  // namespace tancode
