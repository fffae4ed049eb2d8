#pragma once

#include <cstddef>
#include <vector>

#include "toric/core.hpp"

namespace toric {

/// Dense row-major integer matrix.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}

    static IntMatrix from_rows(const std::vector<IntVec>& rows, std::size_t cols) {
        IntMatrix m(rows.size(), cols);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].size() != cols) throw DomainError("ragged row in matrix construction");
            for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
        }
        return m;
    }

    static IntMatrix from_rows(const std::vector<IntVec>& rows) {
        if (rows.empty()) return {};
        return from_rows(rows, rows.front().size());
    }

    /// Matrix whose columns are the given vectors.
    static IntMatrix from_columns(const std::vector<IntVec>& cols, std::size_t height) {
        IntMatrix m(height, cols.size());
        for (std::size_t j = 0; j < cols.size(); ++j) {
            if (cols[j].size() != height) throw DomainError("ragged column in matrix construction");
            for (std::size_t i = 0; i < height; ++i) m(i, j) = cols[j][i];
        }
        return m;
    }

    static IntMatrix identity(std::size_t n) {
        IntMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Int& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    Int operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    IntVec row(std::size_t i) const {
        return IntVec(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                      data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
    }

    IntVec column(std::size_t j) const {
        IntVec c(rows_);
        for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
        return c;
    }

    IntVec operator*(const IntVec& v) const {
        if (v.size() != cols_) throw DomainError("dimension mismatch in matrix-vector product");
        IntVec r(rows_, 0);
        for (std::size_t i = 0; i < rows_; ++i) {
            Int s = 0;
            for (std::size_t j = 0; j < cols_; ++j)
                if (v[j] != 0 && (*this)(i, j) != 0) s = checked_add(s, checked_mul((*this)(i, j), v[j]));
            r[i] = s;
        }
        return r;
    }

    IntMatrix operator*(const IntMatrix& o) const {
        if (cols_ != o.rows_) throw DomainError("dimension mismatch in matrix product");
        IntMatrix r(rows_, o.cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t k = 0; k < cols_; ++k) {
                Int a = (*this)(i, k);
                if (a == 0) continue;
                for (std::size_t j = 0; j < o.cols_; ++j)
                    r(i, j) = checked_add(r(i, j), checked_mul(a, o(k, j)));
            }
        return r;
    }

    bool operator==(const IntMatrix&) const = default;

    const std::vector<Int>& data() const { return data_; }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Int> data_;
};

/// Rank over Q via fraction-free elimination.
inline std::size_t rank(const IntMatrix& a) {
    std::vector<IntVec> m;
    for (std::size_t i = 0; i < a.rows(); ++i) m.push_back(a.row(i));
    std::size_t r = 0;
    for (std::size_t c = 0; c < a.cols() && r < m.size(); ++c) {
        std::size_t p = r;
        while (p < m.size() && m[p][c] == 0) ++p;
        if (p == m.size()) continue;
        std::swap(m[p], m[r]);
        for (std::size_t i = r + 1; i < m.size(); ++i) {
            if (m[i][c] == 0) continue;
            Int g = std::gcd(m[r][c], m[i][c]);
            Int fr = m[i][c] / g, fi = m[r][c] / g;
            for (std::size_t j = c; j < a.cols(); ++j)
                m[i][j] = checked_sub(checked_mul(fi, m[i][j]), checked_mul(fr, m[r][j]));
            Int h = 0;
            for (Int x : m[i]) h = std::gcd(h, x);
            if (h > 1)
                for (Int& x : m[i]) x /= h;
        }
        ++r;
    }
    return r;
}

}  // namespace toric
