#include "embcalc/matrix.hpp"

#include <stdexcept>
#include <utility>

namespace embcalc {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols, std::initializer_list<long long> entries)
    : rows_(rows), cols_(cols) {
    if (entries.size() != rows * cols)
        throw std::invalid_argument("IntMatrix: entry count does not match dimensions");
    a_.reserve(entries.size());
    for (long long e : entries) a_.emplace_back(e);
}

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<Int>>& rows, std::size_t cols) {
    IntMatrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != cols)
            throw std::invalid_argument("IntMatrix: row length mismatch");
        for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = rows[i][j];
    }
    return m;
}

void IntMatrix::swap_rows(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t c = 0; c < cols_; ++c) std::swap(at(i, c), at(j, c));
}

void IntMatrix::swap_cols(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t r = 0; r < rows_; ++r) std::swap(at(r, i), at(r, j));
}

void IntMatrix::add_row(std::size_t i, std::size_t j, const Int& q) {
    for (std::size_t c = 0; c < cols_; ++c) at(i, c) += q * at(j, c);
}

void IntMatrix::add_col(std::size_t i, std::size_t j, const Int& q) {
    for (std::size_t r = 0; r < rows_; ++r) at(r, i) += q * at(r, j);
}

void IntMatrix::negate_row(std::size_t i) {
    for (std::size_t c = 0; c < cols_; ++c) at(i, c) = -at(i, c);
}

std::vector<Int> IntMatrix::row(std::size_t i) const {
    std::vector<Int> out(cols_);
    for (std::size_t c = 0; c < cols_; ++c) out[c] = at(i, c);
    return out;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols() != b.rows())
        throw std::invalid_argument("IntMatrix: product dimension mismatch");
    IntMatrix out(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Int& aik = a.at(i, k);
            if (aik == 0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) out.at(i, j) += aik * b.at(k, j);
        }
    return out;
}

std::vector<Int> IntMatrix::row_times(const std::vector<Int>& v) const {
    if (v.size() != rows_)
        throw std::invalid_argument("IntMatrix: vector length mismatch (row form)");
    std::vector<Int> out(cols_, Int(0));
    for (std::size_t i = 0; i < rows_; ++i) {
        if (v[i] == 0) continue;
        for (std::size_t j = 0; j < cols_; ++j) out[j] += v[i] * at(i, j);
    }
    return out;
}

std::vector<Int> IntMatrix::times_col(const std::vector<Int>& v) const {
    if (v.size() != cols_)
        throw std::invalid_argument("IntMatrix: vector length mismatch (column form)");
    std::vector<Int> out(rows_, Int(0));
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if (v[j] != 0) out[i] += at(i, j) * v[j];
    return out;
}

Int IntMatrix::determinant() const {
    if (rows_ != cols_) throw std::invalid_argument("determinant: matrix not square");
    const std::size_t n = rows_;
    if (n == 0) return 1;
    IntMatrix m = *this;
    Int sign = 1;
    Int prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m.at(k, k) == 0) {
            std::size_t p = k + 1;
            while (p < n && m.at(p, k) == 0) ++p;
            if (p == n) return 0;
            m.swap_rows(k, p);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                m.at(i, j) = (m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j)) / prev;
        prev = m.at(k, k);
    }
    return sign * m.at(n - 1, n - 1);
}

} // namespace embcalc
