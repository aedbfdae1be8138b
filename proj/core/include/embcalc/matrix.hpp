#pragma once

#include "embcalc/int.hpp"

#include <cstddef>
#include <initializer_list>
#include <vector>

namespace embcalc {

/// Dense integer matrix with exact entries. Row-major storage.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), a_(rows * cols, Int(0)) {}
    IntMatrix(std::size_t rows, std::size_t cols, std::initializer_list<long long> entries);

    static IntMatrix identity(std::size_t n);

    /// Build from a list of row vectors (all rows must share `cols`; `rows`
    /// may be empty, giving a 0 x cols matrix).
    static IntMatrix from_rows(const std::vector<std::vector<Int>>& rows, std::size_t cols);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Int& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const Int& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    void swap_rows(std::size_t i, std::size_t j);
    void swap_cols(std::size_t i, std::size_t j);
    /// row i += q * row j
    void add_row(std::size_t i, std::size_t j, const Int& q);
    /// col i += q * col j
    void add_col(std::size_t i, std::size_t j, const Int& q);
    void negate_row(std::size_t i);

    std::vector<Int> row(std::size_t i) const;

    bool operator==(const IntMatrix& other) const = default;

    friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);

    /// Row vector v (length rows()) times this matrix; result has length cols().
    std::vector<Int> row_times(const std::vector<Int>& v) const;
    /// This matrix times column vector v (length cols()); result has length rows().
    std::vector<Int> times_col(const std::vector<Int>& v) const;

    /// Exact determinant (fraction-free Bareiss elimination); square only.
    Int determinant() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Int> a_;
};

} // namespace embcalc
