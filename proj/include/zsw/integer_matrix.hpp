#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace zsw {

using BigInt = mpz_class;

/// Dense row-major matrix of arbitrary-precision integers.
class IntegerMatrix {
public:
    IntegerMatrix() = default;
    IntegerMatrix(std::size_t rows, std::size_t cols);
    IntegerMatrix(std::initializer_list<std::initializer_list<long>> rows);

    static IntegerMatrix identity(std::size_t n);
    static IntegerMatrix diagonal(const std::vector<std::int64_t>& entries);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    BigInt& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const BigInt& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    void swap_rows(std::size_t a, std::size_t b);
    void swap_cols(std::size_t a, std::size_t b);
    /// row[dst] += factor * row[src]
    void add_row_multiple(std::size_t dst, std::size_t src, const BigInt& factor);
    /// col[dst] += factor * col[src]
    void add_col_multiple(std::size_t dst, std::size_t src, const BigInt& factor);
    void negate_row(std::size_t r);
    void negate_col(std::size_t c);

    bool is_diagonal() const;
    /// Fraction-free (Bareiss) determinant; square matrices only.
    BigInt determinant() const;

    std::string to_string() const;

    friend IntegerMatrix operator*(const IntegerMatrix& a, const IntegerMatrix& b);
    friend bool operator==(const IntegerMatrix& a, const IntegerMatrix& b);

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<BigInt> data_;
};

/// U * A * V = D with U, V unimodular and D diagonal, d_1 | d_2 | ... with
/// nonnegative entries (zeros last). `U_inverse` is U^{-1}, tracked during
/// the reduction so callers can lift quotient elements back.
struct SmithForm {
    IntegerMatrix U;
    IntegerMatrix D;
    IntegerMatrix V;
    IntegerMatrix U_inverse;

    std::vector<BigInt> diagonal() const;
};

/// Pivoting picks the smallest nonzero |entry| of the active block, first in
/// row-major scan order, so U and V are reproducible.
SmithForm smith_normal_form(const IntegerMatrix& a);

} // namespace zsw
