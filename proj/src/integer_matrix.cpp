#include "zsw/integer_matrix.hpp"

#include <sstream>
#include <stdexcept>
#include <utility>

namespace zsw {

IntegerMatrix::IntegerMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, BigInt(0)) {}

IntegerMatrix::IntegerMatrix(std::initializer_list<std::initializer_list<long>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& row : rows) {
        if (row.size() != cols_)
            throw std::invalid_argument("IntegerMatrix: ragged initializer");
        for (long v : row)
            data_.emplace_back(v);
    }
}

IntegerMatrix IntegerMatrix::identity(std::size_t n) {
    IntegerMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m(i, i) = 1;
    return m;
}

IntegerMatrix IntegerMatrix::diagonal(const std::vector<std::int64_t>& entries) {
    IntegerMatrix m(entries.size(), entries.size());
    for (std::size_t i = 0; i < entries.size(); ++i)
        m(i, i) = static_cast<long>(entries[i]);
    return m;
}

void IntegerMatrix::swap_rows(std::size_t a, std::size_t b) {
    if (a == b)
        return;
    for (std::size_t j = 0; j < cols_; ++j)
        std::swap((*this)(a, j), (*this)(b, j));
}

void IntegerMatrix::swap_cols(std::size_t a, std::size_t b) {
    if (a == b)
        return;
    for (std::size_t i = 0; i < rows_; ++i)
        std::swap((*this)(i, a), (*this)(i, b));
}

void IntegerMatrix::add_row_multiple(std::size_t dst, std::size_t src, const BigInt& factor) {
    if (factor == 0)
        return;
    for (std::size_t j = 0; j < cols_; ++j)
        (*this)(dst, j) += factor * (*this)(src, j);
}

void IntegerMatrix::add_col_multiple(std::size_t dst, std::size_t src, const BigInt& factor) {
    if (factor == 0)
        return;
    for (std::size_t i = 0; i < rows_; ++i)
        (*this)(i, dst) += factor * (*this)(i, src);
}

void IntegerMatrix::negate_row(std::size_t r) {
    for (std::size_t j = 0; j < cols_; ++j)
        (*this)(r, j) = -(*this)(r, j);
}

void IntegerMatrix::negate_col(std::size_t c) {
    for (std::size_t i = 0; i < rows_; ++i)
        (*this)(i, c) = -(*this)(i, c);
}

bool IntegerMatrix::is_diagonal() const {
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if (i != j && (*this)(i, j) != 0)
                return false;
    return true;
}

BigInt IntegerMatrix::determinant() const {
    if (rows_ != cols_)
        throw std::invalid_argument("determinant: matrix is not square");
    const std::size_t n = rows_;
    if (n == 0)
        return 1;
    IntegerMatrix m = *this;
    int sign = 1;
    BigInt prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m(k, k) == 0) {
            std::size_t swap_with = k + 1;
            while (swap_with < n && m(swap_with, k) == 0)
                ++swap_with;
            if (swap_with == n)
                return 0;
            m.swap_rows(k, swap_with);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                BigInt t = m(i, j) * m(k, k) - m(i, k) * m(k, j);
                mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
                m(i, j) = t;
            }
        }
        prev = m(k, k);
    }
    return sign * m(n - 1, n - 1);
}

std::string IntegerMatrix::to_string() const {
    std::ostringstream out;
    out << '[';
    for (std::size_t i = 0; i < rows_; ++i) {
        out << (i ? ",[" : "[");
        for (std::size_t j = 0; j < cols_; ++j)
            out << (j ? "," : "") << (*this)(i, j).get_str();
        out << ']';
    }
    out << ']';
    return out.str();
}

IntegerMatrix operator*(const IntegerMatrix& a, const IntegerMatrix& b) {
    if (a.cols_ != b.rows_)
        throw std::invalid_argument("IntegerMatrix: dimension mismatch in product");
    IntegerMatrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            if (a(i, k) == 0)
                continue;
            for (std::size_t j = 0; j < b.cols_; ++j)
                c(i, j) += a(i, k) * b(k, j);
        }
    return c;
}

bool operator==(const IntegerMatrix& a, const IntegerMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

std::vector<BigInt> SmithForm::diagonal() const {
    std::vector<BigInt> out;
    const std::size_t n = std::min(D.rows(), D.cols());
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i)
        out.push_back(D(i, i));
    return out;
}

namespace {

/// Row operations are mirrored onto U and (inverted, on the right) onto
/// U_inverse; column operations onto V.
class Reducer {
public:
    explicit Reducer(const IntegerMatrix& a)
        : d_(a), u_(IntegerMatrix::identity(a.rows())), v_(IntegerMatrix::identity(a.cols())),
          u_inv_(IntegerMatrix::identity(a.rows())) {}

    SmithForm run() {
        const std::size_t limit = std::min(d_.rows(), d_.cols());
        for (std::size_t t = 0; t < limit; ++t) {
            if (!reduce_block(t))
                break;
        }
        return SmithForm{std::move(u_), std::move(d_), std::move(v_), std::move(u_inv_)};
    }

private:
    void swap_rows(std::size_t a, std::size_t b) {
        d_.swap_rows(a, b);
        u_.swap_rows(a, b);
        u_inv_.swap_cols(a, b);
    }
    void swap_cols(std::size_t a, std::size_t b) {
        d_.swap_cols(a, b);
        v_.swap_cols(a, b);
    }
    // row[dst] += f * row[src]; inverse is col[src] -= f * col[dst] on the right.
    void add_row(std::size_t dst, std::size_t src, const BigInt& f) {
        d_.add_row_multiple(dst, src, f);
        u_.add_row_multiple(dst, src, f);
        u_inv_.add_col_multiple(src, dst, -f);
    }
    void add_col(std::size_t dst, std::size_t src, const BigInt& f) {
        d_.add_col_multiple(dst, src, f);
        v_.add_col_multiple(dst, src, f);
    }
    void negate_row(std::size_t r) {
        d_.negate_row(r);
        u_.negate_row(r);
        u_inv_.negate_col(r);
    }

    /// Brings the block starting at (t, t) to pivot form. Returns false when
    /// the remaining block is zero.
    bool reduce_block(std::size_t t) {
        for (;;) {
            std::size_t pr = 0, pc = 0;
            bool found = false;
            BigInt best;
            for (std::size_t i = t; i < d_.rows(); ++i)
                for (std::size_t j = t; j < d_.cols(); ++j) {
                    const BigInt& e = d_(i, j);
                    if (e == 0)
                        continue;
                    BigInt mag = abs(e);
                    if (!found || mag < best) {
                        best = mag;
                        pr = i;
                        pc = j;
                        found = true;
                    }
                }
            if (!found)
                return false;
            swap_rows(t, pr);
            swap_cols(t, pc);

            bool dirty = false;
            for (std::size_t i = t + 1; i < d_.rows(); ++i) {
                if (d_(i, t) == 0)
                    continue;
                BigInt q;
                mpz_tdiv_q(q.get_mpz_t(), d_(i, t).get_mpz_t(), d_(t, t).get_mpz_t());
                add_row(i, t, -q);
                if (d_(i, t) != 0)
                    dirty = true;
            }
            for (std::size_t j = t + 1; j < d_.cols(); ++j) {
                if (d_(t, j) == 0)
                    continue;
                BigInt q;
                mpz_tdiv_q(q.get_mpz_t(), d_(t, j).get_mpz_t(), d_(t, t).get_mpz_t());
                add_col(j, t, -q);
                if (d_(t, j) != 0)
                    dirty = true;
            }
            if (dirty)
                continue;

            // Pivot must divide the rest of the block; otherwise fold the
            // offending row in and go again.
            bool folded = false;
            for (std::size_t i = t + 1; i < d_.rows() && !folded; ++i)
                for (std::size_t j = t + 1; j < d_.cols(); ++j)
                    if (!mpz_divisible_p(d_(i, j).get_mpz_t(), d_(t, t).get_mpz_t())) {
                        add_row(t, i, 1);
                        folded = true;
                        break;
                    }
            if (folded)
                continue;

            if (d_(t, t) < 0)
                negate_row(t);
            return true;
        }
    }

    IntegerMatrix d_, u_, v_, u_inv_;
};

} // namespace

SmithForm smith_normal_form(const IntegerMatrix& a) {
    return Reducer(a).run();
}

} // namespace zsw
