#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace qck {

using ZVec = std::vector<mpz_class>;

// Dense integer matrix, row-major, arbitrary precision entries.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols);

    static IntMatrix identity(std::size_t n);
    static IntMatrix from_rows(const std::vector<std::vector<long>>& rows);
    static IntMatrix from_columns(const std::vector<ZVec>& cols, std::size_t rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    mpz_class& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const mpz_class& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    IntMatrix transpose() const;
    IntMatrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
    void set_block(std::size_t r0, std::size_t c0, const IntMatrix& b);
    ZVec column(std::size_t c) const;
    ZVec row(std::size_t r) const;
    IntMatrix select_columns(const std::vector<std::size_t>& idx) const;
    IntMatrix select_rows(const std::vector<std::size_t>& idx) const;

    bool is_zero() const;
    bool is_square() const { return rows_ == cols_; }
    bool is_skew_symmetric() const;
    std::vector<std::vector<long>> to_longs() const;
    std::string to_string() const;

    IntMatrix operator-() const;
    IntMatrix& operator+=(const IntMatrix& o);
    IntMatrix& operator-=(const IntMatrix& o);
    friend IntMatrix operator+(IntMatrix a, const IntMatrix& b) { return a += b; }
    friend IntMatrix operator-(IntMatrix a, const IntMatrix& b) { return a -= b; }
    friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
    friend IntMatrix operator*(const mpz_class& s, IntMatrix a);
    friend ZVec operator*(const IntMatrix& a, const ZVec& v);
    friend bool operator==(const IntMatrix& a, const IntMatrix& b);

    // elementary operations, used by the normal form routines
    void swap_rows(std::size_t i, std::size_t j);
    void swap_cols(std::size_t i, std::size_t j);
    void add_row(std::size_t dst, std::size_t src, const mpz_class& t);
    void add_col(std::size_t dst, std::size_t src, const mpz_class& t);
    void negate_row(std::size_t i);
    void negate_col(std::size_t j);

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<mpz_class> data_;
};

IntMatrix hstack(const IntMatrix& a, const IntMatrix& b);
IntMatrix vstack(const IntMatrix& a, const IntMatrix& b);
IntMatrix block_diagonal(const std::vector<IntMatrix>& blocks);

std::size_t rank_over_Q(const IntMatrix& m);
mpz_class determinant(const IntMatrix& m);

struct SmithForm {
    IntMatrix U, D, V; // U * M * V == D, U and V unimodular
    ZVec invariant_factors() const; // nonzero diagonal entries
};
SmithForm smith_normal_form(const IntMatrix& m);

// M * V == H, V unimodular, H in column Hermite form: the first `rank`
// columns are nonzero and echelon, the remaining columns are zero.
struct ColumnHermite {
    IntMatrix H, V;
    std::size_t rank = 0;
};
ColumnHermite column_hermite_form(const IntMatrix& m);

// Columns form a basis of the integer kernel; the basis is saturated.
IntMatrix kernel_basis(const IntMatrix& m);
// Columns form a Z-basis of the lattice spanned by the columns of m.
IntMatrix image_basis(const IntMatrix& m);

// Q^T H Q == diag(m_1 S, ..., m_l S, 0) with S = [[0,1],[-1,0]] and
// m_1 | m_2 | ... | m_l, all positive.
struct SkewNormalForm {
    IntMatrix Q;
    ZVec multipliers;
    std::size_t zero_dim = 0;
};
SkewNormalForm skew_normal_form(const IntMatrix& h);
IntMatrix standard_skew_form(const ZVec& multipliers, std::size_t zero_dim);

// Unique rational solution of a x == b, if it exists and is integral.
std::optional<ZVec> solve_integer(const IntMatrix& a, const ZVec& b);
IntMatrix inverse_unimodular(const IntMatrix& m);

// Whitespace separated rows, one row per line; ',' and ';' also accepted
// as separators. Brackets are ignored.
IntMatrix parse_matrix(std::string_view text);

} // namespace qck
