#include "qck/intlinalg.hpp"
#include "qck/error.hpp"

#include <sstream>
#include <utility>

namespace qck {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, mpz_class(0))
{
}

IntMatrix IntMatrix::identity(std::size_t n)
{
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<long>>& rows)
{
    std::size_t nc = rows.empty() ? 0 : rows[0].size();
    IntMatrix m(rows.size(), nc);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != nc)
            throw Error(ErrorKind::ShapeMismatch, "ragged rows");
        for (std::size_t j = 0; j < nc; ++j)
            m(i, j) = rows[i][j];
    }
    return m;
}

IntMatrix IntMatrix::from_columns(const std::vector<ZVec>& cols, std::size_t rows)
{
    IntMatrix m(rows, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
        if (cols[j].size() != rows)
            throw Error(ErrorKind::ShapeMismatch, "column length");
        for (std::size_t i = 0; i < rows; ++i)
            m(i, j) = cols[j][i];
    }
    return m;
}

IntMatrix IntMatrix::transpose() const
{
    IntMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            t(j, i) = (*this)(i, j);
    return t;
}

IntMatrix IntMatrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const
{
    if (r0 + nr > rows_ || c0 + nc > cols_)
        throw Error(ErrorKind::ShapeMismatch, "block out of range");
    IntMatrix b(nr, nc);
    for (std::size_t i = 0; i < nr; ++i)
        for (std::size_t j = 0; j < nc; ++j)
            b(i, j) = (*this)(r0 + i, c0 + j);
    return b;
}

void IntMatrix::set_block(std::size_t r0, std::size_t c0, const IntMatrix& b)
{
    if (r0 + b.rows() > rows_ || c0 + b.cols() > cols_)
        throw Error(ErrorKind::ShapeMismatch, "block out of range");
    for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j)
            (*this)(r0 + i, c0 + j) = b(i, j);
}

ZVec IntMatrix::column(std::size_t c) const
{
    ZVec v(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        v[i] = (*this)(i, c);
    return v;
}

ZVec IntMatrix::row(std::size_t r) const
{
    return ZVec(data_.begin() + r * cols_, data_.begin() + (r + 1) * cols_);
}

IntMatrix IntMatrix::select_columns(const std::vector<std::size_t>& idx) const
{
    IntMatrix m(rows_, idx.size());
    for (std::size_t j = 0; j < idx.size(); ++j)
        for (std::size_t i = 0; i < rows_; ++i)
            m(i, j) = (*this)(i, idx[j]);
    return m;
}

IntMatrix IntMatrix::select_rows(const std::vector<std::size_t>& idx) const
{
    IntMatrix m(idx.size(), cols_);
    for (std::size_t i = 0; i < idx.size(); ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            m(i, j) = (*this)(idx[i], j);
    return m;
}

bool IntMatrix::is_zero() const
{
    for (const auto& x : data_)
        if (x != 0)
            return false;
    return true;
}

bool IntMatrix::is_skew_symmetric() const
{
    if (!is_square())
        return false;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = i; j < cols_; ++j)
            if ((*this)(i, j) != -(*this)(j, i))
                return false;
    return true;
}

std::vector<std::vector<long>> IntMatrix::to_longs() const
{
    std::vector<std::vector<long>> out(rows_, std::vector<long>(cols_));
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) {
            if (!(*this)(i, j).fits_slong_p())
                throw Error(ErrorKind::InvalidArgument, "entry does not fit in a machine integer");
            out[i][j] = (*this)(i, j).get_si();
        }
    return out;
}

std::string IntMatrix::to_string() const
{
    std::ostringstream os;
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j)
            os << (j ? " " : "") << (*this)(i, j);
        os << "\n";
    }
    return os.str();
}

IntMatrix IntMatrix::operator-() const
{
    IntMatrix r(*this);
    for (auto& x : r.data_)
        x = -x;
    return r;
}

IntMatrix& IntMatrix::operator+=(const IntMatrix& o)
{
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw Error(ErrorKind::ShapeMismatch, "matrix sum");
    for (std::size_t i = 0; i < data_.size(); ++i)
        data_[i] += o.data_[i];
    return *this;
}

IntMatrix& IntMatrix::operator-=(const IntMatrix& o)
{
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw Error(ErrorKind::ShapeMismatch, "matrix difference");
    for (std::size_t i = 0; i < data_.size(); ++i)
        data_[i] -= o.data_[i];
    return *this;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b)
{
    if (a.cols_ != b.rows_)
        throw Error(ErrorKind::ShapeMismatch, "matrix product");
    IntMatrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const mpz_class& x = a(i, k);
            if (x == 0)
                continue;
            for (std::size_t j = 0; j < b.cols_; ++j)
                c(i, j) += x * b(k, j);
        }
    return c;
}

IntMatrix operator*(const mpz_class& s, IntMatrix a)
{
    for (auto& x : a.data_)
        x *= s;
    return a;
}

ZVec operator*(const IntMatrix& a, const ZVec& v)
{
    if (a.cols_ != v.size())
        throw Error(ErrorKind::ShapeMismatch, "matrix-vector product");
    ZVec r(a.rows_, mpz_class(0));
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t j = 0; j < a.cols_; ++j)
            r[i] += a(i, j) * v[j];
    return r;
}

bool operator==(const IntMatrix& a, const IntMatrix& b)
{
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

void IntMatrix::swap_rows(std::size_t i, std::size_t j)
{
    if (i == j)
        return;
    for (std::size_t c = 0; c < cols_; ++c)
        std::swap((*this)(i, c), (*this)(j, c));
}

void IntMatrix::swap_cols(std::size_t i, std::size_t j)
{
    if (i == j)
        return;
    for (std::size_t r = 0; r < rows_; ++r)
        std::swap((*this)(r, i), (*this)(r, j));
}

void IntMatrix::add_row(std::size_t dst, std::size_t src, const mpz_class& t)
{
    if (t == 0)
        return;
    for (std::size_t c = 0; c < cols_; ++c)
        (*this)(dst, c) += t * (*this)(src, c);
}

void IntMatrix::add_col(std::size_t dst, std::size_t src, const mpz_class& t)
{
    if (t == 0)
        return;
    for (std::size_t r = 0; r < rows_; ++r)
        (*this)(r, dst) += t * (*this)(r, src);
}

void IntMatrix::negate_row(std::size_t i)
{
    for (std::size_t c = 0; c < cols_; ++c)
        (*this)(i, c) = -(*this)(i, c);
}

void IntMatrix::negate_col(std::size_t j)
{
    for (std::size_t r = 0; r < rows_; ++r)
        (*this)(r, j) = -(*this)(r, j);
}

IntMatrix hstack(const IntMatrix& a, const IntMatrix& b)
{
    if (a.rows() != b.rows())
        throw Error(ErrorKind::ShapeMismatch, "hstack");
    IntMatrix m(a.rows(), a.cols() + b.cols());
    m.set_block(0, 0, a);
    m.set_block(0, a.cols(), b);
    return m;
}

IntMatrix vstack(const IntMatrix& a, const IntMatrix& b)
{
    if (a.cols() != b.cols())
        throw Error(ErrorKind::ShapeMismatch, "vstack");
    IntMatrix m(a.rows() + b.rows(), a.cols());
    m.set_block(0, 0, a);
    m.set_block(a.rows(), 0, b);
    return m;
}

IntMatrix block_diagonal(const std::vector<IntMatrix>& blocks)
{
    std::size_t r = 0, c = 0;
    for (const auto& b : blocks) {
        r += b.rows();
        c += b.cols();
    }
    IntMatrix m(r, c);
    r = c = 0;
    for (const auto& b : blocks) {
        m.set_block(r, c, b);
        r += b.rows();
        c += b.cols();
    }
    return m;
}

namespace {

// Fraction-free elimination; returns rank and accumulates the sign of the
// row permutation. On exit the last nonzero pivot is the determinant for
// full-rank square input.
std::size_t bareiss(IntMatrix& a, int& sign)
{
    std::size_t n = a.rows(), m = a.cols();
    std::size_t r = 0;
    mpz_class prev = 1;
    sign = 1;
    for (std::size_t c = 0; c < m && r < n; ++c) {
        std::size_t p = r;
        while (p < n && a(p, c) == 0)
            ++p;
        if (p == n)
            continue;
        if (p != r) {
            a.swap_rows(p, r);
            sign = -sign;
        }
        for (std::size_t i = r + 1; i < n; ++i) {
            for (std::size_t j = c + 1; j < m; ++j) {
                a(i, j) = a(r, c) * a(i, j) - a(i, c) * a(r, j);
                mpz_divexact(a(i, j).get_mpz_t(), a(i, j).get_mpz_t(), prev.get_mpz_t());
            }
            a(i, c) = 0;
        }
        prev = a(r, c);
        ++r;
    }
    return r;
}

mpz_class fdiv(const mpz_class& a, const mpz_class& b)
{
    mpz_class q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

// Replace (x, y) by (s x + t y, -(b/g) x + (a/g) y) where g = s a + t b = gcd(a, b).
struct GcdStep {
    mpz_class g, s, t, ag, bg;
    GcdStep(const mpz_class& a, const mpz_class& b)
    {
        // a plain subtraction when a | b, so the column of a is left alone
        if (a != 0 && b % a == 0) {
            g = a;
            s = ag = 1;
            t = 0;
            bg = b / a;
            return;
        }
        mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
        ag = a / g;
        bg = b / g;
    }
};

void combine_cols(IntMatrix& m, std::size_t i, std::size_t j, const GcdStep& st)
{
    for (std::size_t r = 0; r < m.rows(); ++r) {
        mpz_class x = m(r, i), y = m(r, j);
        m(r, i) = st.s * x + st.t * y;
        m(r, j) = -st.bg * x + st.ag * y;
    }
}

void combine_rows(IntMatrix& m, std::size_t i, std::size_t j, const GcdStep& st)
{
    for (std::size_t c = 0; c < m.cols(); ++c) {
        mpz_class x = m(i, c), y = m(j, c);
        m(i, c) = st.s * x + st.t * y;
        m(j, c) = -st.bg * x + st.ag * y;
    }
}

} // namespace

std::size_t rank_over_Q(const IntMatrix& m)
{
    IntMatrix a(m);
    int sign;
    return bareiss(a, sign);
}

mpz_class determinant(const IntMatrix& m)
{
    if (!m.is_square())
        throw Error(ErrorKind::ShapeMismatch, "determinant of non-square matrix");
    std::size_t n = m.rows();
    if (n == 0)
        return 1;
    IntMatrix a(m);
    int sign;
    if (bareiss(a, sign) < n)
        return 0;
    return sign * a(n - 1, n - 1);
}

ZVec SmithForm::invariant_factors() const
{
    ZVec f;
    for (std::size_t i = 0; i < D.rows() && i < D.cols(); ++i)
        if (D(i, i) != 0)
            f.push_back(D(i, i));
    return f;
}

SmithForm smith_normal_form(const IntMatrix& m)
{
    SmithForm res{IntMatrix::identity(m.rows()), m, IntMatrix::identity(m.cols())};
    IntMatrix& A = res.D;
    IntMatrix& U = res.U;
    IntMatrix& V = res.V;
    std::size_t nr = A.rows(), nc = A.cols();
    for (std::size_t t = 0; t < nr && t < nc; ++t) {
        // smallest nonzero entry of the trailing block becomes the pivot
        std::size_t pi = nr, pj = nc;
        for (std::size_t i = t; i < nr; ++i)
            for (std::size_t j = t; j < nc; ++j)
                if (A(i, j) != 0 && (pi == nr || abs(A(i, j)) < abs(A(pi, pj)))) {
                    pi = i;
                    pj = j;
                }
        if (pi == nr)
            break;
        A.swap_rows(t, pi);
        U.swap_rows(t, pi);
        A.swap_cols(t, pj);
        V.swap_cols(t, pj);

        for (;;) {
            bool dirty = false;
            for (std::size_t i = t + 1; i < nr; ++i) {
                if (A(i, t) == 0)
                    continue;
                GcdStep st(A(t, t), A(i, t));
                combine_rows(A, t, i, st);
                combine_rows(U, t, i, st);
            }
            for (std::size_t j = t + 1; j < nc; ++j) {
                if (A(t, j) == 0)
                    continue;
                GcdStep st(A(t, t), A(t, j));
                combine_cols(A, t, j, st);
                combine_cols(V, t, j, st);
            }
            for (std::size_t i = t + 1; i < nr && !dirty; ++i)
                if (A(i, t) != 0)
                    dirty = true;
            if (dirty)
                continue;
            // pivot must divide the whole trailing block
            for (std::size_t i = t + 1; i < nr && !dirty; ++i)
                for (std::size_t j = t + 1; j < nc; ++j)
                    if (A(i, j) % A(t, t) != 0) {
                        A.add_row(t, i, 1);
                        U.add_row(t, i, 1);
                        dirty = true;
                        break;
                    }
            if (!dirty)
                break;
        }
        if (A(t, t) < 0) {
            A.negate_row(t);
            U.negate_row(t);
        }
    }
    return res;
}

ColumnHermite column_hermite_form(const IntMatrix& m)
{
    ColumnHermite res{m, IntMatrix::identity(m.cols()), 0};
    IntMatrix& H = res.H;
    IntMatrix& V = res.V;
    std::size_t nc = H.cols();
    std::size_t p = 0;
    for (std::size_t i = 0; i < H.rows() && p < nc; ++i) {
        for (std::size_t j = p + 1; j < nc; ++j) {
            if (H(i, j) == 0)
                continue;
            GcdStep st(H(i, p), H(i, j));
            combine_cols(H, p, j, st);
            combine_cols(V, p, j, st);
        }
        if (H(i, p) == 0)
            continue;
        if (H(i, p) < 0) {
            H.negate_col(p);
            V.negate_col(p);
        }
        for (std::size_t j = 0; j < p; ++j) {
            mpz_class q = fdiv(H(i, j), H(i, p));
            H.add_col(j, p, -q);
            V.add_col(j, p, -q);
        }
        ++p;
    }
    res.rank = p;
    return res;
}

IntMatrix kernel_basis(const IntMatrix& m)
{
    ColumnHermite h = column_hermite_form(m);
    std::vector<std::size_t> idx;
    for (std::size_t j = h.rank; j < m.cols(); ++j)
        idx.push_back(j);
    return h.V.select_columns(idx);
}

IntMatrix image_basis(const IntMatrix& m)
{
    ColumnHermite h = column_hermite_form(m);
    std::vector<std::size_t> idx;
    for (std::size_t j = 0; j < h.rank; ++j)
        idx.push_back(j);
    return h.H.select_columns(idx);
}

SkewNormalForm skew_normal_form(const IntMatrix& h)
{
    if (!h.is_skew_symmetric())
        throw Error(ErrorKind::NotSkewSymmetric, "input matrix is not skew-symmetric");
    std::size_t n = h.rows();
    IntMatrix H(h);
    IntMatrix Q = IntMatrix::identity(n);

    // H <- E^T H E, Q <- Q E for elementary E
    auto cswap = [&](std::size_t i, std::size_t j) {
        H.swap_rows(i, j);
        H.swap_cols(i, j);
        Q.swap_cols(i, j);
    };
    auto cadd = [&](std::size_t dst, std::size_t src, const mpz_class& t) {
        H.add_col(dst, src, t);
        H.add_row(dst, src, t);
        Q.add_col(dst, src, t);
    };
    auto cneg = [&](std::size_t i) {
        H.negate_row(i);
        H.negate_col(i);
        Q.negate_col(i);
    };
    // move the entry at (i, j), i != j, to position (p, p+1) with positive sign
    auto bring = [&](std::size_t p, std::size_t i, std::size_t j) {
        cswap(p, i);
        if (j == p)
            j = i;
        cswap(p + 1, j);
        if (H(p, p + 1) < 0)
            cneg(p + 1);
    };

    SkewNormalForm res;
    std::size_t p = 0;
    while (p + 1 < n) {
        std::size_t bi = n, bj = n;
        for (std::size_t i = p; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                if (H(i, j) != 0 && (bi == n || abs(H(i, j)) < abs(H(bi, bj)))) {
                    bi = i;
                    bj = j;
                }
        if (bi == n)
            break;
        bring(p, bi, bj);

        for (;;) {
            const mpz_class a = H(p, p + 1);
            for (std::size_t c = p + 2; c < n; ++c) {
                cadd(c, p + 1, -fdiv(H(p, c), a));
                cadd(c, p, fdiv(H(p + 1, c), a));
            }
            std::size_t ri = n, rc = n;
            for (std::size_t c = p + 2; c < n; ++c)
                for (std::size_t r : {p, p + 1})
                    if (H(r, c) != 0 && (ri == n || abs(H(r, c)) < abs(H(ri, rc)))) {
                        ri = r;
                        rc = c;
                    }
            if (ri != n) {
                // a remainder smaller than the pivot: it becomes the new pivot
                bring(p, ri, rc);
                continue;
            }
            bool moved = false;
            for (std::size_t i = p + 2; i < n && !moved; ++i)
                for (std::size_t j = p + 2; j < n; ++j)
                    if (H(i, j) % a != 0) {
                        cadd(p, i, 1);
                        moved = true;
                        break;
                    }
            if (!moved)
                break;
        }
        res.multipliers.push_back(H(p, p + 1));
        p += 2;
    }
    res.zero_dim = n - 2 * res.multipliers.size();
    res.Q = std::move(Q);
    return res;
}

IntMatrix standard_skew_form(const ZVec& multipliers, std::size_t zero_dim)
{
    std::size_t n = 2 * multipliers.size() + zero_dim;
    IntMatrix s(n, n);
    for (std::size_t i = 0; i < multipliers.size(); ++i) {
        s(2 * i, 2 * i + 1) = multipliers[i];
        s(2 * i + 1, 2 * i) = -multipliers[i];
    }
    return s;
}

std::optional<ZVec> solve_integer(const IntMatrix& a, const ZVec& b)
{
    if (a.rows() != b.size())
        throw Error(ErrorKind::ShapeMismatch, "solve: right-hand side length");
    std::size_t n = a.rows(), m = a.cols();
    std::vector<std::vector<mpq_class>> aug(n, std::vector<mpq_class>(m + 1));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < m; ++j)
            aug[i][j] = a(i, j);
        aug[i][m] = b[i];
    }
    std::vector<std::size_t> pivcol;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m && r < n; ++c) {
        std::size_t p = r;
        while (p < n && aug[p][c] == 0)
            ++p;
        if (p == n)
            continue;
        std::swap(aug[p], aug[r]);
        for (std::size_t i = 0; i < n; ++i) {
            if (i == r || aug[i][c] == 0)
                continue;
            mpq_class f = aug[i][c] / aug[r][c];
            for (std::size_t j = c; j <= m; ++j)
                aug[i][j] -= f * aug[r][j];
        }
        pivcol.push_back(c);
        ++r;
    }
    if (r < m)
        throw Error(ErrorKind::InvalidArgument, "solve: matrix lacks full column rank");
    for (std::size_t i = r; i < n; ++i)
        if (aug[i][m] != 0)
            return std::nullopt;
    ZVec x(m);
    for (std::size_t i = 0; i < r; ++i) {
        mpq_class v = aug[i][m] / aug[i][pivcol[i]];
        if (v.get_den() != 1)
            return std::nullopt;
        x[pivcol[i]] = v.get_num();
    }
    return x;
}

IntMatrix inverse_unimodular(const IntMatrix& m)
{
    if (!m.is_square())
        throw Error(ErrorKind::ShapeMismatch, "inverse of non-square matrix");
    mpz_class d = determinant(m);
    if (d != 1 && d != -1)
        throw Error(ErrorKind::InvalidArgument, "matrix is not unimodular");
    std::size_t n = m.rows();
    IntMatrix inv(n, n);
    for (std::size_t j = 0; j < n; ++j) {
        ZVec e(n, mpz_class(0));
        e[j] = 1;
        auto x = solve_integer(m, e);
        if (!x)
            throw Error(ErrorKind::CrossCheckFailed, "unimodular inverse not integral");
        for (std::size_t i = 0; i < n; ++i)
            inv(i, j) = (*x)[i];
    }
    return inv;
}

IntMatrix parse_matrix(std::string_view text)
{
    std::vector<std::vector<mpz_class>> rows;
    std::vector<mpz_class> cur;
    std::string tok;
    std::size_t tok_start = 0;
    auto flush_tok = [&](std::size_t pos) {
        if (tok.empty())
            return;
        mpz_class v;
        if (v.set_str(tok, 10) != 0)
            throw ParseError("bad integer '" + tok + "'", tok_start);
        cur.push_back(v);
        tok.clear();
        (void)pos;
    };
    auto flush_row = [&](std::size_t pos) {
        flush_tok(pos);
        if (!cur.empty())
            rows.push_back(std::move(cur));
        cur.clear();
    };
    for (std::size_t i = 0; i < text.size(); ++i) {
        char ch = text[i];
        if (ch == '\n' || ch == ';')
            flush_row(i);
        else if (ch == ' ' || ch == '\t' || ch == ',' || ch == '\r' || ch == '[' || ch == ']')
            flush_tok(i);
        else if ((ch >= '0' && ch <= '9') || ch == '-' || ch == '+') {
            if (tok.empty())
                tok_start = i;
            tok.push_back(ch);
        } else
            throw ParseError(std::string("unexpected character '") + ch + "'", i);
    }
    flush_row(text.size());
    std::size_t nc = rows.empty() ? 0 : rows[0].size();
    IntMatrix m(rows.size(), nc);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != nc)
            throw Error(ErrorKind::ShapeMismatch, "ragged matrix rows");
        for (std::size_t j = 0; j < nc; ++j)
            m(i, j) = rows[i][j];
    }
    return m;
}

} // namespace qck
