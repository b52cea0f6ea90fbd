#include "qck/weyl.hpp"
#include "qck/error.hpp"

#include <numeric>
#include <queue>
#include <sstream>

namespace qck {

RootDatum RootDatum::type_a(int n)
{
    if (n < 1)
        throw Error(ErrorKind::IndexOutOfRange, "rank must be positive");
    std::vector<std::vector<int>> c(n, std::vector<int>(n, 0));
    for (int i = 0; i < n; ++i) {
        c[i][i] = 2;
        if (i + 1 < n)
            c[i][i + 1] = c[i + 1][i] = -1;
    }
    return from_cartan(c);
}

RootDatum RootDatum::from_cartan(const std::vector<std::vector<int>>& cartan)
{
    RootDatum rd;
    rd.n_ = static_cast<int>(cartan.size());
    if (rd.n_ < 1)
        throw Error(ErrorKind::IndexOutOfRange, "empty Cartan matrix");
    for (const auto& row : cartan) {
        if (static_cast<int>(row.size()) != rd.n_)
            throw Error(ErrorKind::ShapeMismatch, "Cartan matrix must be square");
        rd.c_.insert(rd.c_.end(), row.begin(), row.end());
    }
    int n = rd.n_;
    auto c = [&](int i, int j) { return rd.c_[i * n + j]; };
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == j && c(i, j) != 2)
                throw Error(ErrorKind::InvalidArgument, "Cartan diagonal must be 2");
            if (i != j && (c(i, j) > 0 || ((c(i, j) == 0) != (c(j, i) == 0))))
                throw Error(ErrorKind::InvalidArgument, "invalid off-diagonal Cartan entry");
        }

    // d_i c_ij = d_j c_ji, solved component by component
    std::vector<mpq_class> d(n, mpq_class(0));
    for (int s = 0; s < n; ++s) {
        if (d[s] != 0)
            continue;
        d[s] = 1;
        std::vector<int> comp{s};
        std::queue<int> todo;
        todo.push(s);
        while (!todo.empty()) {
            int i = todo.front();
            todo.pop();
            for (int j = 0; j < n; ++j) {
                if (j == i || c(i, j) == 0)
                    continue;
                mpq_class dj = d[i] * c(i, j) / mpq_class(c(j, i));
                if (d[j] == 0) {
                    d[j] = dj;
                    comp.push_back(j);
                    todo.push(j);
                } else if (d[j] != dj)
                    throw Error(ErrorKind::InvalidArgument, "Cartan matrix is not symmetrizable");
            }
        }
        mpz_class l = 1, g = 0;
        for (int i : comp)
            l = lcm(l, mpz_class(d[i].get_den()));
        for (int i : comp) {
            d[i] *= l;
            g = gcd(g, mpz_class(d[i].get_num()));
        }
        for (int i : comp)
            d[i] /= g;
    }
    rd.d_.resize(n);
    for (int i = 0; i < n; ++i)
        rd.d_[i] = static_cast<int>(d[i].get_num().get_si());

    rd.type_a_ = true;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            int want = i == j ? 2 : (std::abs(i - j) == 1 ? -1 : 0);
            if (c(i, j) != want)
                rd.type_a_ = false;
        }
    return rd;
}

void RootDatum::check_index(int i) const
{
    if (i < 1 || i > n_)
        throw Error(ErrorKind::IndexOutOfRange,
                    "index " + std::to_string(i) + " outside [1," + std::to_string(n_) + "]");
}

int RootDatum::cartan(int i, int j) const
{
    check_index(i);
    check_index(j);
    return c_[(i - 1) * n_ + (j - 1)];
}

int RootDatum::symmetrizer(int i) const
{
    check_index(i);
    return d_[i - 1];
}

bool Weight::is_zero() const
{
    for (int x : c)
        if (x)
            return false;
    return true;
}

Weight& Weight::operator+=(const Weight& o)
{
    if (c.size() != o.c.size())
        throw Error(ErrorKind::ShapeMismatch, "weight rank mismatch");
    for (std::size_t i = 0; i < c.size(); ++i)
        c[i] += o.c[i];
    return *this;
}

Weight& Weight::operator-=(const Weight& o)
{
    if (c.size() != o.c.size())
        throw Error(ErrorKind::ShapeMismatch, "weight rank mismatch");
    for (std::size_t i = 0; i < c.size(); ++i)
        c[i] -= o.c[i];
    return *this;
}

Weight operator*(int s, Weight a)
{
    for (int& x : a.c)
        x *= s;
    return a;
}

std::string Weight::to_string() const
{
    return word_to_string(c);
}

Weight zero_weight(const RootDatum& rd)
{
    return Weight{IntVec(rd.rank(), 0)};
}

Weight fundamental_weight(const RootDatum& rd, int i)
{
    rd.check_index(i);
    Weight w = zero_weight(rd);
    w.c[i - 1] = 1;
    return w;
}

Weight simple_root(const RootDatum& rd, int i)
{
    rd.check_index(i);
    Weight w = zero_weight(rd);
    for (int k = 1; k <= rd.rank(); ++k)
        w.c[k - 1] = rd.cartan(k, i);
    return w;
}

Weight reflect(const RootDatum& rd, int i, const Weight& mu)
{
    if (static_cast<int>(mu.c.size()) != rd.rank())
        throw Error(ErrorKind::ShapeMismatch, "weight rank mismatch");
    return mu - mu.pair(i) * simple_root(rd, i);
}

Weight apply_word(const RootDatum& rd, const IntVec& word, const Weight& mu)
{
    Weight r = mu;
    for (auto it = word.rbegin(); it != word.rend(); ++it)
        r = reflect(rd, *it, r);
    return r;
}

Weight natural_weight(const RootDatum& rd, int j)
{
    if (!rd.is_type_a())
        throw Error(ErrorKind::InvalidArgument, "natural weights need type A");
    if (j < 1 || j > rd.rank() + 1)
        throw Error(ErrorKind::IndexOutOfRange, "natural weight index");
    Weight w = zero_weight(rd);
    if (j <= rd.rank())
        w.c[j - 1] += 1;
    if (j >= 2)
        w.c[j - 2] -= 1;
    return w;
}

IntVec unit_vector(int n, int i)
{
    IntVec v(n, 0);
    v.at(i - 1) = 1;
    return v;
}

IntVec reflect_root(const RootDatum& rd, int i, const IntVec& root)
{
    // s_i(r) = r - (r, alpha_i^vee) alpha_i
    int p = 0;
    for (int j = 1; j <= rd.rank(); ++j)
        p += root[j - 1] * rd.cartan(i, j);
    IntVec r = root;
    r[i - 1] -= p;
    return r;
}

IntVec reflect_coroot(const RootDatum& rd, int i, const IntVec& coroot)
{
    // s_i(v) = v - (alpha_i, v) alpha_i^vee
    int p = 0;
    for (int j = 1; j <= rd.rank(); ++j)
        p += coroot[j - 1] * rd.cartan(j, i);
    IntVec r = coroot;
    r[i - 1] -= p;
    return r;
}

IntVec apply_word_root(const RootDatum& rd, const IntVec& word, const IntVec& root)
{
    IntVec r = root;
    for (auto it = word.rbegin(); it != word.rend(); ++it)
        r = reflect_root(rd, *it, r);
    return r;
}

IntVec apply_word_coroot(const RootDatum& rd, const IntVec& word, const IntVec& coroot)
{
    IntVec r = coroot;
    for (auto it = word.rbegin(); it != word.rend(); ++it)
        r = reflect_coroot(rd, *it, r);
    return r;
}

bool is_positive_root(const IntVec& root)
{
    bool nonzero = false;
    for (int x : root) {
        if (x < 0)
            return false;
        if (x > 0)
            nonzero = true;
    }
    return nonzero;
}

bool is_reduced_by_roots(const RootDatum& rd, const IntVec& word)
{
    for (int i : word)
        rd.check_index(i);
    for (std::size_t k = 0; k < word.size(); ++k) {
        IntVec prefix(word.begin(), word.begin() + k);
        if (!is_positive_root(apply_word_root(rd, prefix, unit_vector(rd.rank(), word[k]))))
            return false;
    }
    return true;
}

IntVec word_permutation(int n, const IntVec& word)
{
    IntVec p(n + 1);
    std::iota(p.begin(), p.end(), 1);
    // right multiplication by s_i swaps positions i and i+1
    for (int i : word) {
        if (i < 1 || i > n)
            throw Error(ErrorKind::IndexOutOfRange, "letter outside [1,n]");
        std::swap(p[i - 1], p[i]);
    }
    return p;
}

int inversion_count(const IntVec& perm)
{
    int c = 0;
    for (std::size_t i = 0; i < perm.size(); ++i)
        for (std::size_t j = i + 1; j < perm.size(); ++j)
            if (perm[i] > perm[j])
                ++c;
    return c;
}

bool is_reduced(const RootDatum& rd, const IntVec& word)
{
    for (int i : word)
        rd.check_index(i);
    if (rd.is_type_a())
        return inversion_count(word_permutation(rd.rank(), word)) == static_cast<int>(word.size());
    return is_reduced_by_roots(rd, word);
}

IntMatrix weyl_matrix(const RootDatum& rd, const IntVec& word)
{
    int n = rd.rank();
    IntMatrix m(n, n);
    for (int j = 1; j <= n; ++j) {
        Weight w = apply_word(rd, word, fundamental_weight(rd, j));
        for (int i = 0; i < n; ++i)
            m(i, j - 1) = w.c[i];
    }
    return m;
}

int ker_rank(const RootDatum& rd, const IntVec& w1, const IntVec& w2)
{
    return rd.rank() - static_cast<int>(rank_over_Q(weyl_matrix(rd, w1) - weyl_matrix(rd, w2)));
}

std::string word_to_string(const IntVec& w)
{
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < w.size(); ++i)
        os << (i ? "," : "") << w[i];
    os << ")";
    return os.str();
}

std::string SignedWord::to_string() const
{
    return word_to_string(letters);
}

SignedWord parse_word(std::string_view text)
{
    SignedWord w;
    std::size_t i = 0;
    auto skip = [&] {
        while (i < text.size() && (text[i] == ' ' || text[i] == '\t'))
            ++i;
    };
    skip();
    bool paren = i < text.size() && text[i] == '(';
    if (paren)
        ++i;
    skip();
    if (i < text.size() && text[i] == ')') {
        ++i;
        skip();
        if (i != text.size())
            throw ParseError("trailing characters", i);
        return w;
    }
    if (i == text.size()) {
        if (paren)
            throw ParseError("missing ')'", i);
        return w;
    }
    for (;;) {
        skip();
        std::size_t start = i;
        int sign = 1;
        if (i < text.size() && (text[i] == '-' || text[i] == '+')) {
            sign = text[i] == '-' ? -1 : 1;
            ++i;
        }
        if (i >= text.size() || text[i] < '0' || text[i] > '9')
            throw ParseError("expected a letter", i);
        int v = 0;
        while (i < text.size() && text[i] >= '0' && text[i] <= '9') {
            v = v * 10 + (text[i] - '0');
            ++i;
            if (v > 1000)
                throw ParseError("letter too large", start);
        }
        if (v == 0)
            throw ParseError("letter 0 is not allowed", start);
        w.letters.push_back(sign * v);
        skip();
        if (i == text.size())
            break;
        if (text[i] == ',') {
            ++i;
            continue;
        }
        if (text[i] == ')' && paren) {
            ++i;
            paren = false;
            skip();
            if (i != text.size())
                throw ParseError("trailing characters", i);
            break;
        }
        throw ParseError(std::string("unexpected '") + text[i] + "'", i);
    }
    if (paren)
        throw ParseError("missing ')'", text.size());
    return w;
}

DoubleWordSplit split_double_word(const RootDatum& rd, const SignedWord& word)
{
    DoubleWordSplit s;
    for (int l : word.letters) {
        int i = l > 0 ? l : -l;
        rd.check_index(i);
        (l > 0 ? s.w2 : s.w1).push_back(i);
        s.supp.insert(i);
    }
    if (!is_reduced(rd, s.w1))
        throw Error(ErrorKind::NonReducedWord, "negative letters " + word_to_string(s.w1) + " are not reduced");
    if (!is_reduced(rd, s.w2))
        throw Error(ErrorKind::NonReducedWord, "positive letters " + word_to_string(s.w2) + " are not reduced");
    return s;
}

bool is_double_reduced(const RootDatum& rd, const SignedWord& word)
{
    try {
        split_double_word(rd, word);
        return true;
    } catch (const Error&) {
        return false;
    }
}

} // namespace qck
