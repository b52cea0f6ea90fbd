#include "qck/qtorus.hpp"
#include "qck/error.hpp"

#include <sstream>

namespace qck {

namespace {

void trim(IntVec& v)
{
    while (!v.empty() && v.back() == 0)
        v.pop_back();
}

IntVec add_vec(const IntVec& a, const IntVec& b)
{
    IntVec r(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        r[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i)
        r[i] += b[i];
    trim(r);
    return r;
}

void check_same_shape(const QTorusElement& a, const QTorusElement& b)
{
    if (a.D() != b.D())
        throw Error(ErrorKind::SizeMismatch, "quantum torus elements of different shape");
}

} // namespace

Coefficient::Coefficient(long c)
{
    if (c != 0)
        terms_[CoeffKey{}] = c;
}

Coefficient::Coefficient(const mpq_class& c)
{
    if (c != 0)
        terms_[CoeffKey{}] = c;
}

Coefficient Coefficient::monomial(int q, IntVec gamma, const mpq_class& c)
{
    Coefficient r;
    trim(gamma);
    if (c != 0)
        r.terms_[CoeffKey{q, std::move(gamma)}] = c;
    return r;
}

Coefficient Coefficient::gamma(std::size_t index, int exponent)
{
    IntVec g(index + 1, 0);
    g[index] = exponent;
    return monomial(0, g);
}

void Coefficient::add(const CoeffKey& k, const mpq_class& c)
{
    if (c == 0)
        return;
    auto [it, fresh] = terms_.try_emplace(k, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0)
            terms_.erase(it);
    }
}

Coefficient Coefficient::operator-() const
{
    Coefficient r(*this);
    for (auto& [k, c] : r.terms_)
        c = -c;
    return r;
}

Coefficient& Coefficient::operator+=(const Coefficient& o)
{
    for (const auto& [k, c] : o.terms_)
        add(k, c);
    return *this;
}

Coefficient& Coefficient::operator-=(const Coefficient& o)
{
    for (const auto& [k, c] : o.terms_)
        add(k, -c);
    return *this;
}

Coefficient multiply_shifted(const Coefficient& a, const Coefficient& b, int e)
{
    Coefficient r;
    for (const auto& [ka, ca] : a.terms_)
        for (const auto& [kb, cb] : b.terms_)
            r.add(CoeffKey{ka.q + kb.q + e, add_vec(ka.gamma, kb.gamma)}, ca * cb);
    return r;
}

Coefficient operator*(const Coefficient& a, const Coefficient& b)
{
    return multiply_shifted(a, b, 0);
}

Coefficient& Coefficient::operator*=(const Coefficient& o)
{
    *this = *this * o;
    return *this;
}

Coefficient Coefficient::shift_q(int e) const
{
    Coefficient r;
    for (const auto& [k, c] : terms_)
        r.terms_.emplace(CoeffKey{k.q + e, k.gamma}, c);
    return r;
}

std::optional<Coefficient> Coefficient::inverse() const
{
    if (!is_monomial())
        return std::nullopt;
    const auto& [k, c] = *terms_.begin();
    IntVec g = k.gamma;
    for (int& x : g)
        x = -x;
    return monomial(-k.q, g, 1 / c);
}

std::string Coefficient::to_string() const
{
    if (terms_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : terms_) {
        mpq_class v = c;
        if (!first)
            os << (v < 0 ? " - " : " + ");
        else if (v < 0)
            os << "-";
        first = false;
        if (v < 0)
            v = -v;
        std::vector<std::string> parts;
        bool trivial = k.q == 0 && k.gamma.empty();
        if (v != 1 || trivial)
            parts.push_back(v.get_str());
        if (k.q == 1)
            parts.push_back("q");
        else if (k.q != 0)
            parts.push_back("q^" + std::to_string(k.q));
        for (std::size_t i = 0; i < k.gamma.size(); ++i) {
            if (k.gamma[i] == 0)
                continue;
            std::string s = "g" + std::to_string(i + 1);
            if (k.gamma[i] != 1)
                s += "^" + std::to_string(k.gamma[i]);
            parts.push_back(s);
        }
        for (std::size_t i = 0; i < parts.size(); ++i)
            os << (i ? "*" : "") << parts[i];
    }
    return os.str();
}

int q_commute_index(const Monomial& u, const Monomial& v, const IntVec& D)
{
    int e = 0;
    for (std::size_t k = 0; k < D.size(); ++k)
        e += D[k] * (u.a[k] * v.b[k] - v.a[k] * u.b[k]);
    return e;
}

std::pair<Monomial, int> multiply_monomials(const Monomial& u, const Monomial& v, const IntVec& D)
{
    std::size_t m = D.size();
    Monomial r{IntVec(m), IntVec(m)};
    int e = 0;
    for (std::size_t k = 0; k < m; ++k) {
        r.a[k] = u.a[k] + v.a[k];
        r.b[k] = u.b[k] + v.b[k];
        e -= D[k] * u.b[k] * v.a[k];
    }
    return {std::move(r), e};
}

QTorusElement::QTorusElement(IntVec D) : D_(std::move(D))
{
}

QTorusElement QTorusElement::one(const IntVec& D)
{
    return monomial(D, Monomial{IntVec(D.size(), 0), IntVec(D.size(), 0)});
}

QTorusElement QTorusElement::monomial(const IntVec& D, Monomial mono, const Coefficient& c)
{
    QTorusElement r(D);
    r.add_term(mono, c);
    return r;
}

void QTorusElement::add_term(const Monomial& mono, const Coefficient& c)
{
    if (mono.a.size() != D_.size() || mono.b.size() != D_.size())
        throw Error(ErrorKind::SizeMismatch, "monomial length does not match the number of factors");
    if (c.is_zero())
        return;
    auto [it, fresh] = terms_.try_emplace(mono, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero())
            terms_.erase(it);
    }
}

std::optional<std::pair<Monomial, Coefficient>> QTorusElement::as_unit() const
{
    if (terms_.size() != 1 || !terms_.begin()->second.is_monomial())
        return std::nullopt;
    return *terms_.begin();
}

std::set<IntVec> QTorusElement::supp_x() const
{
    std::set<IntVec> s;
    for (const auto& [mono, c] : terms_)
        s.insert(mono.a);
    return s;
}

std::size_t QTorusElement::multiplicity(const IntVec& a) const
{
    std::size_t n = 0;
    for (const auto& [mono, c] : terms_)
        if (mono.a == a)
            ++n;
    return n;
}

QTorusElement QTorusElement::pow(int e) const
{
    if (e < 0)
        return inverse_unit(*this).pow(-e);
    QTorusElement r = one(D_);
    QTorusElement base = *this;
    while (e > 0) {
        if (e & 1)
            r = r * base;
        e >>= 1;
        if (e)
            base = base * base;
    }
    return r;
}

QTorusElement QTorusElement::operator-() const
{
    QTorusElement r(*this);
    for (auto& [mono, c] : r.terms_)
        c = -c;
    return r;
}

QTorusElement& QTorusElement::operator+=(const QTorusElement& o)
{
    check_same_shape(*this, o);
    for (const auto& [mono, c] : o.terms_)
        add_term(mono, c);
    return *this;
}

QTorusElement& QTorusElement::operator-=(const QTorusElement& o)
{
    check_same_shape(*this, o);
    for (const auto& [mono, c] : o.terms_)
        add_term(mono, -c);
    return *this;
}

QTorusElement operator*(const QTorusElement& a, const QTorusElement& b)
{
    check_same_shape(a, b);
    QTorusElement r(a.D_);
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) {
            auto [mono, e] = multiply_monomials(ma, mb, a.D_);
            r.add_term(mono, multiply_shifted(ca, cb, e));
        }
    return r;
}

QTorusElement operator*(const Coefficient& c, const QTorusElement& a)
{
    QTorusElement r(a.D_);
    for (const auto& [mono, ca] : a.terms_)
        r.add_term(mono, c * ca);
    return r;
}

std::string QTorusElement::to_string() const
{
    if (terms_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [mono, c] : terms_) {
        if (!first)
            os << " + ";
        first = false;
        os << "(" << c.to_string() << ")";
        for (std::size_t k = 0; k < D_.size(); ++k) {
            os << (k ? " (x) " : " ");
            std::string f;
            if (mono.a[k] == 1)
                f += "x";
            else if (mono.a[k] != 0)
                f += "x^" + std::to_string(mono.a[k]);
            if (mono.b[k] == 1)
                f += "y";
            else if (mono.b[k] != 0)
                f += "y^" + std::to_string(mono.b[k]);
            os << (f.empty() ? "1" : f);
        }
    }
    return os.str();
}

QTorusElement inverse_unit(const QTorusElement& u)
{
    auto unit = u.as_unit();
    if (!unit)
        throw Error(ErrorKind::ExpressionNotUnit, "element is not a unit: " + u.to_string());
    const auto& [mono, c] = *unit;
    Monomial inv{mono.a, mono.b};
    int e = 0;
    for (std::size_t k = 0; k < u.factors(); ++k) {
        inv.a[k] = -inv.a[k];
        inv.b[k] = -inv.b[k];
        e -= u.D()[k] * mono.b[k] * mono.a[k];
    }
    // (x^a y^b)(x^-a y^-b) = q^{b^T D a}, hence the compensating q-power
    return QTorusElement::monomial(u.D(), inv, c.inverse()->shift_q(e));
}

QTorusElement extend_factor(const QTorusElement& u, int d, int a, int b)
{
    IntVec D = u.D();
    D.push_back(d);
    QTorusElement r(D);
    for (const auto& [mono, c] : u.terms()) {
        Monomial m2 = mono;
        m2.a.push_back(a);
        m2.b.push_back(b);
        r.add_term(m2, c);
    }
    return r;
}

IntMatrix center_basis(const IntMatrix& H)
{
    if (!H.is_skew_symmetric())
        throw Error(ErrorKind::NotSkewSymmetric, "commutation matrix is not skew-symmetric");
    return kernel_basis(H);
}

TorusDecomposition torus_decomposition(const IntMatrix& H)
{
    SkewNormalForm s = skew_normal_form(H);
    return {s.multipliers, s.zero_dim};
}

} // namespace qck
