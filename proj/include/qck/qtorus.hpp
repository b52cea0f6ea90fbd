#pragma once

#include "qck/intlinalg.hpp"
#include "qck/weyl.hpp"

#include <gmpxx.h>

#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace qck {

// q^q * prod gamma_i^{gamma[i]}; gamma has no trailing zeros.
struct CoeffKey {
    int q = 0;
    IntVec gamma;
    friend bool operator==(const CoeffKey&, const CoeffKey&) = default;
    friend auto operator<=>(const CoeffKey&, const CoeffKey&) = default;
};

// Element of Q[q^{+-1}][gamma_1^{+-1}, gamma_2^{+-1}, ...].
class Coefficient {
public:
    Coefficient() = default;
    Coefficient(long c); // NOLINT: constants convert implicitly
    Coefficient(const mpq_class& c);

    static Coefficient monomial(int q, IntVec gamma, const mpq_class& c = 1);
    static Coefficient q_power(int e) { return monomial(e, {}); }
    // the formal parameter gamma_{index+1}
    static Coefficient gamma(std::size_t index, int exponent = 1);

    bool is_zero() const { return terms_.empty(); }
    bool is_monomial() const { return terms_.size() == 1; }
    const std::map<CoeffKey, mpq_class>& terms() const { return terms_; }
    void add(const CoeffKey& k, const mpq_class& c);

    Coefficient operator-() const;
    Coefficient& operator+=(const Coefficient& o);
    Coefficient& operator-=(const Coefficient& o);
    Coefficient& operator*=(const Coefficient& o);
    friend Coefficient operator+(Coefficient a, const Coefficient& b) { return a += b; }
    friend Coefficient operator-(Coefficient a, const Coefficient& b) { return a -= b; }
    friend Coefficient operator*(const Coefficient& a, const Coefficient& b);
    // q^e a b
    friend Coefficient multiply_shifted(const Coefficient& a, const Coefficient& b, int e);
    friend bool operator==(const Coefficient&, const Coefficient&) = default;

    Coefficient shift_q(int e) const;
    // units of the coefficient ring are exactly the nonzero monomials
    std::optional<Coefficient> inverse() const;
    std::string to_string() const;

private:
    std::map<CoeffKey, mpq_class> terms_;
};

// x^a y^b
struct Monomial {
    IntVec a, b;
    friend bool operator==(const Monomial&, const Monomial&) = default;
    friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

// exponent e with u v = q^e v u
int q_commute_index(const Monomial& u, const Monomial& v, const IntVec& D);

// Element of L = L_{q^{d_1}}(2) (x) ... (x) L_{q^{d_m}}(2) over the coefficient ring.
// In factor k: x y = q^{d_k} y x.
class QTorusElement {
public:
    QTorusElement() = default;
    explicit QTorusElement(IntVec D);

    static QTorusElement one(const IntVec& D);
    static QTorusElement monomial(const IntVec& D, Monomial mono, const Coefficient& c = 1);

    std::size_t factors() const { return D_.size(); }
    const IntVec& D() const { return D_; }
    const std::map<Monomial, Coefficient>& terms() const { return terms_; }
    void add_term(const Monomial& mono, const Coefficient& c);

    bool is_zero() const { return terms_.empty(); }
    std::optional<std::pair<Monomial, Coefficient>> as_unit() const;
    bool is_unit() const { return as_unit().has_value(); }
    std::set<IntVec> supp_x() const;
    std::size_t multiplicity(const IntVec& a) const;
    QTorusElement pow(int e) const;

    QTorusElement operator-() const;
    QTorusElement& operator+=(const QTorusElement& o);
    QTorusElement& operator-=(const QTorusElement& o);
    friend QTorusElement operator+(QTorusElement a, const QTorusElement& b) { return a += b; }
    friend QTorusElement operator-(QTorusElement a, const QTorusElement& b) { return a -= b; }
    friend QTorusElement operator*(const QTorusElement& a, const QTorusElement& b);
    friend QTorusElement operator*(const Coefficient& c, const QTorusElement& a);
    friend bool operator==(const QTorusElement&, const QTorusElement&) = default;

    std::string to_string() const;

private:
    IntVec D_;
    std::map<Monomial, Coefficient> terms_;
};

// (x^a y^b)(x^a' y^b') = q^{-b^T D a'} x^{a+a'} y^{b+b'}
std::pair<Monomial, int> multiply_monomials(const Monomial& u, const Monomial& v, const IntVec& D);
QTorusElement inverse_unit(const QTorusElement& u);
// one more tensor factor, carrying x^a y^b
QTorusElement extend_factor(const QTorusElement& u, int d, int a, int b);

// Z-basis of the kernel of the commutation form on the generators.
IntMatrix center_basis(const IntMatrix& H);

struct TorusDecomposition {
    ZVec multipliers;
    std::size_t center_dim = 0;
};
TorusDecomposition torus_decomposition(const IntMatrix& H);

} // namespace qck
