#include "qck/slq2.hpp"
#include "qck/error.hpp"
#include "qck/wiring.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace qck {

const char* kind_name(TypicalKind k)
{
    switch (k) {
    case TypicalKind::Mminus: return "minus";
    case TypicalKind::Mplus: return "plus";
    case TypicalKind::Laurent: return "laurent";
    case TypicalKind::HighestWeight: return "highest";
    case TypicalKind::LowestWeight: return "lowest";
    }
    return "?";
}

TypicalKind parse_kind(const std::string& s)
{
    for (auto k : {TypicalKind::Mminus, TypicalKind::Mplus, TypicalKind::Laurent, TypicalKind::HighestWeight,
                   TypicalKind::LowestWeight})
        if (s == kind_name(k))
            return k;
    throw Error(ErrorKind::InvalidArgument, "unknown module kind '" + s + "'");
}

TypicalModuleSpec TypicalModuleSpec::formal(TypicalKind kind)
{
    TypicalModuleSpec s;
    s.kind = kind;
    return s;
}

std::optional<int> TypicalModuleSpec::excluded_k() const
{
    if (kind != TypicalKind::Laurent)
        return std::nullopt;
    Coefficient p = gamma * eta;
    if (!p.is_monomial())
        return std::nullopt;
    const auto& [key, c] = *p.terms().begin();
    if (!key.gamma.empty() || c != -1 || (key.q % 2 + 2) % 2 != 1)
        return std::nullopt;
    return (key.q - 1) / 2;
}

Gen parse_gen(const std::string& s)
{
    for (auto g : {Gen::x11, Gen::x12, Gen::x21, Gen::x22})
        if (s == gen_name(g))
            return g;
    throw Error(ErrorKind::InvalidArgument, "unknown generator '" + s + "'");
}

const char* gen_name(Gen g)
{
    switch (g) {
    case Gen::x11: return "x11";
    case Gen::x12: return "x12";
    case Gen::x21: return "x21";
    case Gen::x22: return "x22";
    }
    return "?";
}

bool in_domain(TypicalKind kind, int i)
{
    switch (kind) {
    case TypicalKind::HighestWeight: return i >= 0;
    case TypicalKind::LowestWeight: return i <= 0;
    default: return true;
    }
}

namespace {

Coefficient q_(int e)
{
    return Coefficient::q_power(e);
}

// image of e_i as (target index, coefficient)
std::pair<int, Coefficient> act_basis(const TypicalModuleSpec& s, Gen g, int i)
{
    const Coefficient one(1);
    switch (s.kind) {
    case TypicalKind::Mminus:
        switch (g) {
        case Gen::x11: return {i - 1, one};
        case Gen::x22: return {i + 1, one};
        case Gen::x12: return {i, Coefficient()};
        case Gen::x21: return {i, s.gamma * q_(i)};
        }
        break;
    case TypicalKind::Mplus:
        switch (g) {
        case Gen::x11: return {i - 1, one};
        case Gen::x22: return {i + 1, one};
        case Gen::x12: return {i, s.eta * q_(i)};
        case Gen::x21: return {i, Coefficient()};
        }
        break;
    case TypicalKind::Laurent:
        switch (g) {
        case Gen::x11: return {i - 1, one + s.gamma * s.eta * q_(2 * i - 1)};
        case Gen::x22: return {i + 1, one};
        case Gen::x12: return {i, s.eta * q_(i)};
        case Gen::x21: return {i, s.gamma * q_(i)};
        }
        break;
    case TypicalKind::HighestWeight:
        switch (g) {
        case Gen::x11: return {i - 1, one - q_(2 * i)};
        case Gen::x22: return {i + 1, one};
        case Gen::x12: return {i, s.eta * q_(i)};
        case Gen::x21: return {i, -(*s.eta.inverse() * q_(i + 1))};
        }
        break;
    case TypicalKind::LowestWeight:
        switch (g) {
        case Gen::x11: return {i - 1, one};
        case Gen::x22: return {i + 1, one - q_(2 * i)};
        case Gen::x12: return {i, s.gamma * q_(i)};
        case Gen::x21: return {i, -(*s.gamma.inverse() * q_(i - 1))};
        }
        break;
    }
    throw Error(ErrorKind::InvalidArgument, "bad module kind");
}

void add_to(ModuleVector& v, int i, const Coefficient& c)
{
    if (c.is_zero())
        return;
    auto [it, fresh] = v.try_emplace(i, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero())
            v.erase(it);
    }
}

void validate_params(const TypicalModuleSpec& s)
{
    for (const Coefficient* p : {&s.gamma, &s.eta})
        if (!p->inverse())
            throw Error(ErrorKind::InvalidArgument, "module parameters must be nonzero monomials");
}

} // namespace

ModuleVector act(const TypicalModuleSpec& spec, Gen g, const ModuleVector& v)
{
    validate_params(spec);
    ModuleVector out;
    for (const auto& [i, c] : v) {
        if (!in_domain(spec.kind, i))
            throw Error(ErrorKind::IndexOutOfDomain, "basis index " + std::to_string(i) + " outside the module");
        auto [j, f] = act_basis(spec, g, i);
        if (!in_domain(spec.kind, j)) {
            cross_check(f.is_zero(), "action leaves the module");
            continue;
        }
        add_to(out, j, f * c);
    }
    return out;
}

std::size_t ModuleReport::failures() const
{
    return std::count_if(checks.begin(), checks.end(), [](const ModuleCheck& c) { return !c.pass; });
}

std::optional<ModuleCheck> ModuleReport::first_failure() const
{
    for (const auto& c : checks)
        if (!c.pass)
            return c;
    return std::nullopt;
}

namespace {

ModuleVector sub(ModuleVector a, const ModuleVector& b, const Coefficient& scale = 1)
{
    for (const auto& [i, c] : b)
        add_to(a, i, -(scale * c));
    return a;
}

} // namespace

ModuleReport verify_module(const TypicalModuleSpec& spec, int N)
{
    validate_params(spec);
    ModuleReport rep;
    const Coefficient q = q_(1);
    for (int i = -N; i <= N; ++i) {
        if (!in_domain(spec.kind, i))
            continue;
        ModuleVector e{{i, Coefficient(1)}};
        auto A = [&](Gen g1, Gen g2) { return act(spec, g1, act(spec, g2, e)); };
        auto push = [&](const char* name, const ModuleVector& diff) { rep.checks.push_back({name, i, diff.empty()}); };
        push("x11x12=q*x12x11", sub(A(Gen::x11, Gen::x12), A(Gen::x12, Gen::x11), q));
        push("x11x21=q*x21x11", sub(A(Gen::x11, Gen::x21), A(Gen::x21, Gen::x11), q));
        push("x12x22=q*x22x12", sub(A(Gen::x12, Gen::x22), A(Gen::x22, Gen::x12), q));
        push("x21x22=q*x22x21", sub(A(Gen::x21, Gen::x22), A(Gen::x22, Gen::x21), q));
        push("x12x21=x21x12", sub(A(Gen::x12, Gen::x21), A(Gen::x21, Gen::x12)));
        push("x11x22-x22x11=(q-q^-1)x12x21",
             sub(sub(A(Gen::x11, Gen::x22), A(Gen::x22, Gen::x11)), A(Gen::x12, Gen::x21), q - q_(-1)));
        push("x11x22-q*x12x21=1", sub(sub(A(Gen::x11, Gen::x22), A(Gen::x12, Gen::x21), q), e));

        if (in_domain(spec.kind, i - 1)) {
            ModuleVector v = act(spec, Gen::x11, e);
            rep.checks.push_back({"x11 e_i != 0", i, v.count(i - 1) == 1});
        }
        if (in_domain(spec.kind, i + 1)) {
            ModuleVector v = act(spec, Gen::x22, e);
            rep.checks.push_back({"x22 e_i != 0", i, v.count(i + 1) == 1});
        }
    }
    return rep;
}

TensorModule TensorModule::formal(const RootDatum& rd, const SignedWord& word)
{
    TensorModule M;
    M.word = word;
    M.D = symmetrizer_diag(rd, word);
    for (std::size_t k = 0; k < word.size(); ++k)
        M.gamma.push_back(Coefficient::gamma(k));
    return M;
}

namespace {

void add_to(TensorVector& v, const IntVec& n, const Coefficient& c)
{
    if (c.is_zero())
        return;
    auto [it, fresh] = v.try_emplace(n, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero())
            v.erase(it);
    }
}

Coefficient gamma_power(const TensorModule& M, const IntVec& b)
{
    Coefficient c(1);
    for (std::size_t k = 0; k < b.size(); ++k)
        if (b[k] != 0) {
            Coefficient g = b[k] > 0 ? M.gamma[k] : *M.gamma[k].inverse();
            for (int t = 0; t < std::abs(b[k]); ++t)
                c *= g;
        }
    return c;
}

} // namespace

TensorVector monomial_action(const TensorModule& M, const Monomial& mono, const TensorVector& v)
{
    std::size_t m = M.word.size();
    if (mono.a.size() != m)
        throw Error(ErrorKind::SizeMismatch, "monomial length does not match the module");
    Coefficient g = gamma_power(M, mono.b);
    TensorVector out;
    for (const auto& [n, c] : v) {
        int e = 0;
        IntVec n2 = n;
        for (std::size_t k = 0; k < m; ++k) {
            e += mono.b[k] * M.D[k] * n[k];
            n2[k] -= mono.a[k];
        }
        add_to(out, n2, (g * c).shift_q(e));
    }
    return out;
}

namespace {

// terms of u with the gamma power of each y-exponent folded into the coefficient
struct PreparedElement {
    std::vector<std::pair<Monomial, Coefficient>> terms;
};

PreparedElement prepare(const TensorModule& M, const QTorusElement& u)
{
    if (u.factors() != M.word.size())
        throw Error(ErrorKind::SizeMismatch, "element length does not match the module");
    PreparedElement p;
    for (const auto& [mono, c] : u.terms())
        p.terms.emplace_back(mono, c * gamma_power(M, mono.b));
    return p;
}

TensorVector act_prepared(const TensorModule& M, const PreparedElement& u, const TensorVector& v)
{
    std::size_t m = M.word.size();
    TensorVector out;
    IntVec n2(m);
    for (const auto& [n, cn] : v)
        for (const auto& [mono, c] : u.terms) {
            int e = 0;
            for (std::size_t k = 0; k < m; ++k) {
                e += mono.b[k] * M.D[k] * n[k];
                n2[k] = n[k] - mono.a[k];
            }
            add_to(out, n2, multiply_shifted(c, cn, e));
        }
    return out;
}

} // namespace

TensorVector element_action(const TensorModule& M, const QTorusElement& u, const TensorVector& v)
{
    return act_prepared(M, prepare(M, u), v);
}

ModuleReport verify_tensor_module(const RootDatum& rd, const TensorModule& M, int N)
{
    QuantumMatrixImage img(rd, M.word);
    int L = rd.rank() + 1;
    std::size_t m = M.word.size();
    const Coefficient q = q_(1), qq = q_(1) - q_(-1);
    std::vector<PreparedElement> gens;
    for (int i = 1; i <= L; ++i)
        for (int j = 1; j <= L; ++j)
            gens.push_back(prepare(M, img.generator(i, j)));
    auto x = [&](int i, int j) -> const PreparedElement& { return gens[(i - 1) * L + (j - 1)]; };

    auto combine = [](TensorVector a, const TensorVector& b, const Coefficient& s) {
        for (const auto& [n, c] : b)
            add_to(a, n, s * c);
        return a;
    };

    ModuleReport rep;
    IntVec n(m, -N);
    int counter = 0;
    std::vector<IntVec> perms;
    {
        IntVec p(L);
        std::iota(p.begin(), p.end(), 1);
        do
            perms.push_back(p);
        while (std::next_permutation(p.begin(), p.end()));
    }
    auto gen = [&](int i, int j) { return (i - 1) * L + (j - 1); };
    for (;;) {
        TensorVector e{{n, Coefficient(1)}};
        // x_g e and x_g x_h e, computed on first use
        std::vector<std::optional<TensorVector>> one(L * L), two(L * L * L * L);
        auto X = [&](int g) -> const TensorVector& {
            if (!one[g])
                one[g] = act_prepared(M, gens[g], e);
            return *one[g];
        };
        auto XX = [&](int g, int h) -> const TensorVector& {
            auto& slot = two[g * L * L + h];
            if (!slot)
                slot = act_prepared(M, gens[g], X(h));
            return *slot;
        };
        bool ok = true;
        for (int i = 1; i <= L && ok; ++i)
            for (int j = 1; j <= L && ok; ++j)
                for (int l = j + 1; l <= L && ok; ++l) {
                    ok = combine(XX(gen(i, j), gen(i, l)), XX(gen(i, l), gen(i, j)), -q).empty();
                    ok = ok && combine(XX(gen(j, i), gen(l, i)), XX(gen(l, i), gen(j, i)), -q).empty();
                }
        for (int i = 1; i <= L && ok; ++i)
            for (int k = i + 1; k <= L && ok; ++k)
                for (int j = 1; j <= L && ok; ++j)
                    for (int l = j + 1; l <= L && ok; ++l) {
                        ok = combine(XX(gen(i, l), gen(k, j)), XX(gen(k, j), gen(i, l)), -1).empty();
                        TensorVector d = combine(XX(gen(i, j), gen(k, l)), XX(gen(k, l), gen(i, j)), -1);
                        ok = ok && combine(d, XX(gen(i, l), gen(k, j)), -qq).empty();
                    }
        if (ok) {
            TensorVector det;
            for (const auto& p : perms) {
                // x_{1 p1} ... x_{L pL} e
                TensorVector v = L >= 2 ? XX(gen(L - 1, p[L - 2]), gen(L, p[L - 1])) : X(gen(1, p[0]));
                for (int r = L - 2; r >= 1; --r)
                    v = act_prepared(M, x(r, p[r - 1]), v);
                int inv = 0;
                for (int a = 0; a < L; ++a)
                    for (int b = a + 1; b < L; ++b)
                        inv += p[a] > p[b];
                det = combine(det, v, Coefficient::monomial(inv, {}, inv % 2 ? -1 : 1));
            }
            ok = combine(det, e, -1).empty();
        }
        rep.checks.push_back({"quantum matrix relations", counter++, ok});

        std::size_t k = 0;
        while (k < m && n[k] == N)
            n[k++] = -N;
        if (k == m)
            break;
        ++n[k];
    }
    return rep;
}

IntVec weight_space_of(const RootDatum& rd, const SignedWord& word, const IntVec& n)
{
    if (n.size() != word.size())
        throw Error(ErrorKind::SizeMismatch, "index vector length does not match the word");
    StringMatrices sm = string_matrices(rd, word);
    IntVec d = symmetrizer_diag(rd, word);
    ZVec Dn(n.size());
    for (std::size_t k = 0; k < n.size(); ++k)
        Dn[k] = d[k] * n[k];
    ZVec lhs = sm.Omega_tilde.transpose() * Dn;
    auto sol = solve_integer(sm.Theta, lhs);
    if (!sol)
        throw Error(ErrorKind::Unsolvable, "no lattice solution for the weight space");
    IntVec m;
    for (const auto& v : *sol)
        m.push_back(static_cast<int>(v.get_si()));
    return m;
}

} // namespace qck
