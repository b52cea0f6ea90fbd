#include "qck/strings.hpp"
#include "qck/error.hpp"

#include <functional>

namespace qck {

std::vector<Weight> WeightString::weights(const RootDatum& rd) const
{
    std::vector<Weight> mu{start};
    for (std::size_t k = 0; k < word.size(); ++k)
        mu.push_back(mu.back() - (steps[k] * word.sign(k)) * simple_root(rd, word.index(k)));
    return mu;
}

Weight WeightString::end(const RootDatum& rd) const
{
    return weights(rd).back();
}

WeightString make_string(const RootDatum& rd, const SignedWord& word, const Weight& start, const IntVec& steps)
{
    if (steps.size() != word.size())
        throw Error(ErrorKind::InvalidString, "one step per letter is required");
    if (static_cast<int>(start.c.size()) != rd.rank())
        throw Error(ErrorKind::InvalidString, "start weight has the wrong rank");
    for (int j : steps)
        if (j < 0)
            throw Error(ErrorKind::InvalidString, "steps must be nonnegative");
    for (std::size_t k = 0; k < word.size(); ++k)
        rd.check_index(word.index(k));
    return WeightString{word, start, steps};
}

WeightString constant_string(const RootDatum& rd, const SignedWord& word, const Weight& mu)
{
    return make_string(rd, word, mu, IntVec(word.size(), 0));
}

WeightString generator_string(const RootDatum& rd, const SignedWord& word, int k)
{
    if (k < 1 || k > static_cast<int>(word.size()))
        throw Error(ErrorKind::IndexOutOfRange, "generator string index");
    // mu_{k-1} = 0 and mu_k = -sgn(i_k) alpha: one step at position k from 0
    IntVec steps(word.size(), 0);
    steps[k - 1] = 1;
    return make_string(rd, word, zero_weight(rd), steps);
}

Monomial string_exponents(const RootDatum& rd, const WeightString& s)
{
    std::size_t m = s.word.size();
    Monomial mono{IntVec(m), IntVec(m)};
    auto mu = s.weights(rd);
    for (std::size_t k = 0; k < m; ++k) {
        int i = s.word.index(k);
        int twice = mu[k].pair(i) + mu[k + 1].pair(i);
        cross_check(twice % 2 == 0, "odd pairing in string exponent");
        mono.a[k] = twice / 2;
        mono.b[k] = s.steps[k];
    }
    return mono;
}

IntVec symmetrizer_diag(const RootDatum& rd, const SignedWord& word)
{
    IntVec d;
    for (std::size_t k = 0; k < word.size(); ++k)
        d.push_back(rd.symmetrizer(word.index(k)));
    return d;
}

QTorusElement string_monomial(const RootDatum& rd, const WeightString& s)
{
    return QTorusElement::monomial(symmetrizer_diag(rd, s.word), string_exponents(rd, s));
}

std::optional<WeightString> monomial_to_string(const RootDatum& rd, const SignedWord& word, const Weight& nu,
                                               const IntVec& a, const IntVec& b)
{
    if (a.size() != word.size() || b.size() != word.size())
        throw Error(ErrorKind::SizeMismatch, "exponent length does not match the word");
    for (int j : b)
        if (j < 0)
            return std::nullopt;
    WeightString s = make_string(rd, word, nu, b);
    if (string_exponents(rd, s).a != a)
        return std::nullopt;
    return s;
}

std::vector<WeightString> enumerate_strings(const RootDatum& rd, const SignedWord& word, const Weight& nu,
                                            const Weight& mu, int bound)
{
    std::vector<WeightString> out;
    std::size_t m = word.size();
    IntVec steps(m, 0);
    std::vector<Weight> roots;
    for (std::size_t k = 0; k < m; ++k)
        roots.push_back(word.sign(k) * simple_root(rd, word.index(k)));
    std::function<void(std::size_t, int, const Weight&)> rec = [&](std::size_t k, int left, const Weight& cur) {
        if (k == m) {
            if (cur == mu)
                out.push_back(make_string(rd, word, nu, steps));
            return;
        }
        for (int j = 0; j <= left; ++j) {
            steps[k] = j;
            rec(k + 1, left - j, cur - j * roots[k]);
        }
        steps[k] = 0;
    };
    rec(0, bound, nu);
    return out;
}

StringMatrices string_matrices(const RootDatum& rd, const SignedWord& word)
{
    split_double_word(rd, word);
    int n = rd.rank();
    int m = static_cast<int>(word.size());
    StringMatrices sm;
    sm.Omega = IntMatrix(m, n);
    sm.Lambda = IntMatrix(m, m);
    for (int s = 0; s < m; ++s) {
        sm.Omega(s, word.index(s) - 1) = 1;
        for (int t = 0; t <= s; ++t) {
            int sg = word.sign(t);
            sm.Lambda(s, t) = s == t ? -sg : -sg * rd.cartan(word.index(s), word.index(t));
        }
    }
    IntMatrix D(m, m);
    IntVec d = symmetrizer_diag(rd, word);
    for (int k = 0; k < m; ++k)
        D(k, k) = d[k];

    sm.Phi = vstack(hstack(sm.Omega, sm.Lambda), hstack(IntMatrix(m, n), IntMatrix::identity(m)));
    sm.H = vstack(hstack(IntMatrix(n, n), sm.Omega.transpose() * D),
                  hstack(-(D * sm.Omega), sm.Lambda.transpose() * D - D * sm.Lambda));
    IntMatrix Linv = inverse_unimodular(sm.Lambda);
    sm.Omega_tilde = Linv * sm.Omega;
    sm.Theta = image_basis(sm.Omega_tilde.transpose() * D);
    sm.Phi_tilde = vstack(hstack(IntMatrix(m, n), IntMatrix::identity(m)), hstack(sm.Omega_tilde, Linv));
    return sm;
}

namespace {

IntMatrix commutation_form(const IntVec& d)
{
    // g(a+b, a'+b') = a^T D b' - a'^T D b on Z^m + Z^m
    std::size_t m = d.size();
    IntMatrix J(2 * m, 2 * m);
    for (std::size_t k = 0; k < m; ++k) {
        J(k, m + k) = d[k];
        J(m + k, k) = -d[k];
    }
    return J;
}

} // namespace

CPrimeData cprime_data(const RootDatum& rd, const SignedWord& word)
{
    StringMatrices sm = string_matrices(rd, word);
    int n = rd.rank();
    int m = static_cast<int>(word.size());
    IntMatrix J = commutation_form(symmetrizer_diag(rd, word));
    IntMatrix B = image_basis(sm.Phi);
    IntMatrix G = B.transpose() * J * B;

    std::vector<std::size_t> ycols;
    for (int i = 0; i < n; ++i)
        ycols.push_back(i);
    IntMatrix W = sm.Phi_tilde.select_columns(ycols);
    IntMatrix C = kernel_basis(W.transpose() * J * B);
    IntMatrix F = C.transpose() * G * C;
    SkewNormalForm snf = skew_normal_form(F);

    CPrimeData out;
    out.multipliers = snf.multipliers;
    out.lattice_rank = static_cast<int>(C.cols());
    out.torus0_rank = static_cast<int>(rank_over_Q(W));
    out.radical_rank = static_cast<int>(snf.zero_dim);
    (void)m;
    return out;
}

ZVec cprime_multipliers(const RootDatum& rd, const SignedWord& word)
{
    return cprime_data(rd, word).multipliers;
}

WordInvariants invariants(const RootDatum& rd, const SignedWord& word)
{
    DoubleWordSplit split = split_double_word(rd, word);
    StringMatrices sm = string_matrices(rd, word);
    int n = rd.rank();
    WordInvariants inv;
    inv.m = static_cast<int>(word.size());
    inv.s = static_cast<int>(rank_over_Q(sm.Omega_tilde));
    cross_check(inv.s == static_cast<int>(split.supp.size()), "rank of Omega~ differs from the support size");
    inv.n_dim = static_cast<int>(rank_over_Q(sm.Phi));
    cross_check(inv.n_dim == inv.m + inv.s, "rank of Phi differs from m + s");
    cross_check(image_basis(sm.Phi) == image_basis(sm.Phi_tilde), "Phi and Phi~ span different lattices");
    inv.rank_H = static_cast<int>(rank_over_Q(sm.H));
    int r = static_cast<int>(rank_over_Q(weyl_matrix(rd, split.w1) - weyl_matrix(rd, split.w2)));
    cross_check(inv.rank_H == inv.m + r, "rank H differs from m + rank(w1 - w2)");
    inv.d = inv.m + n - inv.rank_H;
    cross_check(inv.d == ker_rank(rd, split.w1, split.w2), "d differs from dim ker(w1 - w2)");
    inv.center_dim = inv.n_dim - inv.rank_H;

    IntMatrix B = image_basis(sm.Phi);
    IntMatrix J = commutation_form(symmetrizer_diag(rd, word));
    TorusDecomposition td = torus_decomposition(B.transpose() * J * B);
    cross_check(static_cast<int>(td.center_dim) == inv.center_dim, "centre rank of the lattice form");

    int twice_k = inv.m - inv.s - inv.center_dim;
    cross_check(twice_k >= 0 && twice_k % 2 == 0, "m - s - centre rank is not a nonnegative even number");
    inv.k = twice_k / 2;

    CPrimeData cp = cprime_data(rd, word);
    inv.multipliers = cp.multipliers;
    inv.cprime_dim = cp.lattice_rank - cp.torus0_rank;
    inv.cprime_center_dim = cp.radical_rank - cp.torus0_rank;
    cross_check(static_cast<int>(inv.multipliers.size()) == inv.k, "number of C' multipliers differs from k");
    cross_check(inv.cprime_dim == inv.m - inv.s, "rank of C' differs from m - s");
    cross_check(inv.cprime_center_dim == inv.center_dim, "centre of C' differs from the centre of the torus");
    return inv;
}

PsiReport psi_check(const RootDatum& rd, const SignedWord& word)
{
    DoubleWordSplit split = split_double_word(rd, word);
    int n = rd.rank();
    int m = static_cast<int>(word.size());
    IntMatrix W1 = weyl_matrix(rd, split.w1);
    IntMatrix W2 = weyl_matrix(rd, split.w2);

    // product of s_{|i_j|} over the letters j in [from, to) with sign sg
    auto partial = [&](int sg, int from, int to) {
        IntVec w;
        for (int j = from; j < to; ++j)
            if (word.sign(j) == sg)
                w.push_back(word.index(j));
        return w;
    };

    PsiReport rep;
    rep.psi = IntMatrix(2 * n, n + m);
    for (int s = 0; s < n; ++s)
        for (int t = 0; t < n; ++t) {
            rep.psi(s, t) = W1(t, s);
            rep.psi(n + s, t) = -W2(t, s);
        }
    for (int t = 0; t < m; ++t) {
        int sg = word.sign(t);
        IntVec tail = partial(sg, t + 1, m);
        for (int s = 1; s <= n; ++s) {
            int v = apply_word(rd, tail, fundamental_weight(rd, s)).pair(word.index(t));
            rep.psi((sg < 0 ? 0 : n) + s - 1, n + t) = v;
        }
    }
    rep.factors = smith_normal_form(rep.psi).invariant_factors();
    rep.ok = true;
    for (const auto& f : rep.factors)
        if (f != 1)
            rep.ok = false;

    rep.reduced = IntMatrix(n, m);
    for (int t = 0; t < m; ++t) {
        IntVec head = partial(word.sign(t), 0, t + 1);
        IntVec v = apply_word_coroot(rd, head, unit_vector(n, word.index(t)));
        for (int s = 0; s < n; ++s)
            rep.reduced(s, t) = v[s];
    }
    rep.reduced_factors = smith_normal_form(rep.reduced).invariant_factors();
    rep.reduced_ok = true;
    for (const auto& f : rep.reduced_factors)
        if (f != 1)
            rep.reduced_ok = false;
    return rep;
}

} // namespace qck
