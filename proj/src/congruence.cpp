#include "qck/congruence.hpp"
#include "qck/error.hpp"
#include "qck/strings.hpp"

namespace qck {

namespace {

int root_form(const RootDatum& rd, const IntVec& r, const IntVec& s)
{
    int v = 0;
    for (int i = 1; i <= rd.rank(); ++i)
        for (int j = 1; j <= rd.rank(); ++j)
            v += r[i - 1] * s[j - 1] * rd.root_pairing(i, j);
    return v;
}

int exact_div(int a, int b, const char* what)
{
    cross_check(a % b == 0, what);
    return a / b;
}

} // namespace

ReducedWordMatrices word_matrices(const RootDatum& rd, const IntVec& word)
{
    if (!is_reduced(rd, word))
        throw Error(ErrorKind::NonReducedWord, word_to_string(word) + " is not reduced");
    int n = rd.rank();
    std::size_t l = word.size();
    ReducedWordMatrices M;
    for (std::size_t k = 0; k < l; ++k)
        M.beta.push_back(apply_word_root(rd, IntVec(word.begin(), word.begin() + k), unit_vector(n, word[k])));

    M.B = IntMatrix(l, l);
    M.Btilde = IntMatrix(l, l);
    M.D = IntMatrix(l, l);
    M.C = IntMatrix(n, l);
    M.Ctilde = IntMatrix(n, l);
    for (std::size_t s = 0; s < l; ++s) {
        int ds = rd.symmetrizer(word[s]);
        M.D(s, s) = ds;
        for (std::size_t t = s + 1; t < l; ++t) {
            // beta_s has the length of alpha_{j_s}, so (beta_s, beta_s) = 2 d_{j_s}
            M.B(s, t) = exact_div(root_form(rd, M.beta[s], M.beta[t]), ds, "coroot pairing");
            M.Btilde(s, t) = rd.cartan(word[s], word[t]);
        }
    }
    for (int s = 1; s <= n; ++s)
        for (std::size_t t = 0; t < l; ++t) {
            M.C(s - 1, t) = rd.symmetrizer(s) * M.beta[t][s - 1];
            M.Ctilde(s - 1, t) = word[t] == s ? rd.symmetrizer(s) : 0;
        }
    M.A = M.B - M.B.transpose();
    M.Atilde = M.Btilde - M.Btilde.transpose();
    // B and Btilde already hold coroot pairings, so no further division by D
    M.P = IntMatrix::identity(l) + M.B;
    M.Ptilde = IntMatrix::identity(l) + M.Btilde;
    return M;
}

LemmaReport verify_lemma(const RootDatum& rd, const IntVec& word)
{
    ReducedWordMatrices M = word_matrices(rd, word);
    int n = rd.rank();
    std::size_t l = word.size();
    LemmaReport rep;
    rep.beta_from_alpha = rep.alpha_from_beta = true;
    for (std::size_t t = 0; t < l; ++t) {
        IntVec fromP(n, 0), fromPt(n, 0);
        for (std::size_t s = 0; s < l; ++s)
            for (int i = 0; i < n; ++i) {
                fromP[i] += unit_vector(n, word[s])[i] * static_cast<int>(M.P(s, t).get_si());
                fromPt[i] += M.beta[s][i] * static_cast<int>(M.Ptilde(s, t).get_si());
            }
        rep.beta_from_alpha = rep.beta_from_alpha && fromP == M.beta[t];
        rep.alpha_from_beta = rep.alpha_from_beta && fromPt == unit_vector(n, word[t]);
    }
    rep.inverse = M.Ptilde * M.P == IntMatrix::identity(l);
    rep.c_relation = M.Ctilde * M.P == M.C;
    return rep;
}

IntMatrix mixed_block(const RootDatum& rd, const IntVec& j, const IntVec& jp)
{
    IntMatrix m(j.size(), jp.size());
    for (std::size_t s = 0; s < j.size(); ++s)
        for (std::size_t t = 0; t < jp.size(); ++t)
            m(s, t) = rd.root_pairing(j[s], jp[t]);
    return m;
}

namespace {

IntMatrix assemble(const IntMatrix& tl, const IntMatrix& mid, const IntMatrix& Cp, const IntMatrix& Cm, int sp,
                   int sm, std::size_t n)
{
    // [[tl, 0, -Cp^T], [0, mid, Cm^T], [Cp, -Cm, 0]] with the given signs on the corner blocks
    std::size_t lp = tl.rows(), lm = mid.rows();
    IntMatrix H(lp + lm + n, lp + lm + n);
    H.set_block(0, 0, tl);
    H.set_block(lp, lp, mid);
    H.set_block(0, lp + lm, mpz_class(-sp) * Cp.transpose());
    H.set_block(lp + lm, 0, mpz_class(sp) * Cp);
    H.set_block(lp, lp + lm, mpz_class(sm) * Cm.transpose());
    H.set_block(lp + lm, lp, mpz_class(-sm) * Cm);
    return H;
}

} // namespace

CongruenceReport congruence_check(const RootDatum& rd, const SignedWord& word)
{
    DoubleWordSplit split = split_double_word(rd, word);
    std::size_t n = rd.rank();
    ReducedWordMatrices Mp = word_matrices(rd, split.w2), Mm = word_matrices(rd, split.w1);
    std::size_t lp = split.w2.size(), lm = split.w1.size();

    CongruenceReport rep;
    rep.Htilde = assemble(-Mp.Atilde, Mm.Atilde, Mp.Ctilde, Mm.Ctilde, 1, 1, n);
    rep.Hcal = assemble(Mp.A, -Mm.A, Mp.C, Mm.C, 1, 1, n);
    rep.Q = block_diagonal({Mp.P, Mm.P, IntMatrix::identity(n)});
    rep.congruent = rep.Q.transpose() * rep.Htilde * rep.Q == rep.Hcal;
    rep.rank_Hcal = rank_over_Q(rep.Hcal);
    rep.expected_rank =
        lp + lm + rank_over_Q(weyl_matrix(rd, split.w1) - weyl_matrix(rd, split.w2));

    StringMatrices sm = string_matrices(rd, word);
    rep.multipliers_H = skew_normal_form(sm.H).multipliers;
    rep.multipliers_Hcal = skew_normal_form(rep.Hcal).multipliers;

    // Reorder H to (positive letters, negative letters, omegas), clear the
    // mixed letter block with the omega rows, then flip the sign of the
    // negative-letter block.
    std::size_t N = n + word.size();
    IntMatrix Pi(N, N);
    std::size_t col = 0;
    for (int sg : {1, -1})
        for (std::size_t k = 0; k < word.size(); ++k)
            if (word.sign(k) == sg)
                Pi(n + k, col++) = 1;
    for (std::size_t i = 0; i < n; ++i)
        Pi(i, col++) = 1;
    IntMatrix E = IntMatrix::identity(N);
    for (std::size_t i = 1; i <= n; ++i)
        for (std::size_t s = 0; s < lp; ++s)
            E(lp + lm + i - 1, s) = rd.cartan(static_cast<int>(i), split.w2[s]);
    IntMatrix S = IntMatrix::identity(N);
    for (std::size_t t = 0; t < lm; ++t)
        S(lp + t, lp + t) = -1;
    IntMatrix T = Pi * E * S;
    rep.reorder_exact = T.transpose() * sm.H * T == rep.Htilde;
    return rep;
}

} // namespace qck
