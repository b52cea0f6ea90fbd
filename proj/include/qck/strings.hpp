#pragma once

#include "qck/intlinalg.hpp"
#include "qck/qtorus.hpp"
#include "qck/weyl.hpp"

#include <optional>
#include <vector>

namespace qck {

// mu_0 = start, mu_k = mu_{k-1} - steps[k] sgn(i_k) alpha_{|i_k|}, steps >= 0.
struct WeightString {
    SignedWord word;
    Weight start;
    IntVec steps;

    std::vector<Weight> weights(const RootDatum& rd) const; // mu_0 .. mu_m
    Weight end(const RootDatum& rd) const;
};

WeightString make_string(const RootDatum& rd, const SignedWord& word, const Weight& start, const IntVec& steps);
// the string with all weights equal to mu
WeightString constant_string(const RootDatum& rd, const SignedWord& word, const Weight& mu);
// mu_{i,k}: zero up to mu_{k-1}, then -sgn(i_k) alpha_{|i_k|}; k is 1-based
WeightString generator_string(const RootDatum& rd, const SignedWord& word, int k);

// (a, b) with a_k = (mu_{k-1} + mu_k, alpha^vee_{|i_k|}) / 2 and b_k = steps[k]
Monomial string_exponents(const RootDatum& rd, const WeightString& s);
// x^a y^b with coefficient 1
QTorusElement string_monomial(const RootDatum& rd, const WeightString& s);

// Inverse of string_exponents: the string starting at nu, if any.
std::optional<WeightString> monomial_to_string(const RootDatum& rd, const SignedWord& word, const Weight& nu,
                                               const IntVec& a, const IntVec& b);

// All strings from nu to mu with sum of steps at most bound, lexicographic in steps.
std::vector<WeightString> enumerate_strings(const RootDatum& rd, const SignedWord& word, const Weight& nu,
                                            const Weight& mu, int bound);

IntVec symmetrizer_diag(const RootDatum& rd, const SignedWord& word);

struct StringMatrices {
    IntMatrix Omega;       // m x n
    IntMatrix Lambda;      // m x m
    IntMatrix Phi;         // 2m x (n+m)
    IntMatrix H;           // (n+m) x (n+m)
    IntMatrix Omega_tilde; // Lambda^{-1} Omega
    IntMatrix Theta;       // n x s, Z-basis of the column span of Omega_tilde^T D
    IntMatrix Phi_tilde;   // 2m x (n+m), [[0, I], [Omega_tilde, Lambda^{-1}]]
};
StringMatrices string_matrices(const RootDatum& rd, const SignedWord& word);

struct WordInvariants {
    int m = 0;
    int s = 0;
    int n_dim = 0;      // rank of the generator lattice
    int rank_H = 0;
    int d = 0;          // m + n - rank H
    int center_dim = 0; // n_dim - rank H, centre rank of the torus itself
    int k = 0;          // (m - s - center_dim) / 2
    ZVec multipliers;   // nonzero skew multipliers of the C' block, k of them
    int cprime_dim = 0;
    int cprime_center_dim = 0;
};

struct CPrimeData {
    ZVec multipliers;
    int lattice_rank = 0;  // rank of the centralizer lattice
    int torus0_rank = 0;   // rank of the y-only sublattice
    int radical_rank = 0;  // rank of the kernel of the induced form
};
CPrimeData cprime_data(const RootDatum& rd, const SignedWord& word);
ZVec cprime_multipliers(const RootDatum& rd, const SignedWord& word);

WordInvariants invariants(const RootDatum& rd, const SignedWord& word);

struct PsiReport {
    IntMatrix psi;
    ZVec factors;
    bool ok = false;
    IntMatrix reduced;
    ZVec reduced_factors;
    bool reduced_ok = false;
};
PsiReport psi_check(const RootDatum& rd, const SignedWord& word);

} // namespace qck
