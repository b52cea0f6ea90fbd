#pragma once

#include "qck/intlinalg.hpp"
#include "qck/weyl.hpp"

#include <vector>

namespace qck {

// Matrices attached to a reduced word j = (j_1..j_l), with
// beta_k = s_{j_1} ... s_{j_{k-1}}(alpha_{j_k}) in the simple root basis.
struct ReducedWordMatrices {
    std::vector<IntVec> beta;
    IntMatrix B, Btilde; // strictly upper: (beta_s^vee, beta_t), (alpha_{j_s}^vee, alpha_{j_t})
    IntMatrix A, Atilde; // B - B^T, Btilde - Btilde^T
    IntMatrix C, Ctilde; // n x l: (omega_s, beta_t), (omega_s, alpha_{j_t})
    IntMatrix D;         // diag((alpha_{j_k}, alpha_{j_k}) / 2)
    IntMatrix P, Ptilde; // I + B, I + Btilde
};

ReducedWordMatrices word_matrices(const RootDatum& rd, const IntVec& word);

struct LemmaReport {
    bool beta_from_alpha = false; // beta_t = sum_s alpha_{j_s} P_st
    bool alpha_from_beta = false; // alpha_{j_t} = sum_s beta_s Ptilde_st
    bool inverse = false;         // Ptilde P = I
    bool c_relation = false;      // Ctilde P = C
    bool all() const { return beta_from_alpha && alpha_from_beta && inverse && c_relation; }
};
LemmaReport verify_lemma(const RootDatum& rd, const IntVec& word);

// (alpha_{j_s}, alpha_{j'_t})
IntMatrix mixed_block(const RootDatum& rd, const IntVec& j, const IntVec& jp);

struct CongruenceReport {
    IntMatrix Htilde, Hcal, Q;
    bool congruent = false;        // Q^T Htilde Q == Hcal
    bool reorder_exact = false;    // Htilde is an explicit integral congruence of H
    std::size_t rank_Hcal = 0;
    std::size_t expected_rank = 0; // l(w1) + l(w2) + rank(w1 - w2)
    ZVec multipliers_H, multipliers_Hcal;
    bool ok() const
    {
        return congruent && rank_Hcal == expected_rank && multipliers_H == multipliers_Hcal;
    }
};
CongruenceReport congruence_check(const RootDatum& rd, const SignedWord& word);

} // namespace qck
