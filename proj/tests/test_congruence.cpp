#include "qck/congruence.hpp"
#include "qck/error.hpp"
#include "qck/words.hpp"

#include <doctest.h>

using namespace qck;

TEST_SUITE("congruence")
{
    TEST_CASE("change of basis between simple roots and the beta_k")
    {
        RootDatum a2 = RootDatum::type_a(2);
        ReducedWordMatrices M = word_matrices(a2, {1, 2});
        CHECK(M.beta[1] == IntVec{1, 1});
        CHECK(M.B(0, 1) == 1);
        CHECK(M.Btilde(0, 1) == -1);
        // beta = alpha P, not alpha Ptilde
        CHECK(M.P == IntMatrix::from_rows({{1, 1}, {0, 1}}));
        CHECK(verify_lemma(a2, {1, 2}).all());
        CHECK(verify_lemma(a2, {1}).all());
        CHECK_THROWS_AS(word_matrices(a2, {1, 1}), Error);

        for (int r : {2, 3}) {
            RootDatum rd = RootDatum::type_a(r);
            for (const IntVec& j : all_reduced_words(rd, r * (r + 1) / 2))
                CHECK(verify_lemma(rd, j).all());
        }
        RootDatum b2 = RootDatum::from_cartan({{2, -2}, {-1, 2}});
        CHECK(verify_lemma(b2, {1, 2, 1, 2}).all());
        CHECK(verify_lemma(b2, {2, 1, 2, 1}).all());
    }

    TEST_CASE("congruence of the commutation matrices")
    {
        RootDatum a1 = RootDatum::type_a(1), a2 = RootDatum::type_a(2);
        CongruenceReport r = congruence_check(a2, parse_word("1,2,1,-1,-2"));
        CHECK(r.ok());
        CHECK(r.reorder_exact);
        CHECK(r.rank_Hcal == 6);
        CongruenceReport s = congruence_check(a1, parse_word("-1,1"));
        CHECK(s.ok());
        CHECK(s.rank_Hcal == 2);
        CongruenceReport e = congruence_check(a2, parse_word(""));
        CHECK(e.ok());
        CHECK(e.rank_Hcal == 0);
        CHECK(e.Hcal == IntMatrix(2, 2));
        CHECK_THROWS_AS(congruence_check(a2, parse_word("-1,-1")), Error);

        for (const SignedWord& w : all_double_words(a2, 6)) {
            CongruenceReport c = congruence_check(a2, w);
            CHECK(c.ok());
            CHECK(c.reorder_exact);
        }
    }

    TEST_CASE("mixed block")
    {
        RootDatum a2 = RootDatum::type_a(2);
        CHECK(mixed_block(a2, {1, 2}, {2}) == IntMatrix::from_rows({{-1}, {2}}));
    }
}
