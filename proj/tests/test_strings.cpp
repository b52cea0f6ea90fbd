#include "qck/error.hpp"
#include "qck/strings.hpp"
#include "qck/words.hpp"

#include <doctest.h>

using namespace qck;

namespace {

Monomial column_monomial(const IntMatrix& phi, std::size_t c)
{
    std::size_t m = phi.rows() / 2;
    Monomial mono{IntVec(m), IntVec(m)};
    for (std::size_t k = 0; k < m; ++k) {
        mono.a[k] = static_cast<int>(phi(k, c).get_si());
        mono.b[k] = static_cast<int>(phi(m + k, c).get_si());
    }
    return mono;
}

} // namespace

TEST_SUITE("strings")
{
    TEST_CASE("string exponents")
    {
        RootDatum a1 = RootDatum::type_a(1);
        SignedWord w = parse_word("-1,1");
        Monomial c = string_exponents(a1, constant_string(a1, w, fundamental_weight(a1, 1)));
        CHECK(c.a == IntVec{1, 1});
        CHECK(c.b == IntVec{0, 0});

        SignedWord one = parse_word("1");
        WeightString s = make_string(a1, one, fundamental_weight(a1, 1), {1});
        CHECK(s.end(a1) == fundamental_weight(a1, 1) - simple_root(a1, 1));
        Monomial e = string_exponents(a1, s);
        CHECK(e.a == IntVec{0});
        CHECK(e.b == IntVec{1});
        CHECK_THROWS_AS(make_string(a1, one, fundamental_weight(a1, 1), {-1}), Error);
        CHECK_THROWS_AS(make_string(a1, one, fundamental_weight(a1, 1), {1, 0}), Error);
    }

    TEST_CASE("string matrices for (-1,1)")
    {
        RootDatum a1 = RootDatum::type_a(1);
        StringMatrices sm = string_matrices(a1, parse_word("-1,1"));
        CHECK(sm.Omega == IntMatrix::from_rows({{1}, {1}}));
        CHECK(sm.Lambda == IntMatrix::from_rows({{1, 0}, {2, -1}}));
        CHECK(sm.Omega_tilde == IntMatrix::from_rows({{1}, {1}}));
        CHECK(sm.Theta.rows() == 1);
        CHECK(sm.Theta.cols() == 1);

        StringMatrices e = string_matrices(RootDatum::type_a(2), parse_word(""));
        CHECK(e.Lambda.rows() == 0);
        CHECK(e.H == IntMatrix(2, 2));
        CHECK(rank_over_Q(string_matrices(RootDatum::type_a(2), parse_word("1,2,1,-1,-2")).Phi) == 7);
    }

    TEST_CASE("matrix columns are the string exponents and H is their commutation form")
    {
        for (int r = 1; r <= 3; ++r) {
            RootDatum rd = RootDatum::type_a(r);
            for (const SignedWord& w : all_double_words(rd, 4)) {
                StringMatrices sm = string_matrices(rd, w);
                IntVec D = symmetrizer_diag(rd, w);
                std::size_t m = w.size();
                CHECK(abs(determinant(sm.Lambda)) == 1);
                for (int i = 1; i <= r; ++i) {
                    Monomial c = string_exponents(rd, constant_string(rd, w, fundamental_weight(rd, i)));
                    CHECK(c == column_monomial(sm.Phi, i - 1));
                }
                for (std::size_t k = 1; k <= m; ++k) {
                    Monomial g = string_exponents(rd, generator_string(rd, w, static_cast<int>(k)));
                    CHECK(g == column_monomial(sm.Phi, r + k - 1));
                }
                for (std::size_t s = 0; s < r + m; ++s)
                    for (std::size_t t = 0; t < r + m; ++t)
                        CHECK(sm.H(s, t) == q_commute_index(column_monomial(sm.Phi, s), column_monomial(sm.Phi, t), D));
            }
        }
    }

    TEST_CASE("invariants")
    {
        RootDatum a1 = RootDatum::type_a(1), a2 = RootDatum::type_a(2);
        WordInvariants i1 = invariants(a1, parse_word("-1,1"));
        CHECK(i1.m == 2);
        CHECK(i1.s == 1);
        CHECK(i1.n_dim == 3);
        CHECK(i1.d == 1);
        CHECK(i1.k == 0);
        CHECK(i1.multipliers.empty());

        WordInvariants i2 = invariants(a2, parse_word("1,2,1,-1,-2"));
        CHECK(i2.m == 5);
        CHECK(i2.s == 2);
        CHECK(i2.n_dim == 7);
        CHECK(i2.rank_H == 6);
        CHECK(i2.d == 1);
        CHECK(i2.k == 1);
        CHECK(i2.multipliers.size() == 1);
        CHECK(cprime_multipliers(a2, parse_word("1,2,1,-1,-2")).size() == 1);

        WordInvariants e = invariants(a2, parse_word(""));
        CHECK(e.m == 0);
        CHECK(e.s == 0);
        CHECK(e.d == 2);
        CHECK(e.k == 0);

        CHECK(cprime_multipliers(a2, parse_word("1,-2")).empty());
        CHECK_THROWS_AS(invariants(a2, parse_word("1,1")), Error);
    }

    TEST_CASE("invariants over all short words")
    {
        for (int r = 1; r <= 3; ++r) {
            RootDatum rd = RootDatum::type_a(r);
            for (const SignedWord& w : all_double_words(rd, r == 3 ? 5 : 6)) {
                DoubleWordSplit split = split_double_word(rd, w);
                WordInvariants inv = invariants(rd, w);
                CHECK(inv.n_dim == inv.m + static_cast<int>(split.supp.size()));
                CHECK(inv.d == ker_rank(rd, split.w1, split.w2));
                CHECK(inv.k >= 0);
                CHECK(static_cast<int>(inv.multipliers.size()) == inv.k);
            }
        }
    }

    TEST_CASE("enumerating strings")
    {
        RootDatum a1 = RootDatum::type_a(1);
        SignedWord w = parse_word("-1,1");
        Weight om = fundamental_weight(a1, 1);
        auto all = enumerate_strings(a1, w, om, om, 4);
        REQUIRE(all.size() == 3);
        for (int j = 0; j < 3; ++j)
            CHECK(all[j].steps == IntVec{j, j});
        CHECK(enumerate_strings(a1, w, om, Weight{{0}}, 4).empty());

        RootDatum a2 = RootDatum::type_a(2);
        SignedWord dj = parse_word("-1,2");
        for (const Weight& mu : {fundamental_weight(a2, 1), fundamental_weight(a2, 2), natural_weight(a2, 2)}) {
            auto s = enumerate_strings(a2, dj, mu, mu, 5);
            REQUIRE(s.size() == 1);
            CHECK(s[0].steps == IntVec{0, 0});
        }
    }

    TEST_CASE("monomial to string")
    {
        RootDatum a1 = RootDatum::type_a(1);
        SignedWord w = parse_word("-1,1");
        Weight om = fundamental_weight(a1, 1);
        auto c = monomial_to_string(a1, w, om, {1, 1}, {0, 0});
        REQUIRE(c.has_value());
        CHECK(c->steps == IntVec{0, 0});
        CHECK_FALSE(monomial_to_string(a1, w, om, {0, 0}, {0, 0}).has_value());
        // b=(1,0): the first step lowers nothing, so a is forced and must be recomputed
        auto s = monomial_to_string(a1, w, om, {2, 3}, {1, 0});
        if (s)
            CHECK(string_exponents(a1, *s) == Monomial{{2, 3}, {1, 0}});
        auto roundtrip = monomial_to_string(a1, w, om, string_exponents(a1, make_string(a1, w, om, {1, 1})).a, {1, 1});
        REQUIRE(roundtrip.has_value());
        CHECK(roundtrip->steps == IntVec{1, 1});
    }

    TEST_CASE("psi determinantal divisors")
    {
        RootDatum a1 = RootDatum::type_a(1), a2 = RootDatum::type_a(2);
        PsiReport p = psi_check(a1, parse_word("-1,1"));
        CHECK(p.ok);
        CHECK(p.psi.rows() == 2);
        CHECK(p.psi.cols() == 3);
        CHECK(psi_check(a2, parse_word("")).ok);
        for (const IntVec& u : weyl_group_elements(a2))
            for (const IntVec& v : weyl_group_elements(a2))
                CHECK(psi_check(a2, concat_double_word(u, v)).ok);
    }
}
