#include "qck/error.hpp"
#include "qck/weyl.hpp"
#include "qck/words.hpp"

#include <doctest.h>

using namespace qck;

namespace {

// (n+1) times the Gram matrix of fundamental weights in type A_n
IntMatrix scaled_gram(int n)
{
    IntMatrix g(n, n);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            g(i - 1, j - 1) = (n + 1) * std::min(i, j) - i * j;
    return g;
}

IntVec concat(IntVec a, const IntVec& b)
{
    a.insert(a.end(), b.begin(), b.end());
    return a;
}

} // namespace

TEST_SUITE("weyl")
{
    TEST_CASE("reflections")
    {
        RootDatum a1 = RootDatum::type_a(1), a2 = RootDatum::type_a(2);
        CHECK(reflect(a1, 1, fundamental_weight(a1, 1)) == Weight{{-1}});
        CHECK(reflect(a2, 1, fundamental_weight(a2, 2)) == fundamental_weight(a2, 2));
        Weight w = reflect(a2, 2, reflect(a2, 1, fundamental_weight(a2, 1)));
        CHECK(w == fundamental_weight(a2, 1) - simple_root(a2, 1) - simple_root(a2, 2));
        CHECK_THROWS_AS(reflect(a2, 3, w), Error);

        RootDatum a3 = RootDatum::type_a(3);
        for (int i = 1; i <= 3; ++i)
            for (const Weight& mu : {fundamental_weight(a3, 1), Weight{{2, -1, 3}}, simple_root(a3, 2)})
                CHECK(reflect(a3, i, reflect(a3, i, mu)) == mu);
    }

    TEST_CASE("reducedness")
    {
        RootDatum a2 = RootDatum::type_a(2);
        CHECK(is_reduced(a2, {1, 2, 1}));
        CHECK_FALSE(is_reduced(a2, {1, 1}));
        CHECK_FALSE(is_reduced(a2, {1, 2, 1, 2}));
        CHECK(is_reduced(a2, {}));
    }

    TEST_CASE("reducedness agrees with the length of the product on A_3")
    {
        RootDatum a3 = RootDatum::type_a(3);
        IntVec w;
        std::function<void(int)> rec = [&](int len) {
            bool by_length = inversion_count(word_permutation(3, w)) == static_cast<int>(w.size());
            CHECK(is_reduced(a3, w) == by_length);
            CHECK(is_reduced_by_roots(a3, w) == by_length);
            if (len == 0)
                return;
            for (int i = 1; i <= 3; ++i) {
                w.push_back(i);
                rec(len - 1);
                w.pop_back();
            }
        };
        rec(6);
    }

    TEST_CASE("double word splitting")
    {
        RootDatum a1 = RootDatum::type_a(1), a2 = RootDatum::type_a(2);
        DoubleWordSplit s = split_double_word(a2, parse_word("1,2,1,-1,-2"));
        CHECK(s.w1 == IntVec{1, 2});
        CHECK(s.w2 == IntVec{1, 2, 1});
        CHECK(s.supp == std::set<int>{1, 2});
        DoubleWordSplit e = split_double_word(a2, parse_word(""));
        CHECK(e.w1.empty());
        CHECK(e.supp.empty());
        DoubleWordSplit t = split_double_word(a1, parse_word("(-1,1)"));
        CHECK(t.w1 == IntVec{1});
        CHECK(t.w2 == IntVec{1});
        CHECK_THROWS_AS(split_double_word(a2, parse_word("1,1")), Error);
        CHECK_THROWS_AS(split_double_word(a2, parse_word("1,3")), Error);
        CHECK_THROWS_AS(parse_word("1,0"), Error);
        CHECK_THROWS_AS(parse_word("1,,2"), Error);
    }

    TEST_CASE("weyl matrices")
    {
        RootDatum a1 = RootDatum::type_a(1), a2 = RootDatum::type_a(2);
        CHECK(weyl_matrix(a2, {}) == IntMatrix::identity(2));
        CHECK(weyl_matrix(a1, {1}) == IntMatrix::from_rows({{-1}}));
        CHECK(ker_rank(a2, {}, {}) == 2);
        CHECK(ker_rank(a2, {1}, {1}) == 2);
        CHECK(ker_rank(a2, {1, 2}, {1, 2, 1}) == 1);

        for (int n : {2, 3}) {
            RootDatum rd = RootDatum::type_a(n);
            auto els = weyl_group_elements(rd);
            IntMatrix g = scaled_gram(n);
            for (const IntVec& u : els) {
                IntMatrix W = weyl_matrix(rd, u);
                CHECK(W.transpose() * g * W == g);
                CHECK(ker_rank(rd, u, u) == n);
                for (const IntVec& v : els)
                    CHECK(weyl_matrix(rd, concat(u, v)) == W * weyl_matrix(rd, v));
            }
        }
    }

    TEST_CASE("natural weights")
    {
        RootDatum a2 = RootDatum::type_a(2);
        CHECK(natural_weight(a2, 1) == fundamental_weight(a2, 1));
        CHECK(natural_weight(a2, 2) == fundamental_weight(a2, 2) - fundamental_weight(a2, 1));
        CHECK(natural_weight(a2, 3) == Weight{{0, -1}});
        CHECK_THROWS_AS(natural_weight(a2, 4), Error);
    }

    TEST_CASE("group enumeration")
    {
        CHECK(weyl_group_elements(RootDatum::type_a(2)).size() == 6);
        CHECK(weyl_group_elements(RootDatum::type_a(3)).size() == 24);
        CHECK(all_reduced_words(RootDatum::type_a(2), 3).size() == 1 + 2 + 2 + 2);
    }

    TEST_CASE("non type A data")
    {
        RootDatum b2 = RootDatum::from_cartan({{2, -2}, {-1, 2}});
        CHECK(b2.symmetrizer(1) * b2.cartan(1, 2) == b2.symmetrizer(2) * b2.cartan(2, 1));
        CHECK(is_reduced(b2, {1, 2, 1, 2}));
        CHECK_FALSE(is_reduced(b2, {1, 2, 1, 2, 1}));
        CHECK_THROWS_AS(RootDatum::from_cartan({{2, -1}, {0, 2}}), Error);
    }
}
