#include "qck/error.hpp"
#include "qck/intlinalg.hpp"
#include "support.hpp"

#include <doctest.h>

using namespace qck;

namespace {

bool is_diagonal_chain(const IntMatrix& d)
{
    for (std::size_t i = 0; i < d.rows(); ++i)
        for (std::size_t j = 0; j < d.cols(); ++j)
            if (i != j && d(i, j) != 0)
                return false;
    std::size_t n = std::min(d.rows(), d.cols());
    for (std::size_t i = 0; i + 1 < n; ++i) {
        if (d(i, i) < 0)
            return false;
        if (d(i, i) == 0 ? d(i + 1, i + 1) != 0 : d(i + 1, i + 1) % d(i, i) != 0)
            return false;
    }
    return true;
}

ZVec zv(std::initializer_list<long> v)
{
    ZVec r;
    for (long x : v)
        r.emplace_back(x);
    return r;
}

} // namespace

TEST_SUITE("intlinalg")
{
    TEST_CASE("smith form of small matrices")
    {
        CHECK(smith_normal_form(IntMatrix::from_rows({{2, 0}, {0, 3}})).invariant_factors() == zv({1, 6}));
        CHECK(smith_normal_form(IntMatrix(3, 2)).D.is_zero());
        CHECK(smith_normal_form(IntMatrix::identity(4)).invariant_factors() == zv({1, 1, 1, 1}));
        // pivot already divides the rest of its row and column
        SmithForm s = smith_normal_form(IntMatrix::from_rows({{-1, 0, 1}, {0, -1, -1}}));
        CHECK(s.U * IntMatrix::from_rows({{-1, 0, 1}, {0, -1, -1}}) * s.V == s.D);
    }

    TEST_CASE("smith form on random matrices")
    {
        std::mt19937_64 rng(1);
        for (int t = 0; t < 200; ++t) {
            std::size_t r = 1 + rng() % 6, c = 1 + rng() % 6;
            IntMatrix m = test::random_matrix(rng, r, c, -6, 6);
            SmithForm s = smith_normal_form(m);
            CHECK(s.U * m * s.V == s.D);
            CHECK(abs(determinant(s.U)) == 1);
            CHECK(abs(determinant(s.V)) == 1);
            CHECK(is_diagonal_chain(s.D));
            CHECK(s.invariant_factors().size() == rank_over_Q(m));
        }
    }

    TEST_CASE("skew normal form examples")
    {
        IntMatrix S = IntMatrix::from_rows({{0, 1}, {-1, 0}});
        SkewNormalForm f = skew_normal_form(S);
        CHECK(f.multipliers == zv({1}));
        CHECK(f.zero_dim == 0);
        CHECK(f.Q == IntMatrix::identity(2));
        CHECK(skew_normal_form(IntMatrix::from_rows({{0, 2}, {-2, 0}})).multipliers == zv({2}));
        SkewNormalForm z = skew_normal_form(IntMatrix(3, 3));
        CHECK(z.multipliers.empty());
        CHECK(z.zero_dim == 3);
        CHECK_THROWS_AS(skew_normal_form(IntMatrix::from_rows({{0, 1}, {1, 0}})), Error);
        CHECK_THROWS_AS(skew_normal_form(IntMatrix::from_rows({{1, 0}, {0, 0}})), Error);
    }

    TEST_CASE("skew normal form on random skew matrices")
    {
        std::mt19937_64 rng(2);
        for (int t = 0; t < 150; ++t) {
            std::size_t n = 1 + rng() % 12;
            IntMatrix h = test::random_skew(rng, n, 5);
            SkewNormalForm f = skew_normal_form(h);
            CHECK(f.Q.transpose() * h * f.Q == standard_skew_form(f.multipliers, f.zero_dim));
            CHECK(abs(determinant(f.Q)) == 1);
            for (std::size_t i = 0; i + 1 < f.multipliers.size(); ++i)
                CHECK(f.multipliers[i + 1] % f.multipliers[i] == 0);
            CHECK(rank_over_Q(h) % 2 == 0);
            CHECK(rank_over_Q(h) == 2 * f.multipliers.size());

            // each multiplier appears twice among the Smith factors
            ZVec twice;
            for (const auto& m : f.multipliers) {
                twice.push_back(m);
                twice.push_back(m);
            }
            CHECK(smith_normal_form(h).invariant_factors() == twice);

            IntMatrix u = test::random_unimodular(rng, n);
            CHECK(skew_normal_form(u.transpose() * h * u).multipliers == f.multipliers);
        }
    }

    TEST_CASE("kernel and image")
    {
        CHECK(kernel_basis(IntMatrix::identity(3)).cols() == 0);
        IntMatrix k = kernel_basis(IntMatrix::from_rows({{1, 1}, {1, 1}}));
        REQUIRE(k.cols() == 1);
        CHECK(abs(k(0, 0)) == 1);
        CHECK(k(1, 0) == -k(0, 0));
        CHECK(rank_over_Q(IntMatrix::from_rows({{1, 1}, {1, 1}})) == 1);

        std::mt19937_64 rng(3);
        for (int t = 0; t < 100; ++t) {
            std::size_t r = 1 + rng() % 5, c = 1 + rng() % 7;
            IntMatrix m = test::random_matrix(rng, r, c, -4, 4);
            IntMatrix kb = kernel_basis(m);
            CHECK(kb.cols() == c - rank_over_Q(m));
            CHECK((m * kb).is_zero());
            if (kb.cols() > 0) {
                ZVec f = smith_normal_form(kb).invariant_factors();
                CHECK(f == ZVec(kb.cols(), 1)); // saturated
            }
            IntMatrix ib = image_basis(m);
            CHECK(ib.cols() == rank_over_Q(m));
            // same lattice: each basis spans the columns of the other
            for (std::size_t j = 0; j < c; ++j) {
                ZVec col = m.column(j);
                CHECK(solve_integer(ib, col).has_value());
            }
        }
    }

    TEST_CASE("determinant, inverse and solving")
    {
        IntMatrix a = IntMatrix::from_rows({{2, 1}, {1, 1}});
        CHECK(determinant(a) == 1);
        CHECK(inverse_unimodular(a) * a == IntMatrix::identity(2));
        CHECK(solve_integer(a, zv({3, 2})) == zv({1, 1}));
        CHECK_FALSE(solve_integer(IntMatrix::from_rows({{2}}), zv({1})).has_value());
        CHECK(determinant(IntMatrix::from_rows({{1, 2, 3}, {4, 5, 6}, {7, 8, 10}})) == -3);
    }

    TEST_CASE("parse_matrix")
    {
        CHECK(parse_matrix("1 2\n3 4") == IntMatrix::from_rows({{1, 2}, {3, 4}}));
        CHECK(parse_matrix("[[1, 2]; [3, 4]]") == IntMatrix::from_rows({{1, 2}, {3, 4}}));
        CHECK_THROWS_AS(parse_matrix("1 2\n3"), Error);
        CHECK_THROWS_AS(parse_matrix("1 a"), Error);
    }

    TEST_CASE("block helpers")
    {
        IntMatrix a = IntMatrix::from_rows({{1, 2}}), b = IntMatrix::from_rows({{3}});
        CHECK(hstack(a, b) == IntMatrix::from_rows({{1, 2, 3}}));
        CHECK(block_diagonal({a, b}) == IntMatrix::from_rows({{1, 2, 0}, {0, 0, 3}}));
        CHECK(vstack(a, a).rows() == 2);
        CHECK(a.transpose().transpose() == a);
    }
}
