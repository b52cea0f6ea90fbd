#include "qck/error.hpp"
#include "qck/qtorus.hpp"
#include "support.hpp"

#include <doctest.h>

using namespace qck;

namespace {

QTorusElement mono(const IntVec& D, IntVec a, IntVec b, const Coefficient& c = 1)
{
    return QTorusElement::monomial(D, Monomial{std::move(a), std::move(b)}, c);
}

} // namespace

TEST_SUITE("qtorus")
{
    TEST_CASE("monomial products")
    {
        IntVec D{1};
        QTorusElement x = mono(D, {1}, {0}), y = mono(D, {0}, {1});
        CHECK(y * x == mono(D, {1}, {1}, Coefficient::q_power(-1)));
        CHECK(x * y == mono(D, {1}, {1}));

        QTorusElement s = x + y;
        QTorusElement expect = mono(D, {2}, {0}) + mono(D, {0}, {2}) +
                               mono(D, {1}, {1}, Coefficient(1) + Coefficient::q_power(-1));
        CHECK(s * s == expect);

        IntVec D2{1, 2};
        QTorusElement u = mono(D2, {2, -1}, {1, 3}), v = mono(D2, {-2, 1}, {-1, -3});
        // b^T D a = 1*1*2 + 3*2*(-1) = -4
        CHECK(u * v == QTorusElement::monomial(D2, Monomial{{0, 0}, {0, 0}}, Coefficient::q_power(-4)));
        CHECK_THROWS_AS(u * mono(IntVec{1}, {0}, {0}), Error);
    }

    TEST_CASE("q-commute index")
    {
        IntVec D{1, 1};
        Monomial x1{{1, 0}, {0, 0}}, y1{{0, 0}, {1, 0}};
        CHECK(q_commute_index(x1, y1, D) == 1);
        CHECK(q_commute_index(x1, x1, D) == 0);
        IntVec I(5, 1);
        Monomial a{{-3, 1, -3, -1, -1}, IntVec(5, 0)}, b{IntVec(5, 0), IntVec(5, 1)};
        CHECK(q_commute_index(a, b, I) == -7);
    }

    TEST_CASE("random associativity, unit and commutation laws")
    {
        std::mt19937_64 rng(5);
        for (int t = 0; t < 60; ++t) {
            std::size_t m = 1 + rng() % 6;
            IntVec D(m);
            for (auto& d : D)
                d = 1 + static_cast<int>(rng() % 3);
            QTorusElement a = test::random_element(rng, D, 1 + rng() % 4);
            QTorusElement b = test::random_element(rng, D, 1 + rng() % 4);
            QTorusElement c = test::random_element(rng, D, 1 + rng() % 4);
            CHECK((a * b) * c == a * (b * c));
            CHECK(a * QTorusElement::one(D) == a);
            CHECK(QTorusElement::one(D) * a == a);
            CHECK(a * (b + c) == a * b + a * c);

            Monomial u = a.terms().begin()->first, v = b.terms().begin()->first;
            int e = q_commute_index(u, v, D);
            QTorusElement U = QTorusElement::monomial(D, u), V = QTorusElement::monomial(D, v);
            CHECK(U * V == Coefficient::q_power(e) * (V * U));

            QTorusElement unit = QTorusElement::monomial(D, u, Coefficient::monomial(2, {}, 3));
            CHECK(unit * inverse_unit(unit) == QTorusElement::one(D));
            CHECK(inverse_unit(unit) * unit == QTorusElement::one(D));
            CHECK(unit.pow(-2) * unit.pow(3) == unit);
        }
    }

    TEST_CASE("units and supports")
    {
        IntVec D{1, 1};
        CHECK(mono(D, {1, 0}, {0, 2}, Coefficient::monomial(3, {}, 2)).is_unit());
        IntVec D1{1};
        CHECK_FALSE((mono(D1, {1}, {0}) + mono(D1, {0}, {1})).is_unit());
        CHECK_THROWS_AS(inverse_unit(mono(D1, {1}, {0}) + mono(D1, {0}, {1})), Error);

        QTorusElement u = mono(D1, {0}, {1}) + mono(D1, {0}, {2});
        CHECK(u.supp_x() == std::set<IntVec>{{0}});
        CHECK(u.multiplicity({0}) == 2);
        QTorusElement w = mono(D, {1, -1}, {0, 0});
        CHECK(w.supp_x().size() == 1);
        CHECK(w.multiplicity({1, -1}) == 1);
    }

    TEST_CASE("coefficients")
    {
        Coefficient g = Coefficient::gamma(0), h = Coefficient::gamma(1);
        CHECK((g * *g.inverse()) == Coefficient(1));
        CHECK((g + h) * (g - h) == g * g - h * h);
        CHECK(multiply_shifted(g, h, 3) == (g * h).shift_q(3));
        CHECK_FALSE((g + h).inverse().has_value());
        CHECK((Coefficient(1) - Coefficient(1)).is_zero());
    }

    TEST_CASE("center and decomposition")
    {
        IntMatrix S = IntMatrix::from_rows({{0, 1}, {-1, 0}});
        CHECK(center_basis(IntMatrix(2, 2)).cols() == 2);
        CHECK(center_basis(S).cols() == 0);
        IntMatrix c = center_basis(block_diagonal({S, IntMatrix(1, 1)}));
        REQUIRE(c.cols() == 1);
        CHECK(abs(c(2, 0)) == 1);
        CHECK(c(0, 0) == 0);
        CHECK_THROWS_AS(center_basis(IntMatrix::identity(2)), Error);

        TorusDecomposition d = torus_decomposition(S);
        CHECK(d.multipliers.size() == 1);
        CHECK(d.multipliers[0] == 1);
        CHECK(d.center_dim == 0);
        CHECK(torus_decomposition(IntMatrix(3, 3)).center_dim == 3);

        std::mt19937_64 rng(9);
        for (int t = 0; t < 40; ++t) {
            std::size_t n = 2 + rng() % 7;
            IntMatrix h = test::random_skew(rng, n, 4);
            IntMatrix u = test::random_unimodular(rng, n);
            TorusDecomposition a = torus_decomposition(h), b = torus_decomposition(u.transpose() * h * u);
            CHECK(a.multipliers == b.multipliers);
            CHECK(a.center_dim == b.center_dim);
        }
    }

    TEST_CASE("extend_factor appends one tensor factor")
    {
        IntVec D{1};
        QTorusElement u = mono(D, {1}, {0}) + mono(D, {0}, {1});
        QTorusElement v = extend_factor(u, 2, -1, 1);
        CHECK(v.factors() == 2);
        CHECK(v.D() == IntVec{1, 2});
        CHECK(v.terms().count(Monomial{{1, -1}, {0, 1}}) == 1);
    }
}
