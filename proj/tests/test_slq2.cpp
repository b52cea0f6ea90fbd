#include "qck/error.hpp"
#include "qck/slq2.hpp"
#include "qck/wiring.hpp"
#include "support.hpp"

#include <doctest.h>

using namespace qck;

namespace {

TensorVector basis(IntVec n)
{
    return {{std::move(n), Coefficient(1)}};
}

} // namespace

TEST_SUITE("slq2")
{
    TEST_CASE("typical actions")
    {
        Coefficient g = Coefficient::gamma(0), h = Coefficient::gamma(1);
        auto minus = TypicalModuleSpec::formal(TypicalKind::Mminus);
        CHECK(act(minus, Gen::x21, {{3, 1}}) == ModuleVector{{3, g * Coefficient::q_power(3)}});
        CHECK(act(minus, Gen::x12, {{3, 1}}).empty());
        auto hw = TypicalModuleSpec::formal(TypicalKind::HighestWeight);
        CHECK(act(hw, Gen::x11, {{0, 1}}).empty());
        CHECK_THROWS_AS(act(hw, Gen::x11, {{-1, 1}}), Error);
        auto lw = TypicalModuleSpec::formal(TypicalKind::LowestWeight);
        CHECK(act(lw, Gen::x22, {{0, 1}}).empty());
        auto lau = TypicalModuleSpec::formal(TypicalKind::Laurent);
        CHECK(act(lau, Gen::x11, {{1, 1}}) == ModuleVector{{0, Coefficient(1) + g * h * Coefficient::q_power(1)}});
        CHECK(parse_kind("laurent") == TypicalKind::Laurent);
        CHECK_THROWS_AS(parse_kind("other"), Error);
        CHECK(parse_gen("x21") == Gen::x21);
    }

    TEST_CASE("relation suites")
    {
        for (TypicalKind k : {TypicalKind::Mminus, TypicalKind::Mplus, TypicalKind::Laurent,
                              TypicalKind::HighestWeight, TypicalKind::LowestWeight})
            CHECK(verify_module(TypicalModuleSpec::formal(k), 8).all_pass());

        auto bad = TypicalModuleSpec::formal(TypicalKind::Laurent);
        bad.gamma = Coefficient(1);
        bad.eta = Coefficient::monomial(1, {}, -1);
        CHECK(bad.excluded_k() == 0);
        ModuleReport rep = verify_module(bad, 5);
        REQUIRE(rep.first_failure().has_value());
        CHECK(rep.first_failure()->index == 0);
        CHECK(rep.failures() == 1);

        auto shifted = bad;
        shifted.eta = Coefficient::monomial(-3, {}, -1);
        CHECK(shifted.excluded_k() == -2);
        CHECK(verify_module(shifted, 5).first_failure()->index == 2);

        auto fine = bad;
        fine.eta = Coefficient::monomial(2, {}, -1);
        CHECK_FALSE(fine.excluded_k().has_value());
        CHECK(verify_module(fine, 5).all_pass());

        bad.eta = Coefficient();
        CHECK_THROWS_AS(verify_module(bad, 3), Error);
    }

    TEST_CASE("monomial actions on tensor modules")
    {
        RootDatum a1 = RootDatum::type_a(1);
        TensorModule M = TensorModule::formal(a1, parse_word("-1,1"));
        CHECK(monomial_action(M, Monomial{{1, 1}, {0, 0}}, basis({0, 0})) == basis({-1, -1}));
        Coefficient g = Coefficient::gamma(0);
        for (int n : {-2, 0, 3}) {
            TensorVector r = monomial_action(M, Monomial{{0, 0}, {2, 0}}, basis({n, 0}));
            CHECK(r == TensorVector{{{n, 0}, g * g * Coefficient::q_power(2 * n)}});
        }
        CHECK(monomial_action(M, Monomial{{0, 0}, {0, 0}}, basis({4, -1})) == basis({4, -1}));
        CHECK_THROWS_AS(monomial_action(M, Monomial{{0}, {0}}, basis({0, 0})), Error);
    }

    TEST_CASE("element action is a representation")
    {
        std::mt19937_64 rng(31);
        RootDatum a2 = RootDatum::type_a(2);
        TensorModule M = TensorModule::formal(a2, parse_word("1,-2,2"));
        for (int t = 0; t < 30; ++t) {
            QTorusElement u = test::random_element(rng, M.D, 3), v = test::random_element(rng, M.D, 3);
            TensorVector e = basis({static_cast<int>(rng() % 5) - 2, 1, -1});
            CHECK(element_action(M, u * v, e) == element_action(M, u, element_action(M, v, e)));
            // y^b x^a = q^{-b^T D a} x^a y^b as operators
            Monomial x{{1, -1, 2}, {0, 0, 0}}, y{{0, 0, 0}, {2, 1, -1}};
            int c = q_commute_index(x, y, M.D);
            TensorVector xy = monomial_action(M, x, monomial_action(M, y, e));
            TensorVector yx = monomial_action(M, y, monomial_action(M, x, e));
            TensorVector shifted;
            for (const auto& [n, co] : yx)
                shifted[n] = co.shift_q(c);
            CHECK(xy == shifted);
        }
        CHECK(element_action(M, QTorusElement(M.D), basis({0, 0, 0})).empty());

        SignedWord w = parse_word("1,2,1,-1,-2");
        TensorModule W = TensorModule::formal(a2, w);
        CHECK(element_action(W, generator_image(a2, w, 1, 2), basis(IntVec(5, 0))).size() == 3);
    }

    TEST_CASE("tensor module relations")
    {
        RootDatum a1 = RootDatum::type_a(1), a2 = RootDatum::type_a(2);
        CHECK(verify_tensor_module(a1, TensorModule::formal(a1, parse_word("-1,1")), 4).all_pass());
        CHECK(verify_tensor_module(a2, TensorModule::formal(a2, parse_word("1,-2")), 3).all_pass());
    }

    TEST_CASE("weight spaces")
    {
        RootDatum a1 = RootDatum::type_a(1);
        SignedWord w = parse_word("-1,1");
        CHECK(weight_space_of(a1, w, {2, 5}) == IntVec{7});
        CHECK(weight_space_of(a1, w, {0, 0}) == IntVec{0});
        CHECK_THROWS_AS(weight_space_of(a1, w, {1}), Error);
    }
}
