#include "qck/error.hpp"
#include "qck/expression.hpp"
#include "qck/json_io.hpp"
#include "qck/words.hpp"

#include <doctest.h>

using namespace qck;

TEST_SUITE("json")
{
    TEST_CASE("elements round-trip")
    {
        RootDatum a2 = RootDatum::type_a(2);
        SignedWord w = parse_word("1,2,1,-1,-2");
        for (const char* e : {"x12", "minor(13|12)", "x21^2*x33*minor(23|23)", "x33^-1"}) {
            QTorusElement u = expression_image(a2, w, e);
            CHECK(element_from_json(json::parse(to_json(u).dump())) == u);
        }
        QTorusElement g = Coefficient::gamma(1, -2) * QTorusElement::one({1, 2});
        CHECK(element_from_json(to_json(g)) == g);
        Coefficient c = Coefficient::monomial(3, {1, -1}, mpq_class(2, 3));
        CHECK(coefficient_from_json(to_json(c)) == c);
    }

    TEST_CASE("terms are ordered")
    {
        RootDatum a2 = RootDatum::type_a(2);
        json j = to_json(expression_image(a2, parse_word("1,2,1,-1,-2"), "x12"));
        REQUIRE(j["terms"].size() == 3);
        auto key = [&](std::size_t i) {
            return std::make_pair(j["terms"][i]["a"].get<IntVec>(), j["terms"][i]["b"].get<IntVec>());
        };
        CHECK(key(0) < key(1));
        CHECK(key(1) < key(2));
    }

    TEST_CASE("certificates and vectors")
    {
        PivotCertificate c = table1_rows()[6].cert;
        PivotCertificate back = certificate_from_json(to_json(c));
        CHECK(back.word == c.word);
        CHECK(back.order == c.order);
        CHECK(back.claims.size() == c.claims.size());
        json alt = {{"word", {1, -1}}, {"order", {1, 2}}, {"claims", json::array()}};
        CHECK(certificate_from_json(alt).word == parse_word("1,-1"));
        CHECK_THROWS(certificate_from_json(json{{"order", {1}}}));

        TensorVector v{{{1, -2}, Coefficient::gamma(0)}, {{0, 0}, Coefficient(3)}};
        CHECK(tensor_vector_from_json(to_json(v)) == v);
        CHECK(matrix_from_json(to_json(IntMatrix::from_rows({{1, -2}, {3, 4}}))) ==
              IntMatrix::from_rows({{1, -2}, {3, 4}}));
    }

    TEST_CASE("invariants report")
    {
        RootDatum a2 = RootDatum::type_a(2);
        json j = to_json(invariants(a2, parse_word("1,2,1,-1,-2")));
        CHECK(j["m"] == 5);
        CHECK(j["s"] == 2);
        CHECK(j["n"] == 7);
        CHECK(j["d"] == 1);
        CHECK(j["k"] == 1);
    }
}
