#include "qck/error.hpp"
#include "qck/pivots.hpp"
#include "qck/words.hpp"

#include <doctest.h>

using namespace qck;

TEST_SUITE("pivots")
{
    TEST_CASE("pivot witnesses in the A_2 example")
    {
        RootDatum a2 = RootDatum::type_a(2);
        SignedWord w = parse_word("1,2,1,-1,-2");
        QTorusElement d12 = expression_image(a2, w, "minor(12|12)");
        CHECK(is_pivot(d12, IntVec(5, -1), {1, 2, 5}, 2) == IntVec{0, 1, 0, 0, 1});
        QTorusElement d13 = expression_image(a2, w, "minor(13|12)");
        CHECK(is_pivot(d13, {-3, 1, -3, -1, -1}, {1, 2, 3, 4, 5}, 3) == IntVec{1, -1, 1, 1, 0});
        CHECK_THROWS_AS(is_pivot(d13, {-3, 1, -3, -1, -1}, {1, 2}, 3), Error);
        CHECK_THROWS_AS(is_pivot(d13, {-3, 1, -3}, {1, 2, 3}, 3), Error);

        // a scalar multiple has the same pivots
        QTorusElement scaled = Coefficient::monomial(4, {}, -3) * d13;
        CHECK(is_pivot(scaled, {-3, 1, -3, -1, -1}, {1, 2, 4, 5}, 4) ==
              is_pivot(d13, {-3, 1, -3, -1, -1}, {1, 2, 4, 5}, 4));
    }

    TEST_CASE("a monomial orthogonal to a has no pivot")
    {
        IntVec D{1, 1};
        QTorusElement u = QTorusElement::monomial(D, Monomial{{0, 1}, {0, 0}});
        CHECK_FALSE(is_pivot(u, {1, 1}, {1, 2}, 1).has_value());
        CHECK(is_pivot(u, {1, -1}, {1, 2}, 2) == IntVec{0, 1});
    }

    TEST_CASE("table rows")
    {
        RootDatum a2 = RootDatum::type_a(2);
        auto rows = table1_rows();
        REQUIRE(rows.size() == 10);
        for (const Table1Row& row : rows) {
            CertificateReport rep = check_certificate(a2, row.cert);
            CHECK(rep.pass);
            for (const ClaimReport& c : rep.claims)
                CHECK(std::find(c.a.begin(), c.a.end(), 0) == c.a.end());
            CHECK(check_certificate(a2, row.cert).claims.size() == rep.claims.size());
        }
        CHECK(rows[0].cert.word == parse_word("-1,1"));
        CHECK(rows[9].cert.order == IntVec{3, 4, 1, 2, 5, 6});
    }

    TEST_CASE("malformed certificates")
    {
        RootDatum a2 = RootDatum::type_a(2);
        PivotCertificate c = table1_rows()[0].cert;
        c.order = {1, 3};
        CHECK_THROWS_AS(check_certificate(a2, c), Error);
        c = table1_rows()[0].cert;
        c.claims[0].a_expr = "x12";
        CHECK_THROWS_AS(check_certificate(a2, c), Error);
        c.claims[0].a_expr = "x11*";
        CHECK_THROWS_AS(check_certificate(a2, c), ParseError);
        c = table1_rows()[0].cert;
        c.order = {1, 1};
        CHECK_THROWS_AS(check_certificate(a2, c), Error);
    }

    TEST_CASE("automatic certificates for disjoint supports")
    {
        RootDatum a2 = RootDatum::type_a(2);
        auto c = auto_certificate_disjoint(a2, parse_word("-1,2"));
        REQUIRE(c.has_value());
        CHECK(check_certificate(a2, *c).pass);
        auto e = auto_certificate_disjoint(a2, parse_word("1,2,1"));
        REQUIRE(e.has_value());
        CHECK(check_certificate(a2, *e).pass);
        CHECK_FALSE(auto_certificate_disjoint(a2, parse_word("-1,1")).has_value());

        RootDatum a3 = RootDatum::type_a(3);
        for (const SignedWord& w : all_double_words(a3, 4))
            if (auto cert = auto_certificate_disjoint(a3, w))
                CHECK(check_certificate(a3, *cert).pass);
    }
}
