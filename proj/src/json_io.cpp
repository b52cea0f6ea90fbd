#include "qck/json_io.hpp"
#include "qck/error.hpp"

namespace qck {

json to_json(const mpz_class& z)
{
    if (z.fits_slong_p())
        return z.get_si();
    return z.get_str();
}

mpz_class mpz_from_json(const json& j)
{
    if (j.is_number_integer())
        return mpz_class(std::to_string(j.get<long long>()));
    if (j.is_string()) {
        mpz_class z;
        if (z.set_str(j.get<std::string>(), 10) != 0)
            throw Error(ErrorKind::Parse, "bad integer string");
        return z;
    }
    throw Error(ErrorKind::Parse, "expected an integer");
}

json to_json(const ZVec& v)
{
    json a = json::array();
    for (const auto& z : v)
        a.push_back(to_json(z));
    return a;
}

json to_json(const IntMatrix& m)
{
    json a = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i)
        a.push_back(to_json(m.row(i)));
    return a;
}

IntMatrix matrix_from_json(const json& j)
{
    if (!j.is_array())
        throw Error(ErrorKind::Parse, "matrix must be an array of rows");
    std::size_t nc = j.empty() ? 0 : j[0].size();
    IntMatrix m(j.size(), nc);
    for (std::size_t i = 0; i < j.size(); ++i) {
        if (!j[i].is_array() || j[i].size() != nc)
            throw Error(ErrorKind::ShapeMismatch, "ragged matrix rows");
        for (std::size_t c = 0; c < nc; ++c)
            m(i, c) = mpz_from_json(j[i][c]);
    }
    return m;
}

json to_json(const Coefficient& c)
{
    json a = json::array();
    for (const auto& [k, v] : c.terms())
        a.push_back({{"q", k.q},
                     {"gamma", k.gamma},
                     {"num", to_json(mpz_class(v.get_num()))},
                     {"den", to_json(mpz_class(v.get_den()))}});
    return a;
}

Coefficient coefficient_from_json(const json& j)
{
    Coefficient c;
    for (const auto& t : j) {
        mpq_class v(mpz_from_json(t.at("num")), mpz_from_json(t.at("den")));
        v.canonicalize();
        c += Coefficient::monomial(t.at("q").get<int>(), t.value("gamma", IntVec{}), v);
    }
    return c;
}

json to_json(const QTorusElement& u)
{
    json terms = json::array();
    for (const auto& [mono, c] : u.terms())
        terms.push_back({{"a", mono.a}, {"b", mono.b}, {"coeff", to_json(c)}});
    return {{"m", u.factors()}, {"D", u.D()}, {"terms", terms}};
}

QTorusElement element_from_json(const json& j)
{
    IntVec D = j.at("D").get<IntVec>();
    if (j.contains("m") && j.at("m").get<std::size_t>() != D.size())
        throw Error(ErrorKind::SizeMismatch, "m does not match the length of D");
    QTorusElement u(D);
    for (const auto& t : j.at("terms"))
        u.add_term(Monomial{t.at("a").get<IntVec>(), t.at("b").get<IntVec>()}, coefficient_from_json(t.at("coeff")));
    return u;
}

json to_json(const WordInvariants& inv)
{
    return {{"m", inv.m},
            {"s", inv.s},
            {"n", inv.n_dim},
            {"rank_H", inv.rank_H},
            {"d", inv.d},
            {"center_dim", inv.center_dim},
            {"k", inv.k},
            {"multipliers", to_json(inv.multipliers)},
            {"cprime_dim", inv.cprime_dim}};
}

json to_json(const PsiReport& r)
{
    return {{"ok", r.ok},
            {"factors", to_json(r.factors)},
            {"reduced_ok", r.reduced_ok},
            {"reduced_factors", to_json(r.reduced_factors)},
            {"psi", to_json(r.psi)}};
}

json to_json(const CertificateReport& r)
{
    json claims = json::array();
    for (const auto& c : r.claims) {
        json w = c.witness ? json(*c.witness) : json(nullptr);
        claims.push_back({{"I", c.I}, {"k", c.k}, {"a", c.a}, {"supp_x", c.supp_x}, {"witness", w}, {"pass", c.pass}});
    }
    return {{"pass", r.pass}, {"claims", claims}};
}

json to_json(const CongruenceReport& r)
{
    return {{"ok", r.ok()},
            {"congruent", r.congruent},
            {"reorder_exact", r.reorder_exact},
            {"rank_Hcal", r.rank_Hcal},
            {"expected_rank", r.expected_rank},
            {"multipliers_H", to_json(r.multipliers_H)},
            {"multipliers_Hcal", to_json(r.multipliers_Hcal)}};
}

json to_json(const ModuleReport& r)
{
    json fails = json::array();
    for (const auto& c : r.checks)
        if (!c.pass)
            fails.push_back({{"relation", c.relation}, {"index", c.index}});
    return {{"pass", r.all_pass()}, {"checks", r.checks.size()}, {"failures", fails}};
}

json to_json(const TensorVector& v)
{
    json a = json::array();
    for (const auto& [n, c] : v)
        a.push_back({{"n", n}, {"coeff", to_json(c)}});
    return a;
}

TensorVector tensor_vector_from_json(const json& j)
{
    TensorVector v;
    for (const auto& t : j) {
        Coefficient c = t.contains("coeff") ? coefficient_from_json(t.at("coeff")) : Coefficient(1);
        v[t.at("n").get<IntVec>()] += c;
    }
    return v;
}

PivotCertificate certificate_from_json(const json& j)
{
    PivotCertificate c;
    const json& w = j.at("word");
    if (w.is_string())
        c.word = parse_word(w.get<std::string>());
    else
        c.word.letters = w.get<IntVec>();
    c.order = j.at("order").get<IntVec>();
    for (const auto& cl : j.at("claims"))
        c.claims.push_back({cl.at("a_expr").get<std::string>(), cl.at("elem_expr").get<std::string>()});
    return c;
}

json to_json(const PivotCertificate& c)
{
    json claims = json::array();
    for (const auto& cl : c.claims)
        claims.push_back({{"a_expr", cl.a_expr}, {"elem_expr", cl.elem_expr}});
    return {{"word", c.word.letters}, {"order", c.order}, {"claims", claims}};
}

} // namespace qck
