#include "qck/pivots.hpp"
#include "qck/error.hpp"

#include <algorithm>

namespace qck {

std::optional<IntVec> is_pivot(const QTorusElement& u, const IntVec& a, const std::set<int>& I, int k)
{
    std::size_t m = u.factors();
    if (a.size() != m)
        throw Error(ErrorKind::SizeMismatch, "exponent vector length");
    if (!I.count(k))
        throw Error(ErrorKind::InvalidType, "k = " + std::to_string(k) + " is not in I");
    for (int i : I)
        if (i < 1 || i > static_cast<int>(m))
            throw Error(ErrorKind::IndexOutOfRange, "index in I outside [1,m]");

    std::set<IntVec> supp = u.supp_x();
    std::optional<IntVec> found;
    for (const IntVec& c : supp) {
        if (u.multiplicity(c) != 1)
            continue;
        bool ok = a[k - 1] * c[k - 1] < 0;
        for (int i : I)
            ok = ok && a[i - 1] * c[i - 1] <= 0;
        for (const IntVec& c2 : supp) {
            if (!ok)
                break;
            if (c2 == c)
                continue;
            ok = a[k - 1] * (c2[k - 1] - c[k - 1]) > 0;
            for (int i : I)
                ok = ok && a[i - 1] * (c2[i - 1] - c[i - 1]) >= 0;
        }
        if (ok) {
            cross_check(!found, "two pivots for the same type");
            found = c;
        }
    }
    return found;
}

CertificateReport check_certificate(const RootDatum& rd, const PivotCertificate& cert)
{
    int m = static_cast<int>(cert.word.size());
    if (static_cast<int>(cert.order.size()) != m || static_cast<int>(cert.claims.size()) != m)
        throw Error(ErrorKind::InvalidType, "certificate needs one order entry and one claim per letter");
    for (int v : cert.order)
        if (v < 1 || v > m)
            throw Error(ErrorKind::IndexOutOfRange, "order entry outside [1,m]");

    QuantumMatrixImage img(rd, cert.word);
    CertificateReport rep;
    rep.pass = true;
    std::set<int> I;
    for (int i = 1; i <= m; ++i)
        I.insert(i);
    for (int t = 0; t < m; ++t) {
        ClaimReport cr;
        cr.I = I;
        cr.k = cert.order[t];
        QTorusElement x = evaluate(img, parse_expression(cert.claims[t].a_expr));
        auto unit = x.as_unit();
        if (!unit)
            throw Error(ErrorKind::ExpressionNotUnit, "'" + cert.claims[t].a_expr + "' is not a unit");
        cr.a = unit->first.a;
        if (std::find(cr.a.begin(), cr.a.end(), 0) != cr.a.end())
            throw Error(ErrorKind::ExpressionNotUnit, "'" + cert.claims[t].a_expr + "' has a zero x-exponent");
        QTorusElement u = evaluate(img, parse_expression(cert.claims[t].elem_expr));
        auto supp = u.supp_x();
        cr.supp_x.assign(supp.begin(), supp.end());
        cr.witness = is_pivot(u, cr.a, cr.I, cr.k);
        cr.pass = cr.witness.has_value();
        rep.pass = rep.pass && cr.pass;
        rep.claims.push_back(std::move(cr));
        I.erase(cert.order[t]);
    }
    return rep;
}

namespace {

std::string principal_minor(int from, int to)
{
    std::string r;
    for (int l = from; l <= to; ++l)
        r += std::to_string(l);
    return "minor(" + r + "|" + r + ")";
}

std::string join_product(const std::vector<std::string>& fs)
{
    std::string s;
    for (std::size_t i = 0; i < fs.size(); ++i)
        s += (i ? "*" : "") + fs[i];
    return s;
}

} // namespace

std::optional<PivotCertificate> auto_certificate_disjoint(const RootDatum& rd, const SignedWord& word)
{
    if (!rd.is_type_a())
        throw Error(ErrorKind::InvalidArgument, "automatic certificates are implemented for type A");
    DoubleWordSplit split = split_double_word(rd, word);
    std::set<int> s1(split.w1.begin(), split.w1.end()), s2(split.w2.begin(), split.w2.end());
    for (int i : s1)
        if (s2.count(i))
            return std::nullopt;
    int m = static_cast<int>(word.size());
    PivotCertificate cert;
    cert.word = word;
    if (m == 0)
        return cert;
    int N = rd.rank() + 1;
    // the top-left i x i minor carries weight omega_i on both sides, the
    // bottom-right (N-i) x (N-i) minor carries -omega_i
    std::vector<std::string> pos, neg;
    for (int i : split.supp) {
        pos.push_back(principal_minor(1, i));
        neg.push_back(principal_minor(i + 1, N));
    }
    std::string a_expr = join_product(pos), elem = join_product(neg);

    QuantumMatrixImage img(rd, word);
    QTorusElement x = evaluate(img, parse_expression(a_expr));
    QTorusElement u = evaluate(img, parse_expression(elem));
    auto ux = x.as_unit(), uu = u.as_unit();
    if (!ux || !uu || ux->first.a != IntVec(m, 1) || uu->first.a != IntVec(m, -1))
        throw Error(ErrorKind::AutoConstructionFailed, "principal minors are not the expected units for " +
                                                           word.to_string());
    for (int k = 1; k <= m; ++k) {
        cert.order.push_back(k);
        cert.claims.push_back({a_expr, elem});
    }
    return cert;
}

std::vector<Table1Row> table1_rows()
{
    auto row = [](std::string w1, std::string w2, const char* word, IntVec order, std::vector<std::string> a,
                  std::vector<std::string> e) {
        Table1Row r{std::move(w1), std::move(w2), {}};
        r.cert.word = parse_word(word);
        r.cert.order = std::move(order);
        for (std::size_t t = 0; t < e.size(); ++t)
            r.cert.claims.push_back({a.size() == 1 ? a[0] : a[t], e[t]});
        return r;
    };
    const std::string D12 = "minor(12|12)", D23 = "minor(23|23)";
    return {
        row("(12)", "(12)", "-1,1", {1, 2}, {"x11"}, {"x22", "x22"}),
        row("(12)", "(123)", "-1,1,2", {1, 2, 3}, {"x11*x33"}, {"x22", "x22", "x12"}),
        row("(12)", "(132)", "-1,2,1", {1, 2, 3}, {"x11*x33"}, {"x22", "x22", "x22"}),
        row("(12)", "(13)", "-1,1,2,1", {1, 2, 3, 4}, {"x11*" + D12}, {"x23", "x23", "x33", "x12"}),
        row("(123)", "(123)", "-1,-2,1,2", {3, 2, 4, 1}, {"x32^2*x11*" + D12}, {"x21", "x33", "x33", "x23"}),
        row("(123)", "(132)", "-1,-2,2,1", {2, 3, 1, 4}, {"x11*" + D12}, {"x33", "x33", "x22", "x22"}),
        row("(123)", "(13)", "1,2,1,-1,-2", {3, 4, 2, 5, 1},
            {"x21^2*x33*" + D23, "x21^2*x33*" + D23, "x33*" + D23, "x33*" + D23, "x33*" + D23},
            {"minor(13|12)", "minor(13|12)", D12, D12, "x12"}),
        row("(132)", "(123)", "-2,-1,1,2", {2, 3, 1, 4}, {"x11*" + D12}, {D23, D23, "x33", "x33"}),
        row("(132)", "(13)", "1,2,1,-2,-1", {2, 3, 4, 1, 5}, {"x33*minor(13|12)^2*" + D23},
            {"x21", "x21", "x21", "minor(23|13)", "minor(12|13)"}),
        row("(13)", "(13)", "-1,1,-2,2,-1,1", {3, 4, 1, 2, 5, 6}, {"x13*x31*minor(12|23)*minor(23|12)"},
            {"x33", "x33", "x23", "x23", "x32", "x32"}),
    };
}

} // namespace qck
