#pragma once

#include "qck/expression.hpp"
#include "qck/qtorus.hpp"
#include "qck/weyl.hpp"

#include <optional>
#include <set>
#include <string>
#include <vector>

namespace qck {

// The unique c in supp_x(u), of multiplicity 1, with a.c <= 0 on I,
// (a.c)_k < 0, and a.(c' - c) >= 0 on I, > 0 at k for every other c'.
// I and k are 1-based; k must lie in I.
std::optional<IntVec> is_pivot(const QTorusElement& u, const IntVec& a, const std::set<int>& I, int k);

struct PivotClaim {
    std::string a_expr;    // must evaluate to a unit with all x-exponents nonzero
    std::string elem_expr; // the element whose pivot is claimed
};

// Claim t uses I = [1,m] minus order[0..t-1] and k = order[t].
struct PivotCertificate {
    SignedWord word;
    IntVec order;
    std::vector<PivotClaim> claims;
};

struct ClaimReport {
    std::set<int> I;
    int k = 0;
    IntVec a;
    std::vector<IntVec> supp_x;
    std::optional<IntVec> witness;
    bool pass = false;
};

struct CertificateReport {
    std::vector<ClaimReport> claims;
    bool pass = false;
};

CertificateReport check_certificate(const RootDatum& rd, const PivotCertificate& cert);

// For double words whose halves have disjoint supports; nullopt otherwise.
std::optional<PivotCertificate> auto_certificate_disjoint(const RootDatum& rd, const SignedWord& word);

struct Table1Row {
    std::string w1, w2; // cycle notation
    PivotCertificate cert;
};
// The ten SL_3 rows, with every claim spelled out.
std::vector<Table1Row> table1_rows();

} // namespace qck
