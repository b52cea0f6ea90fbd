#pragma once

#include "qck/congruence.hpp"
#include "qck/pivots.hpp"
#include "qck/qtorus.hpp"
#include "qck/slq2.hpp"
#include "qck/strings.hpp"

#include <json.hpp>

namespace qck {

using json = nlohmann::json;

json to_json(const mpz_class& z);
mpz_class mpz_from_json(const json& j);
json to_json(const ZVec& v);
json to_json(const IntMatrix& m);
IntMatrix matrix_from_json(const json& j);

json to_json(const Coefficient& c);
Coefficient coefficient_from_json(const json& j);
// {"m", "D", "terms": [{"a", "b", "coeff": [{"q", "gamma", "num", "den"}]}]}
json to_json(const QTorusElement& u);
QTorusElement element_from_json(const json& j);

json to_json(const WordInvariants& inv);
json to_json(const PsiReport& r);
json to_json(const CertificateReport& r);
json to_json(const CongruenceReport& r);
json to_json(const ModuleReport& r);
json to_json(const TensorVector& v);
TensorVector tensor_vector_from_json(const json& j);

// {"word": "1,2,-1", "order": [..], "claims": [{"a_expr", "elem_expr"}]}
PivotCertificate certificate_from_json(const json& j);
json to_json(const PivotCertificate& c);

} // namespace qck
