#pragma once

#include "qck/wiring.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace qck {

// expr   := factor ("*" factor)*
// factor := atom ("^" integer)?
// atom   := "x" digit digit | "minor(" digits "|" digits ")"
struct ExprAtom {
    IntVec rows, cols; // a generator x_ij is the 1x1 minor
    int exponent = 1;
};

struct Expression {
    std::vector<ExprAtom> factors;
    std::string to_string() const;
};

Expression parse_expression(std::string_view text);
QTorusElement evaluate(QuantumMatrixImage& img, const Expression& e);
QTorusElement expression_image(const RootDatum& rd, const SignedWord& word, std::string_view text);

} // namespace qck
