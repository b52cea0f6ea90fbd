#pragma once

#include "qck/qtorus.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace qck {

struct SuiteResult {
    int id = 0;
    std::string name;
    std::size_t cases = 0;
    std::size_t failures = 0;
    double seconds = 0;
    double limit = 0; // wall-clock budget in seconds
    std::vector<std::string> notes; // first few failures, plus summary lines

    bool pass() const { return failures == 0 && cases > 0 && seconds <= limit; }
};

// names in criterion order: worked-example, lindstrom, homomorphism, rank,
// congruence, psi, table1, disjoint, modules, simplicity
const std::vector<std::string>& suite_names();
// 1-based id; throws InvalidArgument on an unknown name
int suite_id(std::string_view name);
SuiteResult run_suite(int id);

// Builds an element from a tensor display such as "x^-3 | x | y^2 x^-1",
// multiplying the letters of each factor left to right.
QTorusElement display_element(const IntVec& D, std::string_view text, const Coefficient& c = 1);

} // namespace qck
