#pragma once

#include "qck/weyl.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace qck {

// Every double reduced word of length at most max_len, in shortlex order
// on letters -n..-1, 1..n.
std::vector<SignedWord> all_double_words(const RootDatum& rd, int max_len);

// Every reduced word of length at most max_len over positive letters.
std::vector<IntVec> all_reduced_words(const RootDatum& rd, int max_len);

// One reduced word per Weyl group element (type A: per permutation),
// shortest-first, ties broken lexicographically.
std::vector<IntVec> weyl_group_elements(const RootDatum& rd);

// Grows a word letter by letter, choosing uniformly among extensions that
// keep both halves reduced; stops at target length or when stuck.
SignedWord random_double_word(const RootDatum& rd, int max_len, std::mt19937_64& rng);

// Double word whose negative letters spell w1 and positive letters w2.
SignedWord concat_double_word(const IntVec& w1, const IntVec& w2);

} // namespace qck
