#pragma once

#include "qck/intlinalg.hpp"

#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace qck {

using IntVec = std::vector<int>;

// Finite-type Cartan data. Indices are 1-based throughout the public API.
class RootDatum {
public:
    static RootDatum type_a(int n);
    static RootDatum from_cartan(const std::vector<std::vector<int>>& cartan);

    int rank() const { return n_; }
    // c_ij = (alpha_i^vee, alpha_j)
    int cartan(int i, int j) const;
    int symmetrizer(int i) const;
    // (alpha_i, alpha_j) = d_i c_ij
    int root_pairing(int i, int j) const { return symmetrizer(i) * cartan(i, j); }
    bool is_type_a() const { return type_a_; }
    void check_index(int i) const;

private:
    int n_ = 0;
    std::vector<int> c_;
    std::vector<int> d_;
    bool type_a_ = false;
};

// Coordinates (mu, alpha_i^vee), i.e. the fundamental weight basis.
struct Weight {
    IntVec c;

    int pair(int i) const { return c.at(i - 1); }
    bool is_zero() const;
    Weight& operator+=(const Weight& o);
    Weight& operator-=(const Weight& o);
    friend Weight operator+(Weight a, const Weight& b) { return a += b; }
    friend Weight operator-(Weight a, const Weight& b) { return a -= b; }
    friend Weight operator*(int s, Weight a);
    friend bool operator==(const Weight&, const Weight&) = default;
    friend auto operator<=>(const Weight&, const Weight&) = default;
    std::string to_string() const;
};

Weight zero_weight(const RootDatum& rd);
Weight fundamental_weight(const RootDatum& rd, int i);
Weight simple_root(const RootDatum& rd, int i);
Weight reflect(const RootDatum& rd, int i, const Weight& mu);
// w(mu) for w = s_{i_1} ... s_{i_k}
Weight apply_word(const RootDatum& rd, const IntVec& word, const Weight& mu);
// Type A only: the weight of the j-th standard basis vector, omega_j - omega_{j-1}.
Weight natural_weight(const RootDatum& rd, int j);

// Roots and coroots written in the simple root (resp. coroot) basis.
IntVec reflect_root(const RootDatum& rd, int i, const IntVec& root);
IntVec reflect_coroot(const RootDatum& rd, int i, const IntVec& coroot);
IntVec apply_word_root(const RootDatum& rd, const IntVec& word, const IntVec& root);
IntVec apply_word_coroot(const RootDatum& rd, const IntVec& word, const IntVec& coroot);
IntVec unit_vector(int n, int i);
bool is_positive_root(const IntVec& root);

bool is_reduced(const RootDatum& rd, const IntVec& word);
// Independent of the type: reduced iff every s_{i_1}..s_{i_{k-1}}(alpha_{i_k}) is positive.
bool is_reduced_by_roots(const RootDatum& rd, const IntVec& word);
// Type A: one-line notation of the permutation s_{i_1} ... s_{i_k} of {1..n+1}.
IntVec word_permutation(int n, const IntVec& word);
int inversion_count(const IntVec& perm);

// column j holds the coordinates of w(omega_j)
IntMatrix weyl_matrix(const RootDatum& rd, const IntVec& word);
int ker_rank(const RootDatum& rd, const IntVec& w1, const IntVec& w2);

struct SignedWord {
    IntVec letters;

    std::size_t size() const { return letters.size(); }
    int sign(std::size_t k) const { return letters.at(k) > 0 ? 1 : -1; }
    int index(std::size_t k) const { return letters.at(k) > 0 ? letters[k] : -letters[k]; }
    std::string to_string() const;
    friend bool operator==(const SignedWord&, const SignedWord&) = default;
    friend auto operator<=>(const SignedWord&, const SignedWord&) = default;
};

SignedWord parse_word(std::string_view text);

struct DoubleWordSplit {
    IntVec w1; // negative letters, in order, sign dropped
    IntVec w2; // positive letters, in order
    std::set<int> supp;
};

// Validates letters and that both halves are reduced.
DoubleWordSplit split_double_word(const RootDatum& rd, const SignedWord& word);
bool is_double_reduced(const RootDatum& rd, const SignedWord& word);
std::string word_to_string(const IntVec& w);

} // namespace qck
