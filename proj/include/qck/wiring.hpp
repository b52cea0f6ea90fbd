#pragma once

#include "qck/qtorus.hpp"
#include "qck/weyl.hpp"

#include <map>
#include <string>
#include <vector>

namespace qck {

// Levels 1..n+1 bottom to top; column k crosses levels |i_k| and |i_k|+1.
// A positive letter lets a path rise from |i_k| to |i_k|+1, a negative
// letter lets it fall from |i_k|+1 to |i_k|.
class WiringDiagram {
public:
    WiringDiagram(const RootDatum& rd, const SignedWord& word);

    int levels() const { return levels_; }
    std::size_t columns() const { return word_.size(); }
    const SignedWord& word() const { return word_; }
    const IntVec& D() const { return D_; }
    int crossing_level(std::size_t k) const { return word_.index(k); }
    int sign(std::size_t k) const { return word_.sign(k); }

    // x-exponent of a path that stays on `level` through column k
    int stay_exponent(std::size_t k, int level) const;
    // level reached when crossing in column k from `level`, or 0 if not allowed
    int cross_target(std::size_t k, int level) const;

private:
    int levels_;
    SignedWord word_;
    IntVec D_;
};

// levels[k] is the level after column k; levels[0] is the start
struct Path {
    IntVec levels;
    int start() const { return levels.front(); }
    int end() const { return levels.back(); }
    friend bool operator==(const Path&, const Path&) = default;
    friend auto operator<=>(const Path&, const Path&) = default;
};
using PathFamily = std::vector<Path>; // ordered by start level

Monomial path_weight(const WiringDiagram& dg, const Path& p);
std::vector<Path> enumerate_paths(const WiringDiagram& dg, int from, int to);
// vertex-disjoint families joining rows[s] to cols[s] after sorting both
std::vector<PathFamily> enumerate_families(const WiringDiagram& dg, const IntVec& rows, const IntVec& cols);
QTorusElement family_weight(const WiringDiagram& dg, const PathFamily& fam);

// Images under the wiring-diagram representation, with caching.
class QuantumMatrixImage {
public:
    QuantumMatrixImage(const RootDatum& rd, const SignedWord& word);

    const WiringDiagram& diagram() const { return dg_; }
    const RootDatum& datum() const { return rd_; }
    const QTorusElement& generator(int i, int j);
    const QTorusElement& minor(const IntVec& rows, const IntVec& cols);
    // permutation expansion of the quantum minor over generator images
    QTorusElement minor_by_expansion(const IntVec& rows, const IntVec& cols);

private:
    RootDatum rd_;
    WiringDiagram dg_;
    std::map<std::pair<IntVec, IntVec>, QTorusElement> cache_;
};

QTorusElement generator_image(const RootDatum& rd, const SignedWord& word, int i, int j);
QTorusElement minor_image(const RootDatum& rd, const SignedWord& word, const IntVec& rows, const IntVec& cols);
QTorusElement minor_image_oracle(const RootDatum& rd, const SignedWord& word, const IntVec& rows, const IntVec& cols);

struct RelationInstance {
    std::string family; // commute_row, commute_col, commute_anti, commute_diag, det
    std::vector<int> indices;
    bool pass = false;
};
struct RelationReport {
    std::vector<RelationInstance> instances;
    bool all_pass() const;
    std::size_t failures() const;
};
RelationReport verify_relations(const RootDatum& rd, const SignedWord& word);

std::string render_ascii(const WiringDiagram& dg);
std::string render_svg(const WiringDiagram& dg);

// all subsets of {1..N} of size k, in lexicographic order
std::vector<IntVec> subsets(int N, int k);

} // namespace qck
