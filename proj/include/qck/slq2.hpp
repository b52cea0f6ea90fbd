#pragma once

#include "qck/qtorus.hpp"
#include "qck/strings.hpp"
#include "qck/weyl.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace qck {

enum class TypicalKind { Mminus, Mplus, Laurent, HighestWeight, LowestWeight };

const char* kind_name(TypicalKind k);
TypicalKind parse_kind(const std::string& s);

// Parameters are coefficients: a formal symbol gamma_j or any nonzero
// monomial c q^e (a "specialization").
struct TypicalModuleSpec {
    TypicalKind kind = TypicalKind::Laurent;
    Coefficient gamma = Coefficient::gamma(0);
    Coefficient eta = Coefficient::gamma(1);

    static TypicalModuleSpec formal(TypicalKind kind);
    // For the Laurent kind: the k with gamma*eta == -q^{2k+1}, if any.
    std::optional<int> excluded_k() const;
};

enum class Gen { x11, x12, x21, x22 };
Gen parse_gen(const std::string& s);
const char* gen_name(Gen g);

using ModuleVector = std::map<int, Coefficient>; // basis index -> coefficient

bool in_domain(TypicalKind kind, int i);
ModuleVector act(const TypicalModuleSpec& spec, Gen g, const ModuleVector& v);

struct ModuleCheck {
    std::string relation;
    int index = 0;
    bool pass = false;
};
struct ModuleReport {
    std::vector<ModuleCheck> checks;
    std::size_t failures() const;
    bool all_pass() const { return failures() == 0; }
    std::optional<ModuleCheck> first_failure() const;
};

// All defining relations of O_q(SL_2) on e_i for |i| <= N inside the
// domain, plus the requirement that x11 moves every e_i (i within the
// domain and not at its boundary) to a nonzero multiple of e_{i-1}.
ModuleReport verify_module(const TypicalModuleSpec& spec, int N);

// Tensor products of Borel-lifted modules over a double word.
using TensorVector = std::map<IntVec, Coefficient>;

struct TensorModule {
    SignedWord word;
    IntVec D;
    std::vector<Coefficient> gamma; // one parameter per factor

    static TensorModule formal(const RootDatum& rd, const SignedWord& word);
};

// x^a e_n = e_{n-a};  y^b e_n = prod gamma_k^{b_k} q^{b^T D n} e_n
TensorVector monomial_action(const TensorModule& M, const Monomial& mono, const TensorVector& v);
TensorVector element_action(const TensorModule& M, const QTorusElement& u, const TensorVector& v);

ModuleReport verify_tensor_module(const RootDatum& rd, const TensorModule& M, int N);

// m with Omega~^T D n == Theta m
IntVec weight_space_of(const RootDatum& rd, const SignedWord& word, const IntVec& n);

} // namespace qck
