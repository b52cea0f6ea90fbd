#include "qck/suites.hpp"
#include "qck/congruence.hpp"
#include "qck/error.hpp"
#include "qck/expression.hpp"
#include "qck/pivots.hpp"
#include "qck/slq2.hpp"
#include "qck/strings.hpp"
#include "qck/wiring.hpp"
#include "qck/words.hpp"

#include <chrono>
#include <functional>
#include <random>
#include <sstream>

namespace qck {

namespace {

std::string trim(std::string_view s)
{
    std::size_t a = s.find_first_not_of(" \t"), b = s.find_last_not_of(" \t");
    return a == std::string_view::npos ? std::string() : std::string(s.substr(a, b - a + 1));
}

std::vector<std::string> split(std::string_view s, char sep)
{
    std::vector<std::string> out;
    std::size_t start = 0;
    for (;;) {
        std::size_t p = s.find(sep, start);
        out.push_back(trim(s.substr(start, p == std::string_view::npos ? std::string_view::npos : p - start)));
        if (p == std::string_view::npos)
            return out;
        start = p + 1;
    }
}

// One check inside a suite: records a note for the first few failures.
struct Tally {
    SuiteResult& r;
    void check(bool ok, const std::string& what)
    {
        ++r.cases;
        if (!ok) {
            ++r.failures;
            if (r.failures <= 5)
                r.notes.push_back("FAIL " + what);
        }
    }
    // runs f, treating any exception as a failure of this case
    void guarded(const std::string& what, const std::function<bool()>& f)
    {
        bool ok = false;
        try {
            ok = f();
        } catch (const std::exception& e) {
            check(false, what + ": " + e.what());
            return;
        }
        check(ok, what);
    }
};

std::string vec_str(const IntVec& v)
{
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i)
        s += (i ? "," : "") + std::to_string(v[i]);
    return s + ")";
}

std::vector<std::pair<IntVec, IntVec>> s3_pairs()
{
    auto els = weyl_group_elements(RootDatum::type_a(2));
    std::vector<std::pair<IntVec, IntVec>> out;
    for (const auto& a : els)
        for (const auto& b : els)
            out.emplace_back(a, b);
    return out;
}

std::vector<std::pair<IntVec, IntVec>> random_s4_pairs(std::size_t count, std::uint64_t seed)
{
    auto els = weyl_group_elements(RootDatum::type_a(3));
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> pick(0, els.size() - 1);
    std::vector<std::pair<IntVec, IntVec>> out;
    for (std::size_t i = 0; i < count; ++i) {
        auto& a = els[pick(rng)];
        out.emplace_back(a, els[pick(rng)]);
    }
    return out;
}

// ---------------------------------------------------------------------------

void worked_example(Tally& t)
{
    RootDatum rd = RootDatum::type_a(2);
    SignedWord w = parse_word("1,2,1,-1,-2");
    IntVec D(5, 1);
    const std::string D23 = "minor(23|23)";

    // the y^{-1} printed in factor 4 of the third term of minor(13|12) is read as y
    const std::vector<std::pair<std::string, std::string>> images = {
        {"x21^2*x33*" + D23, "x^-3 | x | x^-3 | y^2 x^-1 | x^-1"},
        {"x33*" + D23, "x^-1 | x^-1 | x^-1 | x^-1 | x^-1"},
        {"minor(13|12)", "y | 1 | x^-1 | y | y + x | x^-1 | y | y | y + x | x^-1 | x | x | y"},
        {"minor(12|12)", "1 | y | y | y | y + 1 | y | x | x | y + 1 | x | 1 | 1 | x"},
        {"x12", "y | y | 1 | 1 | y + y | x | x^-1 | x^-1 | x + x | 1 | y | x^-1 | x"},
    };
    QuantumMatrixImage img(rd, w);
    for (const auto& [expr, disp] : images)
        t.guarded("image of " + expr, [&] {
            QTorusElement got = evaluate(img, parse_expression(expr));
            return got == display_element(D, disp);
        });

    const std::vector<IntVec> a_expected = {
        {-3, 1, -3, -1, -1}, {-3, 1, -3, -1, -1}, {-1, -1, -1, -1, -1}, {-1, -1, -1, -1, -1}, {-1, -1, -1, -1, -1}};
    const std::vector<std::set<IntVec>> supp_expected = {
        {{0, 0, -1, 0, 0}, {1, -1, 0, 0, 0}, {1, -1, 1, 1, 0}},
        {{0, 0, -1, 0, 0}, {1, -1, 0, 0, 0}, {1, -1, 1, 1, 0}},
        {{0, 0, 0, 0, 0}, {0, 0, 1, 1, 0}, {0, 1, 0, 0, 1}},
        {{0, 0, 0, 0, 0}, {0, 0, 1, 1, 0}, {0, 1, 0, 0, 1}},
        {{0, 0, 0, 0, 0}, {0, 1, -1, -1, 1}, {1, 0, 0, -1, 1}},
    };
    const std::vector<std::set<int>> types_I = {{1, 2, 3, 4, 5}, {1, 2, 4, 5}, {1, 2, 5}, {1, 5}, {1}};
    const IntVec types_k = {3, 4, 2, 5, 1};
    const std::vector<IntVec> witnesses = {
        {1, -1, 1, 1, 0}, {1, -1, 1, 1, 0}, {0, 1, 0, 0, 1}, {0, 1, 0, 0, 1}, {1, 0, 0, -1, 1}};

    const Table1Row row = table1_rows()[6];
    t.check(row.cert.word == w, "table row for the worked example has the same word");
    t.guarded("worked example certificate", [&] {
        CertificateReport rep = check_certificate(rd, row.cert);
        bool ok = rep.pass && rep.claims.size() == 5;
        for (std::size_t i = 0; ok && i < 5; ++i) {
            const ClaimReport& c = rep.claims[i];
            std::set<IntVec> supp(c.supp_x.begin(), c.supp_x.end());
            bool this_ok = c.a == a_expected[i] && supp == supp_expected[i] && c.I == types_I[i] &&
                           c.k == types_k[i] && c.witness == witnesses[i];
            if (!this_ok)
                t.r.notes.push_back("claim " + std::to_string(i + 1) + " a=" + vec_str(c.a) +
                                    (c.witness ? " witness=" + vec_str(*c.witness) : " no witness"));
            ok = ok && this_ok;
        }
        return ok;
    });
}

void lindstrom(Tally& t)
{
    auto check_word = [&](const RootDatum& rd, const SignedWord& w) {
        t.guarded("minors of " + w.to_string() + " in rank " + std::to_string(rd.rank()), [&] {
            QuantumMatrixImage img(rd, w);
            int L = rd.rank() + 1;
            for (int k = 1; k <= L; ++k)
                for (const IntVec& A : subsets(L, k))
                    for (const IntVec& B : subsets(L, k))
                        if (img.minor(A, B) != img.minor_by_expansion(A, B))
                            return false;
            return true;
        });
    };
    std::mt19937_64 rng(20240601);
    for (int r : {2, 3}) {
        RootDatum rd = RootDatum::type_a(r);
        for (int i = 0; i < 100; ++i)
            check_word(rd, random_double_word(rd, 8, rng));
    }
    RootDatum a2 = RootDatum::type_a(2);
    for (const SignedWord& w : all_double_words(a2, 4))
        check_word(a2, w);
}

void homomorphism(Tally& t)
{
    std::mt19937_64 rng(7);
    const int max_len[] = {0, 2, 6, 12};
    for (int r = 1; r <= 3; ++r) {
        RootDatum rd = RootDatum::type_a(r);
        for (int i = 0; i < 50; ++i) {
            SignedWord w = random_double_word(rd, max_len[r], rng);
            t.guarded("relations for " + w.to_string() + " in rank " + std::to_string(r), [&] {
                RelationReport rep = verify_relations(rd, w);
                return rep.all_pass() && !rep.instances.empty();
            });
        }
    }
}

bool rank_identities(const RootDatum& rd, const SignedWord& w)
{
    DoubleWordSplit split = split_double_word(rd, w);
    StringMatrices sm = string_matrices(rd, w);
    WordInvariants inv = invariants(rd, w);
    int m = static_cast<int>(w.size()), n = rd.rank();
    int weyl_kernel = n - static_cast<int>(rank_over_Q(weyl_matrix(rd, split.w1) - weyl_matrix(rd, split.w2)));
    return static_cast<int>(rank_over_Q(sm.Phi)) == m + static_cast<int>(split.supp.size()) &&
           m + n - static_cast<int>(rank_over_Q(sm.H)) == weyl_kernel && inv.d == weyl_kernel && inv.k >= 0 &&
           static_cast<int>(inv.multipliers.size()) == inv.k;
}

void rank(Tally& t)
{
    RootDatum a2 = RootDatum::type_a(2), a3 = RootDatum::type_a(3);
    for (const auto& [w1, w2] : s3_pairs()) {
        SignedWord w = concat_double_word(w1, w2);
        t.guarded("rank identities for " + w.to_string(), [&] { return rank_identities(a2, w); });
    }
    for (const auto& [w1, w2] : random_s4_pairs(50, 11)) {
        SignedWord w = concat_double_word(w1, w2);
        t.guarded("rank identities for " + w.to_string() + " in rank 3", [&] { return rank_identities(a3, w); });
    }
}

void congruence(Tally& t)
{
    for (int r : {2, 3}) {
        RootDatum rd = RootDatum::type_a(r);
        for (const IntVec& j : all_reduced_words(rd, r * (r + 1) / 2))
            t.guarded("lemma for " + word_to_string(j), [&] { return verify_lemma(rd, j).all(); });
    }
    for (int r = 1; r <= 3; ++r) {
        RootDatum rd = RootDatum::type_a(r);
        for (const SignedWord& w : all_double_words(rd, 6))
            t.guarded("congruence for " + w.to_string() + " in rank " + std::to_string(r), [&] {
                CongruenceReport rep = congruence_check(rd, w);
                return rep.ok() && rep.reorder_exact;
            });
    }
}

void psi(Tally& t)
{
    RootDatum a2 = RootDatum::type_a(2);
    for (const auto& [w1, w2] : s3_pairs()) {
        SignedWord w = concat_double_word(w1, w2);
        t.guarded("psi for " + w.to_string(), [&] { return psi_check(a2, w).ok; });
    }
}

void table1(Tally& t)
{
    RootDatum a2 = RootDatum::type_a(2);
    for (const Table1Row& row : table1_rows())
        t.guarded("table row " + row.w1 + " " + row.w2, [&] { return check_certificate(a2, row.cert).pass; });
}

void disjoint(Tally& t)
{
    RootDatum a3 = RootDatum::type_a(3);
    std::size_t skipped = 0;
    for (const SignedWord& w : all_double_words(a3, 6)) {
        DoubleWordSplit split = split_double_word(a3, w);
        bool is_disjoint = true;
        for (int i : split.w1)
            for (int j : split.w2)
                is_disjoint = is_disjoint && i != j;
        if (!is_disjoint) {
            ++skipped;
            continue;
        }
        t.guarded("automatic certificate for " + w.to_string(), [&] {
            auto cert = auto_certificate_disjoint(a3, w);
            return cert && check_certificate(a3, *cert).pass;
        });
    }
    t.r.notes.push_back(std::to_string(skipped) + " words with overlapping supports skipped");
}

void modules(Tally& t)
{
    for (TypicalKind k : {TypicalKind::Mminus, TypicalKind::Mplus, TypicalKind::Laurent,
                          TypicalKind::HighestWeight, TypicalKind::LowestWeight})
        t.guarded(std::string("formal ") + kind_name(k) + " module", [&] {
            return verify_module(TypicalModuleSpec::formal(k), 20).all_pass();
        });

    // Laurent kind: gamma * eta == -q^{2k+1} must be detected, other products must pass
    auto laurent = [](Coefficient g, Coefficient e) {
        TypicalModuleSpec s = TypicalModuleSpec::formal(TypicalKind::Laurent);
        s.gamma = std::move(g);
        s.eta = std::move(e);
        return s;
    };
    for (int k = -5; k <= 5; ++k) {
        std::vector<TypicalModuleSpec> bad = {
            laurent(Coefficient::q_power(0), Coefficient::monomial(2 * k + 1, {}, -1)),
            laurent(Coefficient::q_power(3), Coefficient::monomial(2 * k - 2, {}, -1)),
            laurent(Coefficient::gamma(0), Coefficient::monomial(2 * k + 1, {-1}, -1)),
        };
        for (const auto& s : bad)
            t.guarded("laurent specialization " + (s.gamma * s.eta).to_string() + " fails", [&] {
                ModuleReport rep = verify_module(s, 20);
                auto f = rep.first_failure();
                return s.excluded_k() == k && f && f->index == -k;
            });
        std::vector<TypicalModuleSpec> good = {
            laurent(Coefficient::q_power(0), Coefficient::q_power(2 * k + 1)),
            laurent(Coefficient::q_power(1), Coefficient::monomial(2 * k - 1, {}, -1)),
            laurent(Coefficient::q_power(0), Coefficient::monomial(2 * k + 1, {}, 2)),
            laurent(Coefficient::gamma(0), Coefficient::monomial(2 * k, {-1}, -1)),
        };
        for (const auto& s : good)
            t.guarded("laurent specialization " + (s.gamma * s.eta).to_string() + " passes",
                      [&] { return !s.excluded_k() && verify_module(s, 20).all_pass(); });
    }

    // every word up to length 3 in ranks 1 and 2, one length-4 word per
    // (w1, w2) there, and every word up to length 2 in rank 3
    for (int r = 1; r <= 3; ++r) {
        RootDatum rd = RootDatum::type_a(r);
        std::set<std::pair<IntVec, IntVec>> seen;
        for (const SignedWord& w : all_double_words(rd, r == 3 ? 2 : 4)) {
            if (w.size() == 4) {
                DoubleWordSplit split = split_double_word(rd, w);
                if (!seen.insert({split.w1, split.w2}).second)
                    continue;
            }
            t.guarded("tensor module over " + w.to_string() + " in rank " + std::to_string(r), [&] {
                return verify_tensor_module(rd, TensorModule::formal(rd, w), 6).all_pass();
            });
        }
    }
}

void simplicity(Tally& t)
{
    RootDatum a3 = RootDatum::type_a(3);
    std::size_t literal_mismatch = 0, simple = 0;
    for (const SignedWord& w : all_double_words(a3, 6))
        t.guarded("simplicity criterion for " + w.to_string(), [&] {
            DoubleWordSplit split = split_double_word(a3, w);
            WordInvariants inv = invariants(a3, w);
            bool s_full = inv.s == inv.m;
            bool cprime_trivial = inv.multipliers.empty() && inv.cprime_center_dim == 0;
            int kernel =
                a3.rank() - static_cast<int>(rank_over_Q(weyl_matrix(a3, split.w1) - weyl_matrix(a3, split.w2)));
            if (s_full != (inv.k == 0 && inv.multipliers.empty()))
                ++literal_mismatch;
            simple += s_full;
            return s_full == cprime_trivial && inv.d == kernel && (!s_full || inv.cprime_dim == 0);
        });
    t.r.notes.push_back(std::to_string(simple) + " words with s = m");
    t.r.notes.push_back(std::to_string(literal_mismatch) +
                        " words where k = 0 with no multipliers does not force s = m (nonzero centre in C')");
}

struct SuiteDef {
    const char* name;
    double limit;
    void (*run)(Tally&);
};

const SuiteDef defs[] = {
    {"worked-example", 1, worked_example}, {"lindstrom", 60, lindstrom}, {"homomorphism", 60, homomorphism},
    {"rank", 30, rank},                    {"congruence", 60, congruence}, {"psi", 10, psi},
    {"table1", 30, table1},                {"disjoint", 60, disjoint},   {"modules", 120, modules},
    {"simplicity", 30, simplicity},
};

} // namespace

const std::vector<std::string>& suite_names()
{
    static const std::vector<std::string> names = [] {
        std::vector<std::string> v;
        for (const auto& d : defs)
            v.emplace_back(d.name);
        return v;
    }();
    return names;
}

int suite_id(std::string_view name)
{
    const auto& names = suite_names();
    for (std::size_t i = 0; i < names.size(); ++i)
        if (names[i] == name)
            return static_cast<int>(i) + 1;
    throw Error(ErrorKind::InvalidArgument, "unknown suite '" + std::string(name) + "'");
}

SuiteResult run_suite(int id)
{
    if (id < 1 || id > static_cast<int>(std::size(defs)))
        throw Error(ErrorKind::InvalidArgument, "suite id out of range");
    const SuiteDef& d = defs[id - 1];
    SuiteResult r;
    r.id = id;
    r.name = d.name;
    r.limit = d.limit;
    Tally t{r};
    auto start = std::chrono::steady_clock::now();
    d.run(t);
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return r;
}

QTorusElement display_element(const IntVec& D, std::string_view text, const Coefficient& c)
{
    std::size_t m = D.size();
    QTorusElement sum(D);
    for (const std::string& term : split(text, '+')) {
        std::vector<std::string> fs = split(term, '|');
        if (fs.size() != m)
            throw Error(ErrorKind::SizeMismatch, "display term '" + term + "' has the wrong number of factors");
        QTorusElement prod = QTorusElement::one(D);
        for (std::size_t k = 0; k < m; ++k) {
            std::istringstream in(fs[k]);
            std::string tok;
            while (in >> tok) {
                if (tok == "1")
                    continue;
                if (tok[0] != 'x' && tok[0] != 'y')
                    throw Error(ErrorKind::Parse, "bad display letter '" + tok + "'");
                int e = 1;
                if (tok.size() > 1) {
                    if (tok[1] != '^')
                        throw Error(ErrorKind::Parse, "bad display letter '" + tok + "'");
                    e = std::stoi(tok.substr(2));
                }
                Monomial mono{IntVec(m, 0), IntVec(m, 0)};
                (tok[0] == 'x' ? mono.a : mono.b)[k] = e;
                prod = prod * QTorusElement::monomial(D, mono);
            }
        }
        sum += prod;
    }
    return c * sum;
}

} // namespace qck
