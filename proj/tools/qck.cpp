#include "qck/congruence.hpp"
#include "qck/error.hpp"
#include "qck/expression.hpp"
#include "qck/json_io.hpp"
#include "qck/pivots.hpp"
#include "qck/slq2.hpp"
#include "qck/strings.hpp"
#include "qck/suites.hpp"
#include "qck/wiring.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <regex>
#include <sstream>

using namespace qck;

namespace {

enum Exit { Ok = 0, CheckFailed = 1, Usage = 2, Internal = 3 };

std::string read_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw Error(ErrorKind::InvalidArgument, "cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void emit(const json& j)
{
    std::cout << j.dump(2) << "\n";
}

// "rows|cols" with digits, e.g. "13|12"
std::pair<IntVec, IntVec> parse_minor(const std::string& s)
{
    auto bar = s.find('|');
    if (bar == std::string::npos)
        throw Error(ErrorKind::Parse, "minor must look like 13|12");
    auto digits = [](const std::string& t) {
        IntVec v;
        for (char c : t) {
            if (c < '1' || c > '9')
                throw Error(ErrorKind::Parse, "minor indices must be digits");
            v.push_back(c - '0');
        }
        return v;
    };
    return {digits(s.substr(0, bar)), digits(s.substr(bar + 1))};
}

// c, c*q^e, -q, q^-2, 3/2q^4, or a formal symbol gN
Coefficient parse_param(const std::string& text)
{
    static const std::regex formal(R"(\s*g(\d+)\s*)");
    static const std::regex mono(R"(\s*([+-])?\s*(\d+(?:/\d+)?)?\s*\*?\s*(q(?:\^\(?(-?\d+)\)?)?)?\s*)");
    std::smatch m;
    if (std::regex_match(text, m, formal)) {
        int idx = std::stoi(m[1]);
        if (idx < 1)
            throw Error(ErrorKind::Parse, "formal parameters are numbered from g1");
        return Coefficient::gamma(idx - 1);
    }
    if (!std::regex_match(text, m, mono) || (!m[2].matched && !m[3].matched))
        throw Error(ErrorKind::Parse, "cannot read parameter value '" + text + "'");
    mpq_class c = m[2].matched ? mpq_class(m[2].str()) : mpq_class(1);
    c.canonicalize();
    if (m[1].matched && m[1].str() == "-")
        c = -c;
    int e = m[3].matched ? (m[4].matched ? std::stoi(m[4]) : 1) : 0;
    if (c == 0)
        throw Error(ErrorKind::InvalidArgument, "parameters must be nonzero");
    return Coefficient::monomial(e, {}, c);
}

// "g1=-q^3,g2=2" -> {1: ..., 2: ...}
std::map<int, Coefficient> parse_params(const std::string& text)
{
    std::map<int, Coefficient> out;
    if (text.empty())
        return out;
    std::stringstream ss(text);
    std::string item;
    static const std::regex key(R"(\s*g(\d+)\s*)");
    while (std::getline(ss, item, ',')) {
        auto eq = item.find('=');
        std::smatch m;
        std::string k = item.substr(0, eq);
        if (eq == std::string::npos || !std::regex_match(k, m, key))
            throw Error(ErrorKind::Parse, "parameters look like g1=-q^3,g2=1");
        out[std::stoi(m[1])] = parse_param(item.substr(eq + 1));
    }
    return out;
}

struct Common {
    int rank = 2;
    std::string word;

    RootDatum datum() const
    {
        if (rank < 1 || rank > 8)
            throw Error(ErrorKind::InvalidArgument, "rank must lie in 1..8");
        return RootDatum::type_a(rank);
    }
    SignedWord signed_word() const
    {
        SignedWord w = parse_word(word);
        split_double_word(datum(), w);
        return w;
    }
};

void add_word_options(CLI::App* app, Common& c, bool word_required = true)
{
    app->add_option("--rank", c.rank, "type A_N")->capture_default_str();
    auto* o = app->add_option("--word", c.word, "signed letters, e.g. \"1,2,1,-1,-2\"");
    if (word_required)
        o->required();
}

int run_analyze(const Common& c)
{
    RootDatum rd = c.datum();
    SignedWord w = c.signed_word();
    DoubleWordSplit split = split_double_word(rd, w);
    WordInvariants inv = invariants(rd, w);
    StringMatrices sm = string_matrices(rd, w);
    json j = to_json(inv);
    j["word"] = w.letters;
    j["rank"] = c.rank;
    j["w1"] = split.w1;
    j["w2"] = split.w2;
    j["supp"] = split.supp;
    j["matrices"] = {{"Omega", to_json(sm.Omega)},   {"Lambda", to_json(sm.Lambda)},
                     {"H", to_json(sm.H)},           {"Omega_tilde", to_json(sm.Omega_tilde)},
                     {"Theta", to_json(sm.Theta)},   {"Phi_tilde", to_json(sm.Phi_tilde)}};
    emit(j);
    std::cerr << w.to_string() << ": m=" << inv.m << " s=" << inv.s << " n=" << inv.n_dim << " d=" << inv.d
              << " k=" << inv.k << "\n";
    return Ok;
}

int run_diagram(const Common& c, const std::string& format)
{
    WiringDiagram dg(c.datum(), c.signed_word());
    if (format == "ascii")
        std::cout << render_ascii(dg);
    else if (format == "svg")
        std::cout << render_svg(dg);
    else {
        json cols = json::array();
        for (std::size_t k = 0; k < dg.columns(); ++k)
            cols.push_back({{"level", dg.crossing_level(k)}, {"sign", dg.sign(k)}});
        emit({{"levels", dg.levels()}, {"columns", cols}, {"D", dg.D()}});
    }
    return Ok;
}

int run_image(const Common& c, const std::string& expr, const std::string& minor)
{
    RootDatum rd = c.datum();
    SignedWord w = c.signed_word();
    if (expr.empty() == minor.empty())
        throw CLI::ValidationError("image", "give exactly one of --expr and --minor");
    QTorusElement u;
    if (!expr.empty())
        u = expression_image(rd, w, expr);
    else {
        auto [rows, cols] = parse_minor(minor);
        u = minor_image(rd, w, rows, cols);
    }
    emit(to_json(u));
    std::cerr << u.to_string() << "\n";
    return Ok;
}

int report_certificate(const CertificateReport& r, const std::string& label)
{
    std::cerr << label << ": " << (r.pass ? "pass" : "FAIL") << "\n";
    return r.pass ? Ok : CheckFailed;
}

int run_pivots_check(const Common& c, const std::string& file)
{
    PivotCertificate cert = certificate_from_json(json::parse(read_file(file)));
    RootDatum rd = c.datum();
    split_double_word(rd, cert.word);
    CertificateReport r = check_certificate(rd, cert);
    emit(to_json(r));
    return report_certificate(r, cert.word.to_string());
}

int run_pivots_table1()
{
    RootDatum a2 = RootDatum::type_a(2);
    json rows = json::array();
    int passed = 0;
    auto all = table1_rows();
    for (const Table1Row& row : all) {
        CertificateReport r = check_certificate(a2, row.cert);
        passed += r.pass;
        json j = to_json(r);
        j["w1"] = row.w1;
        j["w2"] = row.w2;
        j["word"] = row.cert.word.letters;
        j["order"] = row.cert.order;
        rows.push_back(j);
        std::cerr << row.w1 << " " << row.w2 << " " << row.cert.word.to_string() << ": "
                  << (r.pass ? "pass" : "FAIL") << "\n";
    }
    emit({{"rows", rows}, {"passed", passed}, {"total", all.size()}});
    std::cerr << passed << "/" << all.size() << " rows pass\n";
    return passed == static_cast<int>(all.size()) ? Ok : CheckFailed;
}

int run_pivots_auto(const Common& c)
{
    RootDatum rd = c.datum();
    SignedWord w = c.signed_word();
    auto cert = auto_certificate_disjoint(rd, w);
    if (!cert) {
        emit({{"certificate", nullptr}, {"reason", "supports of w1 and w2 intersect"}});
        std::cerr << w.to_string() << ": supports intersect, no automatic certificate\n";
        return CheckFailed;
    }
    CertificateReport r = check_certificate(rd, *cert);
    emit({{"certificate", to_json(*cert)}, {"report", to_json(r)}});
    return report_certificate(r, w.to_string());
}

int run_normal_form(const std::string& file, const std::string& kind)
{
    IntMatrix m = parse_matrix(read_file(file));
    if (kind == "smith") {
        SmithForm f = smith_normal_form(m);
        emit({{"U", to_json(f.U)}, {"D", to_json(f.D)}, {"V", to_json(f.V)},
              {"invariant_factors", to_json(f.invariant_factors())}});
    } else {
        SkewNormalForm f = skew_normal_form(m);
        emit({{"Q", to_json(f.Q)}, {"multipliers", to_json(f.multipliers)}, {"zero_dim", f.zero_dim}});
        std::cerr << f.multipliers.size() << " blocks, centre rank " << f.zero_dim << "\n";
    }
    return Ok;
}

TypicalModuleSpec typical_spec(const std::string& kind, const std::string& params)
{
    TypicalModuleSpec s = TypicalModuleSpec::formal(parse_kind(kind));
    for (const auto& [k, v] : parse_params(params)) {
        if (k == 1)
            s.gamma = v;
        else if (k == 2)
            s.eta = v;
        else
            throw Error(ErrorKind::InvalidArgument, "typical modules take g1 and g2 only");
    }
    return s;
}

TensorModule tensor_spec(const RootDatum& rd, const SignedWord& w, const std::string& params)
{
    TensorModule M = TensorModule::formal(rd, w);
    for (const auto& [k, v] : parse_params(params)) {
        if (k < 1 || k > static_cast<int>(w.size()))
            throw Error(ErrorKind::InvalidArgument, "parameter g" + std::to_string(k) + " has no tensor factor");
        M.gamma[k - 1] = v;
    }
    return M;
}

struct ModuleArgs {
    Common common;
    std::string kind, params, expr, vector;
    int index = 0;
    int truncate = 20;
};

int run_module_act(const ModuleArgs& a)
{
    if (!a.kind.empty()) {
        TypicalModuleSpec s = typical_spec(a.kind, a.params);
        ModuleVector v = act(s, parse_gen(a.expr), {{a.index, Coefficient(1)}});
        json out = json::array();
        for (const auto& [i, c] : v)
            out.push_back({{"n", i}, {"coeff", to_json(c)}});
        emit(out);
        return Ok;
    }
    if (a.common.word.empty())
        throw CLI::ValidationError("module act", "give --kind, or --word for a tensor module");
    RootDatum rd = a.common.datum();
    SignedWord w = a.common.signed_word();
    TensorModule M = tensor_spec(rd, w, a.params);
    TensorVector v{{IntVec(w.size(), 0), Coefficient(1)}};
    if (!a.vector.empty()) {
        json j = json::parse(a.vector);
        // coefficients may also be given as a number or a monomial string
        for (json& e : j)
            if (e.contains("coeff") && (e["coeff"].is_number() || e["coeff"].is_string()))
                e["coeff"] = to_json(parse_param(e["coeff"].is_string() ? e["coeff"].get<std::string>()
                                                                          : e["coeff"].dump()));
        v = tensor_vector_from_json(j);
    }
    emit(to_json(element_action(M, expression_image(rd, w, a.expr), v)));
    return Ok;
}

int run_module_verify(const ModuleArgs& a)
{
    ModuleReport r;
    if (!a.kind.empty()) {
        TypicalModuleSpec s = typical_spec(a.kind, a.params);
        r = verify_module(s, a.truncate);
        if (auto k = s.excluded_k())
            std::cerr << "parameters satisfy gamma*eta = -q^(2k+1) with k = " << *k << "\n";
    } else {
        if (a.common.word.empty())
            throw CLI::ValidationError("module verify", "give --kind, or --word for a tensor module");
        RootDatum rd = a.common.datum();
        r = verify_tensor_module(rd, tensor_spec(rd, a.common.signed_word(), a.params), a.truncate);
    }
    emit(to_json(r));
    if (auto f = r.first_failure())
        std::cerr << r.failures() << " of " << r.checks.size() << " checks fail, first: " << f->relation
                  << " at " << f->index << "\n";
    else
        std::cerr << r.checks.size() << " checks pass\n";
    return r.all_pass() ? Ok : CheckFailed;
}

int run_verify(const std::string& name)
{
    std::vector<int> ids;
    if (name == "all")
        for (std::size_t i = 1; i <= suite_names().size(); ++i)
            ids.push_back(static_cast<int>(i));
    else
        ids.push_back(suite_id(name));
    json out = json::array();
    bool ok = true;
    for (int id : ids) {
        SuiteResult r = run_suite(id);
        out.push_back({{"id", r.id},
                       {"name", r.name},
                       {"cases", r.cases},
                       {"failures", r.failures},
                       {"seconds", r.seconds},
                       {"limit", r.limit},
                       {"pass", r.pass()},
                       {"notes", r.notes}});
        std::cerr << r.name << ": " << (r.pass() ? "PASS" : "FAIL") << " (" << r.cases << " cases, " << r.failures
                  << " failures, " << r.seconds << "s)\n";
        ok = ok && r.pass();
    }
    emit(out);
    return ok ? Ok : CheckFailed;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Quantum coordinate algebra toolkit: double words, wiring diagrams, pivots, modules"};
    app.require_subcommand(1);

    Common common;
    std::string format = "json", expr, minor, cert_file, matrix_file, kind = "skew", suite;
    ModuleArgs margs;

    auto* analyze = app.add_subcommand("analyze", "invariants and lattice matrices of a double word");
    add_word_options(analyze, common);

    auto* diagram = app.add_subcommand("diagram", "render the wiring diagram");
    add_word_options(diagram, common);
    diagram->add_option("--format", format)->check(CLI::IsMember({"json", "ascii", "svg"}))->capture_default_str();

    auto* image = app.add_subcommand("image", "image of a product of minors in the quantum torus");
    add_word_options(image, common);
    image->add_option("--expr", expr, "e.g. \"x21^2*x33*minor(23|23)\"");
    image->add_option("--minor", minor, "rows|cols, e.g. 13|12");

    auto* pivots = app.add_subcommand("pivots", "pivot element certificates");
    pivots->require_subcommand(1);
    auto* pcheck = pivots->add_subcommand("check", "validate a certificate file");
    pcheck->add_option("--cert", cert_file)->required()->check(CLI::ExistingFile);
    pcheck->add_option("--rank", common.rank)->capture_default_str();
    auto* ptable = pivots->add_subcommand("table1", "validate the built-in SL_3 certificates");
    auto* pauto = pivots->add_subcommand("auto", "certificate for a word whose halves have disjoint supports");
    add_word_options(pauto, common);

    auto* nf = app.add_subcommand("normal-form", "Smith or skew normal form of an integer matrix");
    nf->add_option("--matrix", matrix_file)->required()->check(CLI::ExistingFile);
    nf->add_option("--kind", kind)->check(CLI::IsMember({"skew", "smith"}))->capture_default_str();

    auto* module = app.add_subcommand("module", "typical C_q[SL_2] modules and tensor modules");
    module->require_subcommand(1);
    auto* mact = module->add_subcommand("act", "act on a basis vector");
    auto* mverify = module->add_subcommand("verify", "truncated relation check");
    for (auto* sc : {mact, mverify}) {
        add_word_options(sc, margs.common, false);
        sc->add_option("--kind", margs.kind, "minus, plus, laurent, highest or lowest");
        sc->add_option("--params", margs.params, "e.g. \"g1=-q^3,g2=1\"; unset parameters stay formal");
    }
    mact->add_option("--expr", margs.expr, "generator x11..x22 for --kind, an expression for --word")->required();
    mact->add_option("--index", margs.index, "basis index i of e_i for --kind");
    mact->add_option("--vector", margs.vector, "JSON list of {\"n\": [...], \"coeff\": ...}");
    mverify->add_option("--truncate", margs.truncate, "check indices with |n| <= N")->capture_default_str();

    auto* verify = app.add_subcommand("verify", "run a named verification suite");
    verify->add_option("--suite", suite, "suite name or \"all\"")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? Ok : Usage;
    }

    try {
        if (*analyze)
            return run_analyze(common);
        if (*diagram)
            return run_diagram(common, format);
        if (*image)
            return run_image(common, expr, minor);
        if (*pcheck)
            return run_pivots_check(common, cert_file);
        if (*ptable)
            return run_pivots_table1();
        if (*pauto)
            return run_pivots_auto(common);
        if (*nf)
            return run_normal_form(matrix_file, kind);
        if (*mact)
            return run_module_act(margs);
        if (*mverify)
            return run_module_verify(margs);
        if (*verify)
            return run_verify(suite);
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return Usage;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return e.kind() == ErrorKind::CrossCheckFailed ? Internal : Usage;
    } catch (const json::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return Usage;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return Internal;
    }
    return Usage;
}
