#include "qck/wiring.hpp"
#include "qck/error.hpp"
#include "qck/strings.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

namespace qck {

WiringDiagram::WiringDiagram(const RootDatum& rd, const SignedWord& word)
    : levels_(rd.rank() + 1), word_(word)
{
    if (!rd.is_type_a())
        throw Error(ErrorKind::InvalidArgument, "wiring diagrams are implemented for type A");
    split_double_word(rd, word);
    D_ = symmetrizer_diag(rd, word);
}

int WiringDiagram::stay_exponent(std::size_t k, int level) const
{
    int L = crossing_level(k);
    if (level == L)
        return 1;
    if (level == L + 1)
        return -1;
    return 0;
}

int WiringDiagram::cross_target(std::size_t k, int level) const
{
    int L = crossing_level(k);
    if (sign(k) > 0 && level == L)
        return L + 1;
    if (sign(k) < 0 && level == L + 1)
        return L;
    return 0;
}

Monomial path_weight(const WiringDiagram& dg, const Path& p)
{
    std::size_t m = dg.columns();
    if (p.levels.size() != m + 1)
        throw Error(ErrorKind::SizeMismatch, "path length does not match the diagram");
    Monomial mono{IntVec(m, 0), IntVec(m, 0)};
    for (std::size_t k = 0; k < m; ++k) {
        int from = p.levels[k], to = p.levels[k + 1];
        if (from == to)
            mono.a[k] = dg.stay_exponent(k, from);
        else if (dg.cross_target(k, from) == to)
            mono.b[k] = 1;
        else
            throw Error(ErrorKind::InvalidArgument, "path uses an edge that is not in the diagram");
    }
    return mono;
}

namespace {

void check_level(const WiringDiagram& dg, int l)
{
    if (l < 1 || l > dg.levels())
        throw Error(ErrorKind::IndexOutOfRange, "level " + std::to_string(l) + " outside the diagram");
}

void check_index_sets(const WiringDiagram& dg, IntVec& rows, IntVec& cols)
{
    if (rows.size() != cols.size())
        throw Error(ErrorKind::SizeMismatch, "row and column sets differ in size");
    for (int l : rows)
        check_level(dg, l);
    for (int l : cols)
        check_level(dg, l);
    std::sort(rows.begin(), rows.end());
    std::sort(cols.begin(), cols.end());
    if (std::adjacent_find(rows.begin(), rows.end()) != rows.end() ||
        std::adjacent_find(cols.begin(), cols.end()) != cols.end())
        throw Error(ErrorKind::InvalidArgument, "repeated index in a minor");
}

} // namespace

std::vector<Path> enumerate_paths(const WiringDiagram& dg, int from, int to)
{
    std::vector<PathFamily> fams = enumerate_families(dg, {from}, {to});
    std::vector<Path> out;
    for (auto& f : fams)
        out.push_back(f.front());
    return out;
}

std::vector<PathFamily> enumerate_families(const WiringDiagram& dg, const IntVec& rows_in, const IntVec& cols_in)
{
    IntVec rows = rows_in, cols = cols_in;
    check_index_sets(dg, rows, cols);
    std::size_t m = dg.columns(), r = rows.size();
    std::vector<PathFamily> out;
    std::vector<IntVec> trail(r, IntVec{});
    for (std::size_t p = 0; p < r; ++p)
        trail[p].push_back(rows[p]);

    std::function<void(std::size_t, std::size_t, IntVec&)> step;
    // column k, path p; `taken` holds the right-hand levels chosen so far
    step = [&](std::size_t k, std::size_t p, IntVec& taken) {
        if (k == m) {
            for (std::size_t q = 0; q < r; ++q)
                if (trail[q].back() != cols[q])
                    return;
            PathFamily fam;
            for (std::size_t q = 0; q < r; ++q)
                fam.push_back(Path{trail[q]});
            out.push_back(std::move(fam));
            return;
        }
        if (p == r) {
            IntVec next;
            step(k + 1, 0, next);
            return;
        }
        int cur = trail[p].back();
        for (int dest : {cur, dg.cross_target(k, cur)}) {
            if (dest == 0 || std::find(taken.begin(), taken.end(), dest) != taken.end())
                continue;
            trail[p].push_back(dest);
            taken.push_back(dest);
            step(k, p + 1, taken);
            taken.pop_back();
            trail[p].pop_back();
        }
    };
    IntVec taken;
    step(0, 0, taken);
    return out;
}

QTorusElement family_weight(const WiringDiagram& dg, const PathFamily& fam)
{
    QTorusElement w = QTorusElement::one(dg.D());
    for (const auto& p : fam)
        w = w * QTorusElement::monomial(dg.D(), path_weight(dg, p));
    return w;
}

namespace {

// Sum of family weights by dynamic programming over occupied-level masks.
// Within a column at most one of x-type and y-type edges is used by a
// vertex-disjoint family, so every family weight is a monomial with
// coefficient 1.
QTorusElement minor_by_paths(const WiringDiagram& dg, const IntVec& rows, const IntVec& cols)
{
    std::size_t m = dg.columns();
    unsigned start = 0, finish = 0;
    for (int l : rows)
        start |= 1u << (l - 1);
    for (int l : cols)
        finish |= 1u << (l - 1);
    std::map<unsigned, std::map<Monomial, long>> cur;
    cur[start][Monomial{IntVec(m, 0), IntVec(m, 0)}] = 1;
    for (std::size_t k = 0; k < m; ++k) {
        int L = dg.crossing_level(k);
        unsigned lo = 1u << (L - 1), hi = 1u << L;
        std::map<unsigned, std::map<Monomial, long>> next;
        for (auto& [mask, monos] : cur) {
            bool occL = mask & lo, occU = mask & hi;
            auto emit = [&](unsigned nmask, int a, int b) {
                for (const auto& [mono, c] : monos) {
                    Monomial nm = mono;
                    nm.a[k] = a;
                    nm.b[k] = b;
                    next[nmask][nm] += c;
                }
            };
            if (occL && occU)
                emit(mask, 0, 0);
            else if (occL) {
                emit(mask, 1, 0);
                if (dg.sign(k) > 0)
                    emit((mask & ~lo) | hi, 0, 1);
            } else if (occU) {
                emit(mask, -1, 0);
                if (dg.sign(k) < 0)
                    emit((mask & ~hi) | lo, 0, 1);
            } else
                emit(mask, 0, 0);
        }
        cur = std::move(next);
    }
    QTorusElement out(dg.D());
    for (const auto& [mono, c] : cur[finish])
        out.add_term(mono, Coefficient(c));
    return out;
}

int inversions(const IntVec& p)
{
    int c = 0;
    for (std::size_t i = 0; i < p.size(); ++i)
        for (std::size_t j = i + 1; j < p.size(); ++j)
            if (p[i] > p[j])
                ++c;
    return c;
}

} // namespace

QuantumMatrixImage::QuantumMatrixImage(const RootDatum& rd, const SignedWord& word) : rd_(rd), dg_(rd, word)
{
}

const QTorusElement& QuantumMatrixImage::generator(int i, int j)
{
    return minor({i}, {j});
}

const QTorusElement& QuantumMatrixImage::minor(const IntVec& rows_in, const IntVec& cols_in)
{
    IntVec rows = rows_in, cols = cols_in;
    check_index_sets(dg_, rows, cols);
    auto key = std::make_pair(rows, cols);
    auto it = cache_.find(key);
    if (it != cache_.end())
        return it->second;
    return cache_.emplace(key, minor_by_paths(dg_, rows, cols)).first->second;
}

QTorusElement QuantumMatrixImage::minor_by_expansion(const IntVec& rows_in, const IntVec& cols_in)
{
    IntVec rows = rows_in, cols = cols_in;
    check_index_sets(dg_, rows, cols);
    std::size_t r = rows.size();
    IntVec perm(r);
    std::iota(perm.begin(), perm.end(), 0);
    QTorusElement sum(dg_.D());
    do {
        QTorusElement term = QTorusElement::one(dg_.D());
        for (std::size_t s = 0; s < r && !term.is_zero(); ++s)
            term = term * generator(rows[s], cols[perm[s]]);
        int l = inversions(perm);
        sum += Coefficient::monomial(l, {}, (l % 2) ? -1 : 1) * term;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return sum;
}

QTorusElement generator_image(const RootDatum& rd, const SignedWord& word, int i, int j)
{
    QuantumMatrixImage img(rd, word);
    return img.generator(i, j);
}

QTorusElement minor_image(const RootDatum& rd, const SignedWord& word, const IntVec& rows, const IntVec& cols)
{
    QuantumMatrixImage img(rd, word);
    return img.minor(rows, cols);
}

QTorusElement minor_image_oracle(const RootDatum& rd, const SignedWord& word, const IntVec& rows, const IntVec& cols)
{
    QuantumMatrixImage img(rd, word);
    return img.minor_by_expansion(rows, cols);
}

bool RelationReport::all_pass() const
{
    return failures() == 0;
}

std::size_t RelationReport::failures() const
{
    std::size_t f = 0;
    for (const auto& r : instances)
        if (!r.pass)
            ++f;
    return f;
}

RelationReport verify_relations(const RootDatum& rd, const SignedWord& word)
{
    QuantumMatrixImage img(rd, word);
    int N = rd.rank() + 1;
    const Coefficient q = Coefficient::q_power(1);
    const Coefficient q_minus_qinv = Coefficient::q_power(1) - Coefficient::q_power(-1);
    auto x = [&](int i, int j) -> const QTorusElement& { return img.generator(i, j); };
    RelationReport rep;
    for (int i = 1; i <= N; ++i)
        for (int j = 1; j <= N; ++j)
            for (int l = j + 1; l <= N; ++l)
                rep.instances.push_back({"commute_row", {i, j, l}, (x(i, j) * x(i, l) - q * (x(i, l) * x(i, j))).is_zero()});
    for (int j = 1; j <= N; ++j)
        for (int i = 1; i <= N; ++i)
            for (int k = i + 1; k <= N; ++k)
                rep.instances.push_back({"commute_col", {i, k, j}, (x(i, j) * x(k, j) - q * (x(k, j) * x(i, j))).is_zero()});
    for (int i = 1; i <= N; ++i)
        for (int k = i + 1; k <= N; ++k)
            for (int j = 1; j <= N; ++j)
                for (int l = j + 1; l <= N; ++l) {
                    rep.instances.push_back({"commute_anti", {i, k, j, l}, (x(i, l) * x(k, j) - x(k, j) * x(i, l)).is_zero()});
                    QTorusElement lhs = x(i, j) * x(k, l) - x(k, l) * x(i, j);
                    rep.instances.push_back({"commute_diag", {i, k, j, l}, (lhs - q_minus_qinv * (x(i, l) * x(k, j))).is_zero()});
                }
    IntVec all(N);
    std::iota(all.begin(), all.end(), 1);
    QTorusElement det = img.minor_by_expansion(all, all);
    rep.instances.push_back({"det", {}, det == QTorusElement::one(img.diagram().D())});
    return rep;
}

std::vector<IntVec> subsets(int N, int k)
{
    std::vector<IntVec> out;
    IntVec cur;
    std::function<void(int)> rec = [&](int from) {
        if (static_cast<int>(cur.size()) == k) {
            out.push_back(cur);
            return;
        }
        for (int v = from; v <= N; ++v) {
            cur.push_back(v);
            rec(v + 1);
            cur.pop_back();
        }
    };
    rec(1);
    return out;
}

std::string render_ascii(const WiringDiagram& dg)
{
    std::ostringstream os;
    std::size_t m = dg.columns();
    int width = std::to_string(dg.levels()).size();
    os << std::string(width + 1, ' ');
    for (std::size_t k = 0; k < m; ++k)
        os << (dg.sign(k) > 0 ? " +" : " -");
    os << "\n";
    for (int level = dg.levels(); level >= 1; --level) {
        std::string label = std::to_string(level);
        os << std::string(width - label.size(), ' ') << label << " ";
        for (std::size_t k = 0; k < m; ++k) {
            int L = dg.crossing_level(k);
            char cell = '-';
            if (level == L || level == L + 1)
                cell = dg.sign(k) > 0 ? '/' : '\\';
            os << '-' << cell;
        }
        os << "-\n";
    }
    return os.str();
}

std::string render_svg(const WiringDiagram& dg)
{
    const int dx = 70, dy = 50, margin = 40;
    std::size_t m = dg.columns();
    int N = dg.levels();
    int width = 2 * margin + dx * static_cast<int>(m);
    int height = 2 * margin + dy * (N - 1);
    auto X = [&](std::size_t k) { return margin + dx * static_cast<int>(k); };
    auto Y = [&](int level) { return margin + dy * (N - level); };
    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
       << "\" font-family=\"sans-serif\" font-size=\"11\">\n";
    for (int level = 1; level <= N; ++level)
        os << "  <text x=\"" << margin - 25 << "\" y=\"" << Y(level) + 4 << "\">" << level << "</text>\n";
    for (std::size_t k = 0; k < m; ++k) {
        int L = dg.crossing_level(k);
        os << "  <g class=\"column\" data-letter=\"" << dg.word().letters[k] << "\">\n";
        for (int level = 1; level <= N; ++level) {
            os << "    <line x1=\"" << X(k) << "\" y1=\"" << Y(level) << "\" x2=\"" << X(k + 1) << "\" y2=\""
               << Y(level) << "\" stroke=\"black\"/>\n";
            int e = dg.stay_exponent(k, level);
            if (e != 0)
                os << "    <text x=\"" << X(k) + dx / 2 - 6 << "\" y=\"" << Y(level) - 4 << "\">"
                   << (e > 0 ? "x" : "x⁻¹") << "</text>\n";
        }
        int from = dg.sign(k) > 0 ? L : L + 1;
        int to = dg.sign(k) > 0 ? L + 1 : L;
        os << "    <line class=\"crossing\" x1=\"" << X(k) << "\" y1=\"" << Y(from) << "\" x2=\"" << X(k + 1)
           << "\" y2=\"" << Y(to) << "\" stroke=\"steelblue\"/>\n";
        os << "    <text x=\"" << X(k) + dx / 2 + 4 << "\" y=\"" << (Y(L) + Y(L + 1)) / 2 + 4
           << "\" fill=\"steelblue\">y</text>\n";
        os << "  </g>\n";
    }
    os << "</svg>\n";
    return os.str();
}

} // namespace qck
