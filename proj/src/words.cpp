#include "qck/words.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace qck {

namespace {

bool extends_reduced(const RootDatum& rd, IntVec w, int i)
{
    w.push_back(i);
    return is_reduced(rd, w);
}

} // namespace

std::vector<SignedWord> all_double_words(const RootDatum& rd, int max_len)
{
    int n = rd.rank();
    std::vector<int> letters;
    for (int i = n; i >= 1; --i)
        letters.push_back(-i);
    for (int i = 1; i <= n; ++i)
        letters.push_back(i);

    std::vector<SignedWord> out{SignedWord{}};
    std::vector<std::pair<SignedWord, std::pair<IntVec, IntVec>>> layer{{SignedWord{}, {{}, {}}}};
    for (int len = 1; len <= max_len; ++len) {
        std::vector<std::pair<SignedWord, std::pair<IntVec, IntVec>>> next;
        for (const auto& [w, halves] : layer)
            for (int l : letters) {
                const IntVec& half = l < 0 ? halves.first : halves.second;
                if (!extends_reduced(rd, half, l < 0 ? -l : l))
                    continue;
                SignedWord nw = w;
                nw.letters.push_back(l);
                auto nh = halves;
                (l < 0 ? nh.first : nh.second).push_back(l < 0 ? -l : l);
                next.push_back({nw, nh});
            }
        if (next.empty())
            break;
        for (const auto& e : next)
            out.push_back(e.first);
        layer = std::move(next);
    }
    return out;
}

std::vector<IntVec> all_reduced_words(const RootDatum& rd, int max_len)
{
    std::vector<IntVec> out{IntVec{}};
    std::vector<IntVec> layer{IntVec{}};
    for (int len = 1; len <= max_len; ++len) {
        std::vector<IntVec> next;
        for (const auto& w : layer)
            for (int i = 1; i <= rd.rank(); ++i)
                if (extends_reduced(rd, w, i)) {
                    IntVec nw = w;
                    nw.push_back(i);
                    next.push_back(nw);
                }
        if (next.empty())
            break;
        out.insert(out.end(), next.begin(), next.end());
        layer = std::move(next);
    }
    return out;
}

std::vector<IntVec> weyl_group_elements(const RootDatum& rd)
{
    // distinct elements are told apart by their action on the fundamental weights
    std::map<std::vector<std::vector<long>>, IntVec> seen;
    std::vector<IntVec> out;
    std::vector<IntVec> layer{IntVec{}};
    seen[weyl_matrix(rd, {}).to_longs()] = {};
    out.push_back({});
    while (!layer.empty()) {
        std::vector<IntVec> next;
        for (const auto& w : layer)
            for (int i = 1; i <= rd.rank(); ++i) {
                IntVec nw = w;
                nw.push_back(i);
                auto key = weyl_matrix(rd, nw).to_longs();
                if (seen.count(key))
                    continue;
                seen[key] = nw;
                out.push_back(nw);
                next.push_back(nw);
            }
        layer = std::move(next);
    }
    return out;
}

SignedWord random_double_word(const RootDatum& rd, int max_len, std::mt19937_64& rng)
{
    int target = std::uniform_int_distribution<int>(0, max_len)(rng);
    SignedWord w;
    IntVec w1, w2;
    while (static_cast<int>(w.size()) < target) {
        std::vector<int> ok;
        for (int i = 1; i <= rd.rank(); ++i) {
            if (extends_reduced(rd, w1, i))
                ok.push_back(-i);
            if (extends_reduced(rd, w2, i))
                ok.push_back(i);
        }
        if (ok.empty())
            break;
        int l = ok[std::uniform_int_distribution<std::size_t>(0, ok.size() - 1)(rng)];
        w.letters.push_back(l);
        (l < 0 ? w1 : w2).push_back(l < 0 ? -l : l);
    }
    return w;
}

SignedWord concat_double_word(const IntVec& w1, const IntVec& w2)
{
    SignedWord w;
    for (int i : w1)
        w.letters.push_back(-i);
    for (int i : w2)
        w.letters.push_back(i);
    return w;
}

} // namespace qck
