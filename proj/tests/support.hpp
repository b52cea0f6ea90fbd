#pragma once

#include "qck/intlinalg.hpp"
#include "qck/qtorus.hpp"

#include <random>

namespace qck::test {

inline IntMatrix random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c, int lo, int hi)
{
    std::uniform_int_distribution<int> d(lo, hi);
    IntMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j)
            m(i, j) = d(rng);
    return m;
}

inline IntMatrix random_skew(std::mt19937_64& rng, std::size_t n, int bound)
{
    std::uniform_int_distribution<int> d(-bound, bound);
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            m(i, j) = d(rng);
            m(j, i) = -m(i, j);
        }
    return m;
}

// product of random elementary column operations and sign flips
inline IntMatrix random_unimodular(std::mt19937_64& rng, std::size_t n, int steps = 12)
{
    IntMatrix u = IntMatrix::identity(n);
    if (n < 2)
        return u;
    std::uniform_int_distribution<std::size_t> idx(0, n - 1);
    std::uniform_int_distribution<int> t(-2, 2);
    for (int s = 0; s < steps; ++s) {
        std::size_t i = idx(rng), j = idx(rng);
        if (i == j)
            u.negate_col(i);
        else
            u.add_col(i, j, t(rng));
    }
    return u;
}

inline QTorusElement random_element(std::mt19937_64& rng, const IntVec& D, int terms)
{
    std::uniform_int_distribution<int> e(-3, 3), c(-4, 4), qe(-2, 2);
    QTorusElement u(D);
    for (int t = 0; t < terms; ++t) {
        Monomial mono{IntVec(D.size()), IntVec(D.size())};
        for (std::size_t k = 0; k < D.size(); ++k) {
            mono.a[k] = e(rng);
            mono.b[k] = e(rng);
        }
        int cc = c(rng);
        u.add_term(mono, Coefficient::monomial(qe(rng), {}, cc == 0 ? 1 : cc));
    }
    return u;
}

} // namespace qck::test
