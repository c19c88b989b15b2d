#pragma once

// Test-only oracles, kept independent of the implementation paths they check.

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "vcn/invariants.hpp"

namespace oracles {

// Permanent by direct permutation expansion; fine for n <= 7.
inline vcn::Int naive_permanent(const vcn::BitMatrix& m) {
    const int n = m.n;
    if (n == 0) return 1;
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    vcn::Int total = 0;
    do {
        int prod = 1;
        for (int j = 0; j < n && prod; ++j) prod *= m.at(perm[static_cast<std::size_t>(j)], j);
        total += prod;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return total;
}

// Alexander matrix assembled row by row: for crossing i, a 1 in column i for
// the emanating arc, (t^sgn - 1) s^a in the over arc's column and -t^sgn s^a
// in the incoming arc's column. Locates the three incident arcs directly
// instead of summing incidence cases arc by arc.
inline vcn::PolyMatrix alexander_rows(const vcn::LongArcDecomposition& d) {
    using vcn::LaurentPoly;
    vcn::PolyMatrix a(d.n);
    for (int i = 0; i < d.n; ++i) {
        a.at(i, i) += LaurentPoly(1);
        int sgn = d.sign[static_cast<std::size_t>(i)];
        LaurentPoly t_sgn = LaurentPoly::t(sgn);

        for (int j = 0; j < d.n; ++j) {
            const vcn::LongArc& la = d.long_arcs[static_cast<std::size_t>(j)];
            for (const vcn::Arc& arc : la.arcs)
                for (int oc : arc.over_crossings)
                    if (oc == i)
                        a.at(i, j) += (t_sgn - LaurentPoly(1)).mul_s_power(arc.degree);
            if (la.ends_at == i)
                a.at(i, j) += (-t_sgn).mul_s_power(la.arcs.back().degree);
        }
    }
    return a;
}

// Entries for the determinant-oracle matrices.
inline vcn::LaurentPoly random_entry(std::mt19937_64& rng) {
    using P = vcn::LaurentPoly;
    switch (rng() % 13) {
        case 0: return P(0);
        case 1: return P(1);
        case 2: return P(-1);
        case 3: return P::t();
        case 4: return -P::t();
        case 5: return P::t(-1);
        case 6: return -P::t(-1);
        case 7: return P::t() - P(1);
        case 8: return P::t(-1) - P(1);
        case 9: return P::s();
        case 10: return -P::s();
        case 11: return P::s(-1);
        default: return -P::s(-1);
    }
}

inline vcn::PolyMatrix random_poly_matrix(int n, std::mt19937_64& rng) {
    vcn::PolyMatrix m(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m.at(i, j) = random_entry(rng);
    return m;
}

inline vcn::BitMatrix random_bit_matrix(int n, std::mt19937_64& rng) {
    vcn::BitMatrix m(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m.at(i, j) = rng() % 2;
    return m;
}

}  // namespace oracles
