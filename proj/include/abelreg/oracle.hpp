#ifndef ABELREG_ORACLE_HPP
#define ABELREG_ORACLE_HPP

#include <algorithm>
#include <bit>
#include <cstddef>
#include <utility>
#include <vector>

#include <abelreg/catalogs.hpp>

namespace abelreg {

// Brute-force verification path on products of elliptic curves: continuous
// regularity straight from its definition via rank-one cohomology tables and
// the Kunneth formula. Never touches the chamber engine, so agreement with
// it is a genuine cross-check.

struct EllipticFactor {
    Int rank;
    Rational slope;
    Int degree;
};

namespace detail {

inline void validate(const EllipticFactor& f) {
    if (f.rank < 1) throw std::domain_error("factor rank must be positive");
    if (f.degree < 1) throw std::domain_error("factor degree must be positive");
    if (!is_integer(Rational(f.rank) * f.slope)) throw std::domain_error("non-integral c1");
}

inline Rational chi(const EllipticFactor& f, long long m) {
    return Rational(f.rank) * (f.slope + Rational(m) * Rational(f.degree));
}

}  // namespace detail

// Generic-twist cohomology of a semihomogeneous bundle on an elliptic curve
// at twist m: all cohomology sits in one degree determined by the sign of
// chi = rank * (slope + m * degree), and a slope-zero twist of a general
// torsion line bundle has none at all.
inline std::pair<Int, Int> elliptic_cohomology(const EllipticFactor& f, long long m) {
    detail::validate(f);
    Rational chi = detail::chi(f, m);
    Int c = numerator(chi);  // integral by the validation above
    if (c > 0) return {c, Int(0)};
    if (c < 0) return {Int(0), -c};
    return {Int(0), Int(0)};
}

struct CohomologyRow {
    long long twist = 0;
    Int h0;
    Int h1;
};

// At each twist at most one of h0, h1 is nonzero and h0 - h1 = chi.
struct CohomologyTable {
    EllipticFactor factor;
    std::vector<CohomologyRow> rows;
};

inline CohomologyTable cohomology_table(const EllipticFactor& f, long long m_lo, long long m_hi) {
    CohomologyTable t;
    t.factor = f;
    for (long long m = m_lo; m <= m_hi; ++m) {
        auto [h0, h1] = elliptic_cohomology(f, m);
        t.rows.push_back({m, std::move(h0), std::move(h1)});
    }
    return t;
}

// Continuous regularity of the box product from its definition: the smallest
// m such that for every i in {1,...,g} the Kunneth sum for h^i of the
// (m-i)-th twist at a general torsion point vanishes. The scan starts at the
// first m not provably failing (below it every factor contributes h1 > 0, so
// h^g > 0) and is certain to stop once every factor has h1 = 0 at all
// relevant twists.
inline long long kunneth_creg(const std::vector<EllipticFactor>& factors) {
    if (factors.empty()) throw std::domain_error("product needs at least one factor");
    if (factors.size() > 4) throw std::domain_error("oracle limited to at most four factors");
    for (const auto& f : factors) detail::validate(f);
    const int g = static_cast<int>(factors.size());

    Rational max_ratio = factors[0].slope / Rational(factors[0].degree);
    Rational min_ratio = max_ratio;
    for (const auto& f : factors) {
        Rational r = f.slope / Rational(f.degree);
        max_ratio = std::max(max_ratio, r);
        min_ratio = std::min(min_ratio, r);
    }
    const long long m_start =
        static_cast<long long>(rational_ceil(Rational(g) - max_ratio));
    const long long m_stop =
        static_cast<long long>(rational_ceil(Rational(g) - min_ratio)) + 1;

    const auto h_i = [&](int i, long long twist) {
        std::vector<std::pair<Int, Int>> h(g);
        for (int j = 0; j < g; ++j) h[j] = elliptic_cohomology(factors[j], twist);
        // Sum over the subsets contributing in degree i.
        Int total(0);
        for (unsigned mask = 0; mask < (1u << g); ++mask) {
            if (std::popcount(mask) != i) continue;
            Int term(1);
            for (int j = 0; j < g && term != 0; ++j)
                term *= (mask >> j) & 1u ? h[j].second : h[j].first;
            total += term;
        }
        return total;
    };

    for (long long m = m_start; m <= m_stop; ++m) {
        bool vanishes = true;
        for (int i = 1; i <= g && vanishes; ++i)
            if (h_i(i, m - i) != 0) vanishes = false;
        if (vanishes) return m;
    }
    throw SearchLimitError("search window exhausted");
}

}  // namespace abelreg

#endif
