#ifndef ABELREG_POLYNOMIAL_HPP
#define ABELREG_POLYNOMIAL_HPP

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <abelreg/rational.hpp>

namespace abelreg {

// Univariate polynomial over Q, coefficients stored lowest degree first.
// The zero polynomial has an empty coefficient vector; otherwise the leading
// coefficient is nonzero.
class RationalPolynomial {
public:
    RationalPolynomial() = default;
    explicit RationalPolynomial(std::vector<Rational> coeffs) : c_(std::move(coeffs)) {
        trim();
    }
    static RationalPolynomial constant(Rational v) {
        return RationalPolynomial(std::vector<Rational>{std::move(v)});
    }
    static RationalPolynomial monomial(std::size_t deg, Rational coeff) {
        std::vector<Rational> c(deg + 1);
        c[deg] = std::move(coeff);
        return RationalPolynomial(std::move(c));
    }

    bool is_zero() const { return c_.empty(); }
    // -1 for the zero polynomial.
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const std::vector<Rational>& coeffs() const { return c_; }
    Rational coeff(std::size_t k) const { return k < c_.size() ? c_[k] : Rational(0); }
    const Rational& leading() const {
        if (c_.empty()) throw std::domain_error("leading coefficient of zero polynomial");
        return c_.back();
    }

    Rational eval(const Rational& x) const {
        Rational v(0);
        for (std::size_t k = c_.size(); k-- > 0;) v = v * x + c_[k];
        return v;
    }

    RationalPolynomial derivative() const {
        if (c_.size() <= 1) return {};
        std::vector<Rational> d(c_.size() - 1);
        for (std::size_t k = 1; k < c_.size(); ++k) d[k - 1] = Rational(k) * c_[k];
        return RationalPolynomial(std::move(d));
    }

    // p(-x)
    RationalPolynomial reflected() const {
        std::vector<Rational> r(c_);
        for (std::size_t k = 1; k < r.size(); k += 2) r[k] = -r[k];
        return RationalPolynomial(std::move(r));
    }

    friend bool operator==(const RationalPolynomial& a, const RationalPolynomial& b) {
        return a.c_ == b.c_;
    }
    friend bool operator!=(const RationalPolynomial& a, const RationalPolynomial& b) {
        return !(a == b);
    }
    RationalPolynomial operator-() const {
        std::vector<Rational> r(c_);
        for (auto& v : r) v = -v;
        return RationalPolynomial(std::move(r));
    }
    friend RationalPolynomial operator+(const RationalPolynomial& a, const RationalPolynomial& b) {
        std::vector<Rational> r(std::max(a.c_.size(), b.c_.size()));
        for (std::size_t k = 0; k < r.size(); ++k) r[k] = a.coeff(k) + b.coeff(k);
        return RationalPolynomial(std::move(r));
    }
    friend RationalPolynomial operator-(const RationalPolynomial& a, const RationalPolynomial& b) {
        std::vector<Rational> r(std::max(a.c_.size(), b.c_.size()));
        for (std::size_t k = 0; k < r.size(); ++k) r[k] = a.coeff(k) - b.coeff(k);
        return RationalPolynomial(std::move(r));
    }
    friend RationalPolynomial operator*(const RationalPolynomial& a, const RationalPolynomial& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<Rational> r(a.c_.size() + b.c_.size() - 1);
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i].is_zero()) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
        }
        return RationalPolynomial(std::move(r));
    }
    friend RationalPolynomial operator*(const Rational& s, const RationalPolynomial& a) {
        std::vector<Rational> r(a.c_);
        for (auto& v : r) v = s * v;
        return RationalPolynomial(std::move(r));
    }

    // Euclidean division; b must be nonzero.
    static std::pair<RationalPolynomial, RationalPolynomial> divmod(
            const RationalPolynomial& a, const RationalPolynomial& b) {
        if (b.is_zero()) throw std::domain_error("polynomial division by zero");
        if (a.degree() < b.degree()) return {{}, a};
        std::vector<Rational> rem(a.c_);
        std::vector<Rational> quo(a.c_.size() - b.c_.size() + 1);
        const Rational& lead = b.c_.back();
        for (std::size_t k = quo.size(); k-- > 0;) {
            Rational q = rem[k + b.c_.size() - 1] / lead;
            if (!q.is_zero()) {
                quo[k] = q;
                for (std::size_t j = 0; j < b.c_.size(); ++j) rem[k + j] -= q * b.c_[j];
            }
        }
        return {RationalPolynomial(std::move(quo)), RationalPolynomial(std::move(rem))};
    }

    std::string str(const std::string& var = "x") const;

private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }
    std::vector<Rational> c_;
};

inline std::string RationalPolynomial::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::string out;
    for (std::size_t k = c_.size(); k-- > 0;) {
        if (c_[k].is_zero()) continue;
        if (!out.empty()) out += c_[k].sign() < 0 ? " - " : " + ";
        else if (c_[k].sign() < 0) out += "-";
        Rational a = abs(c_[k]);
        if (k == 0 || a != 1) out += to_string(a);
        if (k >= 1) {
            if (a != 1) out += "*";
            out += var;
            if (k >= 2) out += "^" + std::to_string(k);
        }
    }
    return out;
}

inline RationalPolynomial monic(const RationalPolynomial& p) {
    if (p.is_zero()) return p;
    return (Rational(1) / p.leading()) * p;
}

inline RationalPolynomial poly_gcd(RationalPolynomial a, RationalPolynomial b) {
    while (!b.is_zero()) {
        auto r = RationalPolynomial::divmod(a, b).second;
        a = std::move(b);
        b = monic(std::move(r));  // rescaling each remainder keeps coefficients tame
    }
    return monic(a);
}

// Exact quotient; throws if the division is not exact.
inline RationalPolynomial poly_divexact(const RationalPolynomial& a, const RationalPolynomial& b) {
    auto [q, r] = RationalPolynomial::divmod(a, b);
    if (!r.is_zero()) throw std::logic_error("inexact polynomial division");
    return q;
}

inline RationalPolynomial square_free_part(const RationalPolynomial& p) {
    if (p.degree() <= 0) return monic(p);
    auto g = poly_gcd(p, p.derivative());
    if (g.degree() <= 0) return monic(p);
    return monic(poly_divexact(p, g));
}

// Yun's algorithm: p = prod f_k^k with the f_k squarefree, pairwise coprime,
// monic. Constant p gives an empty list.
inline std::vector<std::pair<RationalPolynomial, int>> square_free_decomposition(
        const RationalPolynomial& p) {
    std::vector<std::pair<RationalPolynomial, int>> out;
    if (p.degree() <= 0) return out;
    auto g0 = poly_gcd(p, p.derivative());
    if (g0.degree() == 0) {
        out.emplace_back(monic(p), 1);
        return out;
    }
    auto b = poly_divexact(p, g0);
    auto c = poly_divexact(p.derivative(), g0);
    auto d = c - b.derivative();
    int i = 1;
    while (b.degree() > 0) {
        auto gi = poly_gcd(b, d);
        if (gi.degree() > 0) out.emplace_back(gi, i);
        b = poly_divexact(b, gi);
        c = poly_divexact(d, gi);
        d = c - b.derivative();
        ++i;
    }
    return out;
}

// Number of sign changes in the coefficient sequence, zeros skipped. Equals
// the number of positive roots counted with multiplicity whenever every root
// is real (the characteristic-polynomial case).
inline int descartes_sign_changes(const RationalPolynomial& p) {
    int changes = 0, prev = 0;
    for (const auto& c : p.coeffs()) {
        int s = c.sign();
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++changes;
        prev = s;
    }
    return changes;
}

// Sturm chain of a squarefree polynomial. Each element is rescaled by a
// positive constant, which leaves every sign evaluation unchanged.
class SturmChain {
public:
    explicit SturmChain(RationalPolynomial squarefree) {
        chain_.push_back(scale_pos(std::move(squarefree)));
        if (chain_.front().degree() >= 1) {
            chain_.push_back(scale_pos(chain_.front().derivative()));
            while (chain_.back().degree() > 0) {
                auto r = -RationalPolynomial::divmod(chain_[chain_.size() - 2],
                                                     chain_.back()).second;
                if (r.is_zero()) break;
                chain_.push_back(scale_pos(std::move(r)));
            }
        }
    }

    const RationalPolynomial& base() const { return chain_.front(); }
    bool is_root(const Rational& x) const { return base().eval(x).is_zero(); }

    int variations_at(const Rational& x) const {
        int changes = 0, prev = 0;
        for (const auto& p : chain_) {
            int s = p.eval(x).sign();
            if (s == 0) continue;
            if (prev != 0 && s != prev) ++changes;
            prev = s;
        }
        return changes;
    }

    // Distinct roots in (a, b]. With the zero-skipping convention the count
    // is valid even when a or b is itself a root.
    long long count_half_open(const Rational& a, const Rational& b) const {
        return variations_at(a) - variations_at(b);
    }
    long long count_open(const Rational& a, const Rational& b) const {
        return count_half_open(a, b) - (is_root(b) ? 1 : 0);
    }

private:
    static RationalPolynomial scale_pos(RationalPolynomial p) {
        if (p.is_zero()) return p;
        Rational s = abs(p.leading());
        return (Rational(1) / s) * p;
    }
    std::vector<RationalPolynomial> chain_;
};

// Isolating interval for one real root. lo == hi marks a root found exactly
// (necessarily rational); otherwise the root lies strictly inside (lo, hi)
// and the interval contains no other root of the input.
struct IsolatedRoot {
    Rational lo;
    Rational hi;
    int multiplicity = 1;
    bool exact() const { return lo == hi; }
};

namespace detail {

inline void isolate_rec(const SturmChain& chain, const Rational& a, const Rational& b,
                        long long count, std::vector<IsolatedRoot>& out) {
    if (count <= 0) return;
    if (count == 1) {
        out.push_back({a, b, 1});
        return;
    }
    Rational m = (a + b) / 2;
    if (chain.is_root(m)) {
        long long left = chain.count_half_open(a, m) - 1;
        isolate_rec(chain, a, m, left, out);
        out.push_back({m, m, 1});
        isolate_rec(chain, m, b, chain.count_open(m, b), out);
    } else {
        long long left = chain.count_half_open(a, m);
        isolate_rec(chain, a, m, left, out);
        isolate_rec(chain, m, b, count - left, out);
    }
}

inline void refine_root(const SturmChain& chain, IsolatedRoot& r, const Rational& width) {
    while (!r.exact() && r.hi - r.lo > width) {
        Rational m = (r.lo + r.hi) / 2;
        if (chain.is_root(m)) {
            r.lo = m;
            r.hi = m;
            return;
        }
        (chain.count_open(r.lo, m) == 1 ? r.hi : r.lo) = m;
    }
}

}  // namespace detail

// Disjoint intervals, sorted, one per distinct real root of p in the open
// segment (lo, hi); roots at the endpoints are excluded. Multiplicities come
// from the squarefree decomposition of p.
inline std::vector<IsolatedRoot> isolate_real_roots(const RationalPolynomial& p,
                                                    const Rational& lo, const Rational& hi) {
    if (p.is_zero()) throw std::domain_error("identically zero on segment");
    if (!(lo < hi)) throw std::domain_error("root isolation needs lo < hi");
    std::vector<IsolatedRoot> out;
    if (p.degree() <= 0) return out;

    auto factors = square_free_decomposition(p);
    RationalPolynomial sf = RationalPolynomial::constant(Rational(1));
    for (const auto& [f, mult] : factors) sf = sf * f;
    SturmChain chain(sf);
    detail::isolate_rec(chain, lo, hi, chain.count_open(lo, hi), out);
    const Rational width = (hi - lo) / 256;
    for (auto& r : out) detail::refine_root(chain, r, width);

    if (factors.size() == 1) {
        for (auto& r : out) r.multiplicity = factors.front().second;
        return out;
    }
    std::vector<SturmChain> factor_chains;
    factor_chains.reserve(factors.size());
    for (const auto& [f, mult] : factors) factor_chains.emplace_back(f);
    for (auto& r : out) {
        r.multiplicity = 0;
        for (std::size_t k = 0; k < factors.size(); ++k) {
            bool here = r.exact() ? factor_chains[k].is_root(r.lo)
                                  : factor_chains[k].count_open(r.lo, r.hi) == 1;
            if (here) {
                r.multiplicity = factors[k].second;
                break;
            }
        }
        if (r.multiplicity == 0) throw std::logic_error("root lost during isolation");
    }
    return out;
}

// Unique polynomial of degree < points.size() through the given nodes
// (Lagrange form; nodes must be distinct).
inline RationalPolynomial interpolate(const std::vector<std::pair<Rational, Rational>>& points) {
    RationalPolynomial acc;
    for (std::size_t i = 0; i < points.size(); ++i) {
        RationalPolynomial basis = RationalPolynomial::constant(Rational(1));
        Rational denom(1);
        for (std::size_t j = 0; j < points.size(); ++j) {
            if (j == i) continue;
            basis = basis * RationalPolynomial(
                std::vector<Rational>{-points[j].first, Rational(1)});
            denom *= points[i].first - points[j].first;
        }
        acc = acc + (points[i].second / denom) * basis;
    }
    return acc;
}

}  // namespace abelreg

#endif
