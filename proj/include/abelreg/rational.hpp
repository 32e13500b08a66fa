#ifndef ABELREG_RATIONAL_HPP
#define ABELREG_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace abelreg {

using Int = boost::multiprecision::cpp_int;

// Exact rational scalar. cpp_rational keeps gcd(|num|, den) = 1 and den > 0
// through every operation, which makes equality structural.
using Rational = boost::multiprecision::cpp_rational;

// cpp_rational's two-argument constructor requires the pair to already be in
// lowest terms; exact division normalizes any pair.
inline Rational make_rational(Int num, Int den) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    return Rational(std::move(num)) / Rational(std::move(den));
}

inline int sign(const Rational& q) { return q.sign(); }

inline Int rational_floor(const Rational& q) {
    Int n = numerator(q);
    const Int& d = denominator(q);
    Int t = n / d;
    if (n < 0 && t * d != n) --t;
    return t;
}

inline Int rational_ceil(const Rational& q) { return -rational_floor(-q); }

inline bool is_integer(const Rational& q) { return denominator(q) == 1; }

// Accepts "p" or "p/q" with an optional leading sign on p; no whitespace,
// no floating point.
inline Rational parse_rational(std::string_view s) {
    const auto fail = [&] {
        throw std::invalid_argument("malformed rational '" + std::string(s) + "'");
    };
    if (s.empty()) fail();
    std::size_t pos = 0;
    bool negative = false;
    if (s[pos] == '-' || s[pos] == '+') {
        negative = s[pos] == '-';
        ++pos;
    }
    const std::size_t num_begin = pos;
    while (pos < s.size() && s[pos] >= '0' && s[pos] <= '9') ++pos;
    if (pos == num_begin) fail();
    Int num(std::string(s.substr(num_begin, pos - num_begin)));
    if (negative) num = -num;
    if (pos == s.size()) return Rational(num);
    if (s[pos] != '/') fail();
    ++pos;
    if (pos == s.size()) fail();
    for (std::size_t k = pos; k < s.size(); ++k)
        if (s[k] < '0' || s[k] > '9') fail();
    Int den(std::string(s.substr(pos)));
    if (den == 0) fail();
    return make_rational(std::move(num), std::move(den));
}

inline std::string to_string(const Rational& q) { return q.str(); }
inline std::string to_string(const Int& n) { return n.str(); }

// Element of Q(i); entry type of the hermitian forms below.
struct GaussianRational {
    Rational re;
    Rational im;

    GaussianRational() = default;
    GaussianRational(Rational r) : re(std::move(r)) {}  // NOLINT: implicit by design
    GaussianRational(int n) : re(n) {}                  // NOLINT
    GaussianRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

    bool is_zero() const { return re.is_zero() && im.is_zero(); }
    bool is_real() const { return im.is_zero(); }
    GaussianRational conj() const { return {re, -im}; }

    friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
        return a.re == b.re && a.im == b.im;
    }
    friend bool operator!=(const GaussianRational& a, const GaussianRational& b) {
        return !(a == b);
    }
    GaussianRational operator-() const { return {-re, -im}; }
    friend GaussianRational operator+(const GaussianRational& a, const GaussianRational& b) {
        return {a.re + b.re, a.im + b.im};
    }
    friend GaussianRational operator-(const GaussianRational& a, const GaussianRational& b) {
        return {a.re - b.re, a.im - b.im};
    }
    friend GaussianRational operator*(const GaussianRational& a, const GaussianRational& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend GaussianRational operator/(const GaussianRational& a, const GaussianRational& b) {
        Rational n = b.re * b.re + b.im * b.im;
        if (n.is_zero()) throw std::domain_error("division by zero");
        return {(a.re * b.re + a.im * b.im) / n, (a.im * b.re - a.re * b.im) / n};
    }
    GaussianRational& operator+=(const GaussianRational& b) { return *this = *this + b; }
    GaussianRational& operator-=(const GaussianRational& b) { return *this = *this - b; }
    GaussianRational& operator*=(const GaussianRational& b) { return *this = *this * b; }
};

inline std::string to_string(const GaussianRational& z) {
    if (z.im.is_zero()) return z.re.str();
    return z.re.str() + (z.im.sign() < 0 ? "" : "+") + z.im.str() + "i";
}

}  // namespace abelreg

#endif
