#ifndef ABELREG_LINALG_HPP
#define ABELREG_LINALG_HPP

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include <abelreg/matrix.hpp>
#include <abelreg/polynomial.hpp>
#include <abelreg/rational.hpp>

namespace abelreg {

// Eigenvalue sign counts of a hermitian form.
struct Inertia {
    int negatives = 0;
    int zeros = 0;
    int positives = 0;

    int dim() const { return negatives + zeros + positives; }
    friend bool operator==(const Inertia&, const Inertia&) = default;
};

// g x g hermitian matrix over Q(i), the model of a real Neron-Severi class.
// Hermitian symmetry is validated at construction, so the diagonal is real
// and the eigenvalues are real.
class HermitianForm {
public:
    explicit HermitianForm(Matrix<GaussianRational> entries) : m_(std::move(entries)) {
        if (!m_.is_square() || m_.rows() == 0)
            throw std::invalid_argument("hermitian form must be square of dimension >= 1");
        for (std::size_t i = 0; i < m_.rows(); ++i)
            for (std::size_t j = i; j < m_.rows(); ++j)
                if (m_(i, j) != m_(j, i).conj())
                    throw std::invalid_argument("matrix is not hermitian");
    }

    static HermitianForm diagonal(std::vector<Rational> d) {
        Matrix<GaussianRational> m(d.size(), d.size());
        for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = GaussianRational(std::move(d[i]));
        return HermitianForm(unchecked{}, std::move(m));
    }
    static HermitianForm identity(std::size_t n) {
        return HermitianForm(unchecked{}, Matrix<GaussianRational>::identity(n));
    }
    static HermitianForm from_real(const Matrix<Rational>& s) {
        Matrix<GaussianRational> m(s.rows(), s.cols());
        for (std::size_t i = 0; i < s.rows(); ++i)
            for (std::size_t j = 0; j < s.cols(); ++j) m(i, j) = GaussianRational(s(i, j));
        return HermitianForm(std::move(m));
    }

    std::size_t dim() const { return m_.rows(); }
    const Matrix<GaussianRational>& entries() const { return m_; }

    bool is_real() const {
        for (std::size_t i = 0; i < m_.rows(); ++i)
            for (std::size_t j = 0; j < m_.cols(); ++j)
                if (!m_(i, j).im.is_zero()) return false;
        return true;
    }
    bool is_diagonal() const {
        for (std::size_t i = 0; i < m_.rows(); ++i)
            for (std::size_t j = 0; j < m_.cols(); ++j)
                if (i != j && !m_(i, j).is_zero()) return false;
        return true;
    }

    // Hermitian combinations with rational coefficients stay hermitian; these
    // skip revalidation.
    friend HermitianForm operator+(const HermitianForm& a, const HermitianForm& b) {
        return HermitianForm(unchecked{}, a.m_ + b.m_);
    }
    friend HermitianForm operator*(const Rational& s, const HermitianForm& a) {
        return HermitianForm(unchecked{}, GaussianRational(s) * a.m_);
    }
    HermitianForm operator-() const { return Rational(-1) * *this; }
    friend bool operator==(const HermitianForm& a, const HermitianForm& b) {
        return a.m_ == b.m_;
    }

private:
    struct unchecked {};
    HermitianForm(unchecked, Matrix<GaussianRational> entries) : m_(std::move(entries)) {}
    Matrix<GaussianRational> m_;
};

// Doubling H = S + iA into the real symmetric [[S, -A], [A, S]]; every
// eigenvalue of H appears twice.
inline Matrix<Rational> realify(const HermitianForm& h) {
    const std::size_t n = h.dim();
    Matrix<Rational> r(2 * n, 2 * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const GaussianRational& z = h.entries()(i, j);
            r(i, j) = z.re;
            r(i + n, j + n) = z.re;
            r(i, j + n) = -z.im;
            r(i + n, j) = z.im;
        }
    return r;
}

namespace detail {

// Faddeev-LeVerrier: det(xI - M) with exact field arithmetic; the divisions
// by 1..n are exact. O(n^4) field operations, fine at these dimensions.
template <typename F>
std::vector<F> charpoly_coeffs(const Matrix<F>& m) {
    if (!m.is_square()) throw std::invalid_argument("characteristic polynomial of non-square matrix");
    const std::size_t n = m.rows();
    if (n == 0) return {F(1)};
    std::vector<F> c(n + 1);
    c[n] = F(1);
    Matrix<F> a = m;
    c[n - 1] = -trace(a);
    for (std::size_t k = 2; k <= n; ++k) {
        Matrix<F> shifted = a;
        for (std::size_t i = 0; i < n; ++i) shifted(i, i) += c[n - k + 1];
        a = m * shifted;
        c[n - k] = -(trace(a) / F(static_cast<int>(k)));
    }
    return c;
}

inline Inertia inertia_from_real_charpoly(const RationalPolynomial& p) {
    Inertia result;
    const auto& c = p.coeffs();
    std::size_t low = 0;
    while (low < c.size() && c[low].is_zero()) ++low;
    result.zeros = static_cast<int>(low);
    std::vector<Rational> rest(c.begin() + low, c.end());
    RationalPolynomial q(std::move(rest));
    result.positives = descartes_sign_changes(q);
    result.negatives = descartes_sign_changes(q.reflected());
    return result;
}

}  // namespace detail

inline RationalPolynomial char_poly(const Matrix<Rational>& m) {
    return RationalPolynomial(detail::charpoly_coeffs(m));
}

// Characteristic polynomial of a hermitian matrix; the coefficients are
// provably real, so any nonzero imaginary part flags arithmetic corruption.
inline RationalPolynomial char_poly(const HermitianForm& h) {
    auto c = detail::charpoly_coeffs(h.entries());
    std::vector<Rational> re(c.size());
    for (std::size_t k = 0; k < c.size(); ++k) {
        if (!c[k].im.is_zero())
            throw std::logic_error("hermitian characteristic polynomial has imaginary part");
        re[k] = std::move(c[k].re);
    }
    return RationalPolynomial(std::move(re));
}

inline Rational det(const HermitianForm& h) {
    GaussianRational d = determinant(h.entries());
    if (!d.im.is_zero()) throw std::logic_error("hermitian determinant has imaginary part");
    return d.re;
}

// Exact eigenvalue sign counts. All roots of the characteristic polynomial
// are real, so Descartes' rule gives the positive and negative counts
// exactly; the zero count is the multiplicity of the root 0. Equivalently,
// half the counts of realify(h): char(realify(h)) = char(h)^2.
inline Inertia inertia(const HermitianForm& h) {
    const int n = static_cast<int>(h.dim());
    Inertia result;
    if (h.is_diagonal()) {
        for (std::size_t i = 0; i < h.dim(); ++i) {
            int s = h.entries()(i, i).re.sign();
            if (s < 0) ++result.negatives;
            else if (s > 0) ++result.positives;
            else ++result.zeros;
        }
    } else if (h.is_real()) {
        Matrix<Rational> s(h.dim(), h.dim());
        for (std::size_t i = 0; i < h.dim(); ++i)
            for (std::size_t j = 0; j < h.dim(); ++j) s(i, j) = h.entries()(i, j).re;
        result = detail::inertia_from_real_charpoly(char_poly(s));
    } else {
        result = detail::inertia_from_real_charpoly(char_poly(h));
    }
    if (result.dim() != n) throw std::logic_error("inertia counts do not sum to dimension");
    return result;
}

inline bool is_positive_definite(const HermitianForm& h) {
    Inertia i = inertia(h);
    return i.negatives == 0 && i.zeros == 0;
}
inline bool is_positive_semidefinite(const HermitianForm& h) {
    return inertia(h).negatives == 0;
}
inline bool is_negative_definite(const HermitianForm& h) {
    Inertia i = inertia(h);
    return i.positives == 0 && i.zeros == 0;
}

}  // namespace abelreg

#endif
