#ifndef ABELREG_NSMODEL_HPP
#define ABELREG_NSMODEL_HPP

#include <cstddef>
#include <memory>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include <abelreg/linalg.hpp>
#include <abelreg/polynomial.hpp>

namespace abelreg {

// The rational Neron-Severi space of an abelian variety of dimension g:
// a basis of named hermitian generators. Generators are checked for linear
// independence so distinct coefficient vectors are distinct classes.
class AbelianModel {
public:
    using Generator = std::pair<std::string, HermitianForm>;

    static std::shared_ptr<const AbelianModel> make(std::size_t dim,
                                                    std::vector<Generator> basis) {
        return std::shared_ptr<const AbelianModel>(new AbelianModel(dim, std::move(basis)));
    }

    std::size_t dim() const { return dim_; }
    std::size_t basis_size() const { return basis_.size(); }
    const std::string& name(std::size_t k) const { return basis_[k].first; }
    const HermitianForm& generator(std::size_t k) const { return basis_[k].second; }

private:
    AbelianModel(std::size_t dim, std::vector<Generator> basis)
        : dim_(dim), basis_(std::move(basis)) {
        if (dim_ == 0) throw std::invalid_argument("model dimension must be positive");
        if (basis_.empty()) throw std::invalid_argument("model basis must be nonempty");
        std::unordered_set<std::string> names;
        for (const auto& [name, gen] : basis_) {
            if (gen.dim() != dim_)
                throw std::invalid_argument("generator dimension mismatch");
            if (!names.insert(name).second)
                throw std::invalid_argument("duplicate basis name '" + name + "'");
        }
        // Vectorize over (re, im) entry parts and check full column rank.
        Matrix<Rational> v(basis_.size(), 2 * dim_ * dim_);
        for (std::size_t k = 0; k < basis_.size(); ++k) {
            const auto& m = basis_[k].second.entries();
            for (std::size_t i = 0; i < dim_; ++i)
                for (std::size_t j = 0; j < dim_; ++j) {
                    v(k, 2 * (i * dim_ + j)) = m(i, j).re;
                    v(k, 2 * (i * dim_ + j) + 1) = m(i, j).im;
                }
        }
        if (rank(v) != basis_.size())
            throw std::invalid_argument("basis generators are linearly dependent");
    }

    std::size_t dim_;
    std::vector<Generator> basis_;
};

using ModelPtr = std::shared_ptr<const AbelianModel>;

// Rational class over a model basis.
struct NSClass {
    ModelPtr model;
    std::vector<Rational> coeffs;
};

inline NSClass make_class(ModelPtr model, std::vector<Rational> coeffs) {
    if (!model) throw std::invalid_argument("class without model");
    if (coeffs.size() != model->basis_size())
        throw std::invalid_argument("coefficient count does not match basis size");
    return {std::move(model), std::move(coeffs)};
}

inline NSClass zero_class(ModelPtr model) {
    std::vector<Rational> c(model->basis_size());
    return {std::move(model), std::move(c)};
}

inline void require_same_model(const NSClass& a, const NSClass& b) {
    if (a.model != b.model) throw std::domain_error("classes belong to different models");
}

inline NSClass operator+(const NSClass& a, const NSClass& b) {
    require_same_model(a, b);
    NSClass r = a;
    for (std::size_t k = 0; k < r.coeffs.size(); ++k) r.coeffs[k] += b.coeffs[k];
    return r;
}
inline NSClass operator-(const NSClass& a, const NSClass& b) {
    require_same_model(a, b);
    NSClass r = a;
    for (std::size_t k = 0; k < r.coeffs.size(); ++k) r.coeffs[k] -= b.coeffs[k];
    return r;
}
inline NSClass operator*(const Rational& s, const NSClass& a) {
    NSClass r = a;
    for (auto& c : r.coeffs) c = s * c;
    return r;
}
inline NSClass operator-(const NSClass& a) { return Rational(-1) * a; }
inline bool operator==(const NSClass& a, const NSClass& b) {
    return a.model == b.model && a.coeffs == b.coeffs;
}

inline HermitianForm to_matrix(const NSClass& c) {
    const auto& model = *c.model;
    HermitianForm acc = c.coeffs[0] * model.generator(0);
    for (std::size_t k = 1; k < c.coeffs.size(); ++k)
        acc = acc + c.coeffs[k] * model.generator(k);
    return acc;
}

inline bool is_nondegenerate(const NSClass& c) { return !det(to_matrix(c)).is_zero(); }

// The index of a nondegenerate class: the count of negative eigenvalues of
// its hermitian form, i.e. the unique cohomological degree that survives for
// a line bundle with this class.
inline int index(const NSClass& c) {
    Inertia i = inertia(to_matrix(c));
    if (i.zeros > 0) throw std::domain_error("index undefined on degenerate class");
    return i.negatives;
}

enum class Positivity { Ample, NefNotAmple, Other };

// Ample = positive definite form, nef = positive semidefinite.
inline Positivity positivity(const NSClass& c) {
    Inertia i = inertia(to_matrix(c));
    if (i.negatives > 0) return Positivity::Other;
    return i.zeros == 0 ? Positivity::Ample : Positivity::NefNotAmple;
}

inline const char* to_string(Positivity p) {
    switch (p) {
        case Positivity::Ample: return "ample";
        case Positivity::NefNotAmple: return "nef_not_ample";
        default: return "other";
    }
}

// Chamber structure of det along the segment (1-t)a + tb for t in (0,1):
// isolated parameters where det vanishes, and the constant index on each
// open interval between them.
struct ChamberReport {
    struct Chamber {
        Rational t_lo;     // bracketing rationals: every degenerate parameter
        Rational t_hi;     // of the segment lies outside (t_lo, t_hi)
        Rational sample;   // exact interior point where the index was read
        int index = 0;
    };
    NSClass start;
    NSClass end;
    std::vector<IsolatedRoot> critical_params;
    std::vector<Chamber> intervals;
};

// det((1-t)H_a + tH_b) as an exact polynomial in t, via interpolation at
// integer nodes (degree is at most g).
inline RationalPolynomial segment_det_poly(const NSClass& a, const NSClass& b) {
    require_same_model(a, b);
    const std::size_t g = a.model->dim();
    HermitianForm ha = to_matrix(a), hb = to_matrix(b);
    std::vector<std::pair<Rational, Rational>> nodes;
    nodes.reserve(g + 1);
    for (std::size_t k = 0; k <= g; ++k) {
        Rational t(static_cast<int>(k));
        nodes.emplace_back(t, det((Rational(1) - t) * ha + t * hb));
    }
    return interpolate(nodes);
}

namespace detail {

// A rational point strictly above `from` and strictly below the root
// isolated by `iv`, with no root of the chain in between. Shrinks the
// interval's lower end until it clears `from`.
inline Rational point_between(const SturmChain& chain, const Rational& from, IsolatedRoot iv) {
    if (iv.lo > from) return (from + iv.lo) / 2;
    while (true) {
        Rational m = (iv.lo + iv.hi) / 2;
        if (chain.is_root(m)) {
            // Midpoint is the isolated root itself; anything in (from, m) works.
            return (from + m) / 2;
        }
        if (chain.count_open(iv.lo, m) == 1) {
            iv.hi = m;
        } else {
            iv.lo = m;
            if (iv.lo > from) return iv.lo;
        }
    }
}

// A rational point strictly above the root isolated by `iv` and strictly
// below `to`.
inline Rational point_above_root(const SturmChain& chain, IsolatedRoot iv, const Rational& to) {
    if (iv.hi < to) return (iv.hi + to) / 2;
    while (true) {
        Rational m = (iv.lo + iv.hi) / 2;
        if (chain.is_root(m)) return (m + to) / 2;
        if (chain.count_half_open(iv.lo, m) == 1) return (m + to) / 2;
        iv.lo = m;
    }
}

}  // namespace detail

inline ChamberReport scan_segment(const NSClass& a, const NSClass& b) {
    require_same_model(a, b);
    RationalPolynomial dp = segment_det_poly(a, b);
    if (dp.is_zero()) throw std::domain_error("segment lies in degenerate locus");

    ChamberReport report;
    report.start = a;
    report.end = b;
    report.critical_params = isolate_real_roots(dp, Rational(0), Rational(1));
    SturmChain chain(square_free_part(dp));

    const auto class_at = [&](const Rational& t) {
        return (Rational(1) - t) * a + t * b;
    };
    const auto emit = [&](Rational lo, Rational hi, Rational sample) {
        int idx = index(class_at(sample));
        report.intervals.push_back({std::move(lo), std::move(hi), std::move(sample), idx});
    };

    Rational cursor(0);
    for (const auto& root : report.critical_params) {
        Rational sample = detail::point_between(chain, cursor, root);
        emit(cursor, root.lo, std::move(sample));
        cursor = root.hi;
    }
    Rational last_sample = report.critical_params.empty()
        ? Rational(1) / 2
        : detail::point_above_root(chain, report.critical_params.back(), Rational(1));
    emit(std::move(cursor), Rational(1), std::move(last_sample));
    return report;
}

}  // namespace abelreg

#endif
