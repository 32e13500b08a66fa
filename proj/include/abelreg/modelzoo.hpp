#ifndef ABELREG_MODELZOO_HPP
#define ABELREG_MODELZOO_HPP

#include <cstdint>
#include <vector>

#include <abelreg/nsmodel.hpp>

namespace abelreg {

// Deterministic splitmix64 generator so property suites replay identically
// for a given seed on any platform.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }
    // Inclusive bounds.
    long long uniform(long long lo, long long hi) {
        return lo + static_cast<long long>(next() % static_cast<std::uint64_t>(hi - lo + 1));
    }
    bool chance(unsigned num, unsigned den) { return next() % den < num; }

    Rational small_rational(int max_num, int max_den) {
        return make_rational(uniform(-max_num, max_num), uniform(1, max_den));
    }

private:
    std::uint64_t state_;
};

// Principally polarized model with Picard rank one: Theta as the identity
// form; t * Theta is definite of sign t.
inline ModelPtr principal_model(std::size_t g) {
    return AbelianModel::make(g, {{"Theta", HermitianForm::identity(g)}});
}

// Real model with up to three independent generators:
//   I  identity, D = diag(1..g), T tridiagonal (2 on, 1 off) for g >= 2.
inline ModelPtr diag_model(std::size_t g) {
    std::vector<AbelianModel::Generator> gens;
    gens.emplace_back("I", HermitianForm::identity(g));
    if (g >= 2) {
        std::vector<Rational> d(g);
        for (std::size_t i = 0; i < g; ++i) d[i] = Rational(static_cast<int>(i + 1));
        gens.emplace_back("D", HermitianForm::diagonal(std::move(d)));
        Matrix<Rational> t(g, g);
        for (std::size_t i = 0; i < g; ++i) {
            t(i, i) = Rational(2);
            if (i + 1 < g) {
                t(i, i + 1) = Rational(1);
                t(i + 1, i) = Rational(1);
            }
        }
        gens.emplace_back("T", HermitianForm::from_real(t));
    }
    return AbelianModel::make(g, std::move(gens));
}

// Product of g elliptic curves: one unit generator per factor.
inline ModelPtr elliptic_product_model(std::size_t g) {
    std::vector<AbelianModel::Generator> gens;
    for (std::size_t i = 0; i < g; ++i) {
        std::vector<Rational> d(g);
        d[i] = Rational(1);
        gens.emplace_back("D" + std::to_string(i + 1), HermitianForm::diagonal(std::move(d)));
    }
    return AbelianModel::make(g, std::move(gens));
}

// Abelian surface with a generator of nonzero imaginary part, so the complex
// arithmetic path gets exercised:
//   I identity, D = diag(1, 2), J = [[0, i], [-i, 0]].
inline ModelPtr cm_surface_model() {
    Matrix<GaussianRational> j(2, 2);
    j(0, 1) = GaussianRational(Rational(0), Rational(1));
    j(1, 0) = GaussianRational(Rational(0), Rational(-1));
    return AbelianModel::make(2, {
        {"I", HermitianForm::identity(2)},
        {"D", HermitianForm::diagonal({Rational(1), Rational(2)})},
        {"J", HermitianForm(std::move(j))},
    });
}

inline NSClass basis_class(const ModelPtr& model, std::size_t k, Rational scale = Rational(1)) {
    std::vector<Rational> c(model->basis_size());
    c[k] = std::move(scale);
    return make_class(model, std::move(c));
}

inline NSClass random_class(Rng& rng, const ModelPtr& model, int max_num = 4, int max_den = 3) {
    std::vector<Rational> c(model->basis_size());
    for (auto& v : c) v = rng.small_rational(max_num, max_den);
    return make_class(model, std::move(c));
}

// Rejection sampling biased toward nonnegative coefficients; in every zoo
// model the all-ones vector is ample, so a fallback always exists.
inline NSClass random_ample_class(Rng& rng, const ModelPtr& model) {
    for (int attempt = 0; attempt < 64; ++attempt) {
        std::vector<Rational> c(model->basis_size());
        c[0] = Rational(rng.uniform(1, 4));
        for (std::size_t k = 1; k < c.size(); ++k) {
            Rational v = rng.small_rational(2, 2);
            c[k] = rng.chance(2, 3) ? Rational(abs(v)) : v;
        }
        NSClass cls = make_class(model, std::move(c));
        if (positivity(cls) == Positivity::Ample) return cls;
    }
    for (const auto& fallback :
         {make_class(model, std::vector<Rational>(model->basis_size(), Rational(1))),
          basis_class(model, 0, Rational(1))}) {
        NSClass scaled = Rational(rng.uniform(1, 3)) * fallback;
        if (positivity(scaled) == Positivity::Ample) return scaled;
    }
    throw std::logic_error("no ample class found in this model");
}

// A class in the open set U_eta: gamma + t * eta nondegenerate for every
// integer t. Only finitely many t matter, because far enough along the ray
// the classes are definite.
inline NSClass random_class_in_u_eta(Rng& rng, const ModelPtr& model, const NSClass& eta,
                                     int max_num = 3, int max_den = 3) {
    for (int attempt = 0; attempt < 256; ++attempt) {
        NSClass gamma = random_class(rng, model, max_num, max_den);
        HermitianForm hg = to_matrix(gamma), he = to_matrix(eta);
        bool clean = true;
        long long t = 0;
        for (t = -1;; --t) {
            Inertia in = inertia(hg + Rational(t) * he);
            if (in.zeros > 0) { clean = false; break; }
            if (in.negatives == static_cast<int>(model->dim())) break;
        }
        if (!clean) continue;
        for (t = 0;; ++t) {
            Inertia in = inertia(hg + Rational(t) * he);
            if (in.zeros > 0) { clean = false; break; }
            if (in.positives == static_cast<int>(model->dim())) break;
        }
        if (clean) return gamma;
    }
    throw std::logic_error("could not sample a class avoiding the degenerate locus");
}

}  // namespace abelreg

#endif
