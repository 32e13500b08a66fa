#ifndef ABELREG_CATALOGS_HPP
#define ABELREG_CATALOGS_HPP

#include <string>
#include <utility>
#include <vector>

#include <abelreg/bundles.hpp>

namespace abelreg {

// Verlinde bundle data on the Jacobian of a genus-g curve: rank-level pair
// (r, k) with odd gcd, polarization s * Theta with s >= 2.
struct VerlindeSpec {
    long long genus = 0;
    Int rank;         // r
    Int level;        // k
    Int theta_power;  // s
};

namespace detail {

inline void validate(const VerlindeSpec& spec) {
    if (spec.genus < 1) throw std::domain_error("genus must be positive");
    if (spec.rank < 1 || spec.level < 1)
        throw std::domain_error("rank and level must be positive");
    if (gcd(spec.rank, spec.level) % 2 == 0)
        throw std::domain_error("gcd(rank, level) must be odd");
    if (spec.theta_power < 2) throw std::domain_error("theta power must be at least 2");
}

}  // namespace detail

// Closed form ceil(g - k/(r s)) in exact arithmetic.
inline long long verlinde_creg(const VerlindeSpec& spec) {
    detail::validate(spec);
    Rational value = Rational(spec.genus) - make_rational(spec.level, spec.rank * spec.theta_power);
    return static_cast<long long>(rational_ceil(value));
}

struct VerlindeBounds {
    long long lower = 0;
    long long upper = 0;
    bool exact = false;  // the two agree whenever k < r s
};

inline VerlindeBounds verlinde_reg_bounds(const VerlindeSpec& spec) {
    detail::validate(spec);
    VerlindeBounds b;
    b.lower = verlinde_creg(spec);
    b.upper = spec.genus;
    if (spec.level < spec.rank * spec.theta_power) {
        b.exact = true;
        if (b.lower != b.upper)
            throw std::logic_error("verlinde bounds disagree in the exact range");
    }
    return b;
}

struct VerlindeModel {
    ModelPtr model;           // Picard rank 1, Theta as the identity form
    BundleDescriptor bundle;  // rank a^g, c1 = a^(g-1) b Theta, gcd(a, b) = 1
    NSClass eta;              // s Theta
    Int a;
    Int b;
    Int h;                    // gcd(r, k)
};

// The simple semihomogeneous reduction of the Verlinde bundle: the twist by
// torsion classes does not change continuous regularity, so (r, k) reduces
// to the coprime pair (a, b) = (r, k)/gcd.
inline VerlindeModel verlinde_descriptor(const VerlindeSpec& spec) {
    detail::validate(spec);
    VerlindeModel vm;
    vm.h = gcd(spec.rank, spec.level);
    vm.a = spec.rank / vm.h;
    vm.b = spec.level / vm.h;
    vm.model = AbelianModel::make(
        static_cast<std::size_t>(spec.genus),
        {{"Theta", HermitianForm::identity(static_cast<std::size_t>(spec.genus))}});
    Int rank = 1, c1 = vm.b;
    for (long long i = 0; i < spec.genus; ++i) rank *= vm.a;
    for (long long i = 0; i + 1 < spec.genus; ++i) c1 *= vm.a;
    vm.bundle = make_bundle(rank, make_class(vm.model, {Rational(c1)}));
    vm.eta = make_class(vm.model, {Rational(spec.theta_power)});
    return vm;
}

// Box products across declared non-isogenous factors. Each factor brings its
// own model, bundle and ample polarization; the product embeds every factor
// generator as a diagonal block.
struct ProductFactor {
    ModelPtr model;
    BundleDescriptor bundle;
    NSClass polarization;
};

struct ProductSpec {
    std::vector<ProductFactor> factors;
};

struct ProductModel {
    ModelPtr model;
    BundleDescriptor bundle;
    NSClass eta;
};

inline ProductModel product_model(const ProductSpec& spec) {
    if (spec.factors.size() < 2)
        throw std::domain_error("product needs at least two factors");
    std::size_t total_dim = 0;
    Int total_rank = 1;
    for (const auto& f : spec.factors) {
        if (f.bundle.c1.model != f.model || f.polarization.model != f.model)
            throw std::domain_error("factor data does not match factor model");
        if (positivity(f.polarization) != Positivity::Ample)
            throw std::domain_error("factor polarization must be ample");
        total_dim += f.model->dim();
        total_rank *= f.bundle.rank;
    }

    std::vector<AbelianModel::Generator> gens;
    std::size_t offset = 0;
    for (std::size_t fi = 0; fi < spec.factors.size(); ++fi) {
        const auto& fm = *spec.factors[fi].model;
        for (std::size_t k = 0; k < fm.basis_size(); ++k) {
            Matrix<GaussianRational> block(total_dim, total_dim);
            const auto& src = fm.generator(k).entries();
            for (std::size_t i = 0; i < fm.dim(); ++i)
                for (std::size_t j = 0; j < fm.dim(); ++j)
                    block(offset + i, offset + j) = src(i, j);
            gens.emplace_back("f" + std::to_string(fi + 1) + "." + fm.name(k),
                              HermitianForm(std::move(block)));
        }
        offset += fm.dim();
    }

    ProductModel pm;
    pm.model = AbelianModel::make(total_dim, std::move(gens));
    std::vector<Rational> c1_coeffs, eta_coeffs;
    for (const auto& f : spec.factors) {
        Rational cofactor_rank = Rational(total_rank) / Rational(f.bundle.rank);
        for (std::size_t k = 0; k < f.model->basis_size(); ++k) {
            c1_coeffs.push_back(cofactor_rank * f.bundle.c1.coeffs[k]);
            eta_coeffs.push_back(f.polarization.coeffs[k]);
        }
    }
    pm.bundle = make_bundle(total_rank, make_class(pm.model, std::move(c1_coeffs)));
    pm.eta = make_class(pm.model, std::move(eta_coeffs));
    return pm;
}

// Product of two non-isogenous elliptic curves: continuous regularity from
// the factor regularities.
inline long long elliptic_product_creg(long long m1, long long m2) {
    return std::max(std::min(m1, m2) + 1, std::max(m1, m2));
}

// Continuous regularity of a semihomogeneous bundle of the given slope on an
// elliptic curve, polarized in the given degree: ceil(1 - slope/degree).
inline long long elliptic_factor_creg(const Rational& slope, const Int& degree) {
    if (degree < 1) throw std::domain_error("polarization degree must be positive");
    return static_cast<long long>(rational_ceil(Rational(1) - slope / Rational(degree)));
}

}  // namespace abelreg

#endif
