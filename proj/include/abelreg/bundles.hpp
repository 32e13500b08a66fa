#ifndef ABELREG_BUNDLES_HPP
#define ABELREG_BUNDLES_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <abelreg/regularity.hpp>

namespace abelreg {

// A semihomogeneous bundle up to the data its continuous regularity depends
// on: rank and first Chern class. Every rational class with a denominator is
// realized by some such bundle, so rational c1 is allowed.
struct BundleDescriptor {
    Int rank;
    NSClass c1;
    std::optional<std::string> label;
};

inline BundleDescriptor make_bundle(Int rank, NSClass c1,
                                    std::optional<std::string> label = std::nullopt) {
    if (rank < 1) throw std::domain_error("bundle rank must be positive");
    return {std::move(rank), std::move(c1), std::move(label)};
}

inline NSClass slope_class(const BundleDescriptor& e) {
    return make_rational(1, e.rank) * e.c1;
}

// Continuous CM-regularity with respect to an ample polarization class,
// computed from the slope class alone.
inline long long creg(const BundleDescriptor& e, const NSClass& eta,
                      const SearchOptions& opts = {}) {
    return regularity(slope_class(e), eta, opts).value;
}

inline RegularityCertificate creg_certificate(const BundleDescriptor& e, const NSClass& eta,
                                              const SearchOptions& opts = {}) {
    return regularity(slope_class(e), eta, opts);
}

// Fourier-Mukai index of the bundle when its slope class is nondegenerate.
// A degenerate slope class leaves the index undetermined by this data, so no
// value is reported.
inline std::optional<int> wit_index(const BundleDescriptor& e) {
    NSClass s = slope_class(e);
    if (!is_nondegenerate(s)) return std::nullopt;
    return index(s);
}

// IT of index 0, equivalently ample, equivalently ample determinant.
inline bool is_it0_ample(const BundleDescriptor& e) {
    return positivity(slope_class(e)) == Positivity::Ample;
}

// GV-sheaf, equivalently nef, equivalently nef determinant.
inline bool is_gv_nef(const BundleDescriptor& e) {
    return positivity(slope_class(e)) != Positivity::Other;
}

// Smallest m with E(m-g) a GV-sheaf: slope + (m-g) eta positive
// semidefinite. Adding a positive definite form preserves positive
// semidefiniteness, so nefness is upward closed along the ray and binary
// search between doubling witnesses is sound.
inline long long gv_threshold(const BundleDescriptor& e, const NSClass& eta,
                              const SearchOptions& opts = {}) {
    (void)opts;
    detail::require_ample(eta);
    NSClass s = slope_class(e);
    require_same_model(s, eta);
    const long long g = static_cast<long long>(s.model->dim());
    RaySweep sweep(s, eta);

    long long hi = g;
    while (!sweep.nef_at(hi - g)) {
        hi = 2 * std::llabs(hi) + g;
        if (hi > detail::kProbeCap) throw SearchLimitError("search bound exceeded");
    }
    long long lo = -g;
    while (sweep.nef_at(lo - g)) {
        lo = -(2 * std::llabs(lo) + g);
        if (-lo > detail::kProbeCap) throw SearchLimitError("search bound exceeded");
    }
    while (hi - lo > 1) {
        long long mid = lo + (hi - lo) / 2;
        (sweep.nef_at(mid - g) ? hi : lo) = mid;
    }
    return hi;
}

// c1 in Q * eta, decided by exact linear dependence of coefficient vectors.
inline bool is_proportional(const NSClass& c1, const NSClass& eta) {
    require_same_model(c1, eta);
    Matrix<Rational> m(2, c1.coeffs.size());
    for (std::size_t k = 0; k < c1.coeffs.size(); ++k) {
        m(0, k) = c1.coeffs[k];
        m(1, k) = eta.coeffs[k];
    }
    return rank(std::move(m)) <= 1;
}

// The numerical bounds and sharpness cases for one descriptor. Violations of
// the proved inequalities are collected and reported, never silently
// swallowed.
struct BoundsReport {
    long long creg = 0;
    long long gv_threshold = 0;
    bool threshold_bound_holds = false;       // creg <= gv_threshold, always
    bool proportional = false;                // c1 in Q * eta
    bool threshold_equality_expected = false; // proportional => creg == gv_threshold
    bool gv = false;                          // nef slope
    bool dimension_bound_holds = true;        // gv => creg <= g
    bool dual_twist_ample = false;            // eta - slope positive definite
    bool dimension_equality_expected = false; // gv and dual_twist_ample => creg == g
    std::vector<std::string> violations;
};

inline BoundsReport check_bounds(const BundleDescriptor& e, const NSClass& eta,
                                 const SearchOptions& opts = {}) {
    detail::require_ample(eta);
    const long long g = static_cast<long long>(eta.model->dim());
    BoundsReport r;
    r.creg = creg(e, eta, opts);
    r.gv_threshold = abelreg::gv_threshold(e, eta, opts);
    r.proportional = is_proportional(e.c1, eta);
    r.gv = is_gv_nef(e);
    NSClass dual_twist_slope = eta - slope_class(e);
    r.dual_twist_ample = positivity(dual_twist_slope) == Positivity::Ample;

    r.threshold_bound_holds = r.creg <= r.gv_threshold;
    if (!r.threshold_bound_holds)
        r.violations.push_back("creg exceeds gv threshold");
    r.threshold_equality_expected = r.proportional;
    if (r.proportional && r.creg != r.gv_threshold)
        r.violations.push_back("proportional c1 but creg != gv threshold");
    r.dimension_bound_holds = !r.gv || r.creg <= g;
    if (!r.dimension_bound_holds)
        r.violations.push_back("GV slope but creg exceeds dimension");
    // Equality needs the GV hypothesis: the dual-twist condition alone only
    // forces creg >= g.
    r.dimension_equality_expected = r.gv && r.dual_twist_ample;
    if (r.dimension_equality_expected && r.creg != g)
        r.violations.push_back("GV slope with ample dual twist but creg != dimension");
    if (r.dual_twist_ample && r.creg < g)
        r.violations.push_back("ample dual twist but creg below dimension");
    return r;
}

}  // namespace abelreg

#endif
