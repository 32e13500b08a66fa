#ifndef ABELREG_REGULARITY_HPP
#define ABELREG_REGULARITY_HPP

#include <cstdlib>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include <abelreg/nsmodel.hpp>

namespace abelreg {

struct SearchOptions {
    long long scan_cap = 1'000'000;
};

class SearchLimitError : public std::domain_error {
public:
    explicit SearchLimitError(const std::string& what) : std::domain_error(what) {}
};

// Inertia of gamma + k*eta for integer k, memoized. Every twist of a class
// along the polarization ray lands here, and consecutive twist scans share
// almost all of their classes.
class RaySweep {
public:
    RaySweep(const NSClass& gamma, const NSClass& eta)
        : h_gamma_(to_matrix(gamma)), h_eta_(to_matrix(eta)) {
        require_same_model(gamma, eta);
    }

    const Inertia& at(long long k) {
        auto it = memo_.find(k);
        if (it != memo_.end()) return it->second;
        Inertia i = inertia(h_gamma_ + Rational(k) * h_eta_);
        return memo_.emplace(k, i).first->second;
    }

    int dim() const { return static_cast<int>(h_gamma_.dim()); }
    bool positive_definite_at(long long k) {
        const Inertia& i = at(k);
        return i.negatives == 0 && i.zeros == 0;
    }
    bool negative_definite_at(long long k) {
        const Inertia& i = at(k);
        return i.positives == 0 && i.zeros == 0;
    }
    bool nef_at(long long k) { return at(k).negatives == 0; }

private:
    HermitianForm h_gamma_;
    HermitianForm h_eta_;
    std::map<long long, Inertia> memo_;
};

struct PerIndexEntry {
    int i = 0;
    bool degenerate = false;
    int index = 0;  // meaningful only when !degenerate
};

struct RegularityPredicate {
    bool holds = false;
    std::vector<PerIndexEntry> report;
};

struct RegularityCertificate {
    long long value = 0;
    long long lower_witness = 0;  // gamma + (lower_witness - g) eta is negative definite
    long long upper_witness = 0;  // gamma + (upper_witness - g) eta is positive definite
    std::vector<PerIndexEntry> per_i;  // evaluated at value
};

namespace detail {

inline void require_ample(const NSClass& eta) {
    if (positivity(eta) != Positivity::Ample)
        throw std::domain_error("polarization class must be ample");
}

inline RegularityPredicate predicate_via_sweep(RaySweep& sweep, long long m) {
    const int g = sweep.dim();
    RegularityPredicate result;
    result.holds = true;
    result.report.reserve(g);
    for (int i = 1; i <= g; ++i) {
        const Inertia& in = sweep.at(m - i);
        PerIndexEntry entry;
        entry.i = i;
        if (in.zeros > 0) {
            entry.degenerate = true;
        } else {
            entry.index = in.negatives;
            if (entry.index == i) result.holds = false;
        }
        result.report.push_back(entry);
    }
    return result;
}

// Doubling probes m = g, 3g, 7g, ... (mirrored for the downward direction).
// Definiteness is certain for |m| large because eta is definite, so the cap
// only trips on a corrupted model.
constexpr long long kProbeCap = 1LL << 48;

}  // namespace detail

// The predicate behind the regularity value at twist m: for every
// i in {1,...,g} the class gamma + (m-i) eta is degenerate or has index
// different from i.
inline RegularityPredicate regularity_predicate(const NSClass& gamma, const NSClass& eta,
                                                long long m) {
    require_same_model(gamma, eta);
    detail::require_ample(eta);
    RaySweep sweep(gamma, eta);
    return detail::predicate_via_sweep(sweep, m);
}

// Minimal m where the predicate holds, with certified bracket:
//   - above the upper witness the shifted classes are positive definite, so
//     the predicate holds there and for everything larger;
//   - at and below the lower witness gamma + (m-g) eta stays negative
//     definite, so the predicate fails at i = g.
// The scan between them is linear because the predicate's truth set is not
// assumed upward closed.
inline RegularityCertificate regularity(const NSClass& gamma, const NSClass& eta,
                                        const SearchOptions& opts = {}) {
    require_same_model(gamma, eta);
    detail::require_ample(eta);
    const long long g = static_cast<long long>(gamma.model->dim());
    RaySweep sweep(gamma, eta);

    long long m_hi = g;
    while (!sweep.positive_definite_at(m_hi - g)) {
        m_hi = 2 * std::llabs(m_hi) + g;
        if (m_hi > detail::kProbeCap) throw SearchLimitError("search bound exceeded");
    }
    long long m_lo = -g;
    while (!sweep.negative_definite_at(m_lo - g)) {
        m_lo = -(2 * std::llabs(m_lo) + g);
        if (-m_lo > detail::kProbeCap) throw SearchLimitError("search bound exceeded");
    }

    for (long long m = m_lo + 1;; ++m) {
        if (m - m_lo > opts.scan_cap) throw SearchLimitError("search bound exceeded");
        RegularityPredicate pred = detail::predicate_via_sweep(sweep, m);
        if (pred.holds) {
            RegularityCertificate cert;
            cert.value = m;
            cert.lower_witness = m_lo;
            cert.upper_witness = m_hi;
            cert.per_i = std::move(pred.report);
            return cert;
        }
    }
}

inline SearchOptions search_options_from_env() {
    SearchOptions opts;
    if (const char* cap = std::getenv("ABELREG_SCAN_CAP")) {
        char* end = nullptr;
        long long v = std::strtoll(cap, &end, 10);
        if (end == cap || *end != '\0' || v <= 0)
            throw std::domain_error("invalid ABELREG_SCAN_CAP value");
        opts.scan_cap = v;
    }
    return opts;
}

}  // namespace abelreg

#endif
