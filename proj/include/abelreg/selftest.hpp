#ifndef ABELREG_SELFTEST_HPP
#define ABELREG_SELFTEST_HPP

#include <algorithm>
#include <cstdint>
#include <functional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <abelreg/io.hpp>
#include <abelreg/modelzoo.hpp>
#include <abelreg/oracle.hpp>

namespace abelreg {

// Seeded property suites, one group per library component. The CLI `validate`
// subcommand runs them and reports one line per property; the heavyweight
// grids live in the acceptance suite instead.

struct PropertyResult {
    std::string suite;
    std::string name;
    bool pass = true;
    std::string detail;
};

namespace selftest {

class Recorder {
public:
    explicit Recorder(std::string suite) : suite_(std::move(suite)) {}

    void check(const std::string& name, const std::function<void(std::ostream&)>& body) {
        PropertyResult r;
        r.suite = suite_;
        r.name = name;
        std::ostringstream detail;
        try {
            body(detail);
            r.detail = detail.str();
        } catch (const std::exception& e) {
            r.pass = false;
            r.detail = e.what();
        }
        results_.push_back(std::move(r));
    }

    std::vector<PropertyResult> take() { return std::move(results_); }

private:
    std::string suite_;
    std::vector<PropertyResult> results_;
};

inline void expect(bool ok, const std::string& what) {
    if (!ok) throw std::runtime_error(what);
}

inline HermitianForm random_hermitian(Rng& rng, std::size_t n, bool complex_entries) {
    Matrix<GaussianRational> m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        m(i, i) = GaussianRational(rng.small_rational(4, 2));
        for (std::size_t j = i + 1; j < n; ++j) {
            GaussianRational z(rng.small_rational(3, 2),
                               complex_entries ? rng.small_rational(3, 2) : Rational(0));
            m(i, j) = z;
            m(j, i) = z.conj();
        }
    }
    return HermitianForm(std::move(m));
}

// Product of elementary row/column congruence moves, so invertibility is by
// construction.
inline Matrix<GaussianRational> random_invertible(Rng& rng, std::size_t n, bool complex_entries) {
    auto p = Matrix<GaussianRational>::identity(n);
    for (int moves = 0; moves < 2 * static_cast<int>(n); ++moves) {
        std::size_t i = static_cast<std::size_t>(rng.uniform(0, static_cast<long long>(n) - 1));
        std::size_t j = static_cast<std::size_t>(rng.uniform(0, static_cast<long long>(n) - 1));
        if (i == j) {
            Matrix<GaussianRational> d = Matrix<GaussianRational>::identity(n);
            d(i, i) = GaussianRational(make_rational(rng.chance(1, 2) ? 1 : -1,
                                                     rng.uniform(1, 2)));
            p = p * d;
        } else {
            Matrix<GaussianRational> e = Matrix<GaussianRational>::identity(n);
            e(i, j) = GaussianRational(rng.small_rational(2, 2),
                                       complex_entries ? rng.small_rational(1, 2) : Rational(0));
            p = p * e;
        }
    }
    return p;
}

inline std::vector<PropertyResult> exactlinalg_suite(std::uint64_t seed) {
    Recorder rec("exactlinalg");

    rec.check("inertia_counts_sum_to_dim", [&](std::ostream&) {
        Rng rng(seed);
        for (int it = 0; it < 200; ++it) {
            std::size_t n = static_cast<std::size_t>(rng.uniform(1, 6));
            auto h = random_hermitian(rng, n, rng.chance(1, 3));
            expect(inertia(h).dim() == static_cast<int>(n), "counts do not sum to dim");
        }
    });

    rec.check("sylvester_congruence_invariance", [&](std::ostream&) {
        Rng rng(seed + 1);
        for (int it = 0; it < 200; ++it) {
            std::size_t n = static_cast<std::size_t>(rng.uniform(1, 5));
            bool cx = rng.chance(1, 3);
            auto h = random_hermitian(rng, n, cx);
            auto p = random_invertible(rng, n, cx);
            HermitianForm congruent(conjugate_transpose(p) * h.entries() * p);
            expect(inertia(congruent) == inertia(h), "inertia changed under congruence");
        }
    });

    rec.check("realify_doubles_every_count", [&](std::ostream&) {
        Rng rng(seed + 2);
        for (int it = 0; it < 100; ++it) {
            std::size_t n = static_cast<std::size_t>(rng.uniform(1, 4));
            auto h = random_hermitian(rng, n, true);
            Inertia one = inertia(h);
            Inertia two = inertia(HermitianForm::from_real(realify(h)));
            expect(two.negatives == 2 * one.negatives && two.zeros == 2 * one.zeros &&
                       two.positives == 2 * one.positives,
                   "realified counts are not doubled");
        }
    });

    rec.check("det_sign_matches_inertia", [&](std::ostream&) {
        Rng rng(seed + 3);
        for (int it = 0; it < 200; ++it) {
            std::size_t n = static_cast<std::size_t>(rng.uniform(1, 5));
            auto h = random_hermitian(rng, n, rng.chance(1, 3));
            Rational d = det(h);
            Inertia in = inertia(h);
            if (in.zeros > 0) {
                expect(d.is_zero(), "singular form with nonzero determinant");
            } else {
                int expected = in.negatives % 2 == 0 ? 1 : -1;
                expect(d.sign() == expected, "determinant sign disagrees with inertia");
            }
        }
    });

    rec.check("charpoly_multiplicative_on_blocks", [&](std::ostream&) {
        Rng rng(seed + 4);
        for (int it = 0; it < 50; ++it) {
            std::size_t n1 = static_cast<std::size_t>(rng.uniform(1, 3));
            std::size_t n2 = static_cast<std::size_t>(rng.uniform(1, 3));
            Matrix<Rational> a(n1, n1), b(n2, n2), block(n1 + n2, n1 + n2);
            for (std::size_t i = 0; i < n1; ++i)
                for (std::size_t j = 0; j < n1; ++j)
                    block(i, j) = a(i, j) = rng.small_rational(3, 2);
            for (std::size_t i = 0; i < n2; ++i)
                for (std::size_t j = 0; j < n2; ++j)
                    block(n1 + i, n1 + j) = b(i, j) = rng.small_rational(3, 2);
            expect(char_poly(block) == char_poly(a) * char_poly(b),
                   "block char poly is not the product");
        }
    });

    rec.check("inertia_agrees_with_sturm_isolation", [&](std::ostream&) {
        Rng rng(seed + 5);
        for (int it = 0; it < 60; ++it) {
            std::size_t n = static_cast<std::size_t>(rng.uniform(1, 5));
            auto h = random_hermitian(rng, n, false);
            Matrix<Rational> s(n, n);
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j) s(i, j) = h.entries()(i, j).re;
            RationalPolynomial p = char_poly(s);
            // Count eigenvalue signs by bracketing the roots on each side of
            // zero; roots at zero are the trailing zero coefficients.
            Rational bound(1);
            for (const auto& c : p.coeffs()) bound = std::max(bound, Rational(abs(c)));
            bound = bound + 1;
            Inertia by_roots;
            std::size_t low = 0;
            while (low < p.coeffs().size() && p.coeffs()[low].is_zero()) ++low;
            by_roots.zeros = static_cast<int>(low);
            for (const auto& r : isolate_real_roots(p, -bound, Rational(0)))
                by_roots.negatives += r.multiplicity;
            for (const auto& r : isolate_real_roots(p, Rational(0), bound))
                by_roots.positives += r.multiplicity;
            expect(by_roots == inertia(h), "Descartes and Sturm counts disagree");
        }
    });

    rec.check("sturm_isolates_known_rational_roots", [&](std::ostream&) {
        Rng rng(seed + 6);
        for (int it = 0; it < 40; ++it) {
            // Product of linear factors with known rational roots.
            int count = static_cast<int>(rng.uniform(1, 4));
            std::vector<Rational> expected;
            RationalPolynomial p = RationalPolynomial::constant(Rational(1));
            for (int k = 0; k < count; ++k) {
                Rational root = rng.small_rational(4, 3);
                expected.push_back(root);
                p = p * RationalPolynomial(std::vector<Rational>{-root, Rational(1)});
            }
            std::sort(expected.begin(), expected.end());
            auto distinct = expected;
            distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
            auto roots = isolate_real_roots(p, Rational(-6), Rational(6));
            expect(roots.size() == distinct.size(), "wrong number of isolated roots");
            for (std::size_t k = 0; k < roots.size(); ++k) {
                const auto& r = roots[k];
                expect(r.exact() ? r.lo == distinct[k]
                                 : r.lo < distinct[k] && distinct[k] < r.hi,
                       "isolated interval misses its root");
                int mult = static_cast<int>(std::count(expected.begin(), expected.end(),
                                                       distinct[k]));
                expect(r.multiplicity == mult, "wrong multiplicity");
            }
        }
    });

    return rec.take();
}

inline std::vector<ModelPtr> zoo_models(std::size_t max_dim) {
    std::vector<ModelPtr> models;
    for (std::size_t g = 1; g <= max_dim; ++g) {
        models.push_back(diag_model(g));
        if (g >= 2) models.push_back(elliptic_product_model(g));
    }
    if (max_dim >= 2) models.push_back(cm_surface_model());
    return models;
}

inline std::vector<PropertyResult> nsmodel_suite(std::uint64_t seed) {
    Recorder rec("nsmodel");
    auto models = zoo_models(3);

    rec.check("index_negation_symmetry", [&](std::ostream&) {
        Rng rng(seed + 10);
        for (int it = 0; it < 150; ++it) {
            const auto& model = models[it % models.size()];
            NSClass c = random_class(rng, model);
            if (!is_nondegenerate(c)) continue;
            expect(index(c) == static_cast<int>(model->dim()) - index(-c),
                   "negation symmetry fails");
        }
    });

    rec.check("index_scaling_invariance", [&](std::ostream&) {
        Rng rng(seed + 11);
        for (int it = 0; it < 150; ++it) {
            const auto& model = models[it % models.size()];
            NSClass c = random_class(rng, model);
            if (!is_nondegenerate(c)) continue;
            Rational lambda = make_rational(rng.uniform(1, 5), rng.uniform(1, 5));
            expect(index(lambda * c) == index(c), "index changed under positive scaling");
        }
    });

    rec.check("index_monotone_along_ample_ray", [&](std::ostream&) {
        Rng rng(seed + 12);
        for (int it = 0; it < 100; ++it) {
            const auto& model = models[it % models.size()];
            NSClass c = random_class(rng, model);
            NSClass eta = random_ample_class(rng, model);
            HermitianForm hc = to_matrix(c), he = to_matrix(eta);
            int prev_neg = static_cast<int>(model->dim()) + 1;
            int prev_pos = -1;
            Rational t(-4);
            for (int step = 0; step < 6; ++step) {
                t += make_rational(rng.uniform(1, 3), rng.uniform(1, 2));
                Inertia in = inertia(hc + t * he);
                expect(in.negatives <= prev_neg, "negative count increased along ample ray");
                expect(in.positives >= prev_pos, "positive count decreased along ample ray");
                prev_neg = in.negatives;
                prev_pos = in.positives;
            }
        }
    });

    rec.check("scan_segment_matches_pointwise_index", [&](std::ostream&) {
        Rng rng(seed + 13);
        int scans = 0;
        for (int it = 0; it < 200 && scans < 40; ++it) {
            const auto& model = models[it % models.size()];
            NSClass a = random_class(rng, model);
            NSClass b = random_class(rng, model);
            ChamberReport report;
            try {
                report = scan_segment(a, b);
            } catch (const std::domain_error&) {
                continue;  // segment inside the degenerate locus; resample
            }
            ++scans;
            for (const auto& ch : report.intervals) {
                expect(ch.t_lo <= ch.sample && ch.sample <= ch.t_hi,
                       "sample outside its chamber bracket");
                // Three interior points per chamber agree with the reported index.
                Rational span = ch.t_hi - ch.t_lo;
                std::vector<Rational> probes = {ch.sample};
                if (!span.is_zero()) {
                    probes.push_back(ch.t_lo + span / 3);
                    probes.push_back(ch.t_lo + 2 * span / 3);
                }
                for (const auto& t : probes) {
                    if (t <= ch.t_lo || t >= ch.t_hi) continue;
                    NSClass at = (Rational(1) - t) * a + t * b;
                    if (!is_nondegenerate(at)) continue;
                    expect(index(at) == ch.index, "chamber index is not constant");
                }
            }
        }
        expect(scans > 0, "no scannable segments sampled");
    });

    rec.check("ample_is_nondegenerate_of_index_zero", [&](std::ostream&) {
        Rng rng(seed + 14);
        for (int it = 0; it < 100; ++it) {
            const auto& model = models[it % models.size()];
            NSClass eta = random_ample_class(rng, model);
            expect(is_nondegenerate(eta), "ample class is degenerate");
            expect(index(eta) == 0, "ample class has nonzero index");
        }
    });

    return rec.take();
}

inline std::vector<PropertyResult> regularity_suite(std::uint64_t seed) {
    Recorder rec("regularity");
    auto models = zoo_models(3);

    rec.check("predicate_holds_at_value_and_witnesses", [&](std::ostream&) {
        Rng rng(seed + 20);
        for (int it = 0; it < 40; ++it) {
            const auto& model = models[it % models.size()];
            NSClass gamma = random_class(rng, model);
            NSClass eta = random_ample_class(rng, model);
            auto cert = regularity(gamma, eta);
            expect(cert.lower_witness < cert.value && cert.value <= cert.upper_witness,
                   "certificate bracket violated");
            expect(regularity_predicate(gamma, eta, cert.value).holds,
                   "predicate fails at the reported value");
            expect(regularity_predicate(gamma, eta, cert.upper_witness).holds,
                   "predicate fails at the upper witness");
            for (int extra = 0; extra < 5; ++extra) {
                long long m = cert.upper_witness + rng.uniform(1, 40);
                expect(regularity_predicate(gamma, eta, m).holds,
                       "predicate fails above the upper witness");
            }
            // Witness definiteness.
            long long g = static_cast<long long>(model->dim());
            expect(positivity(gamma + Rational(cert.upper_witness - g) * eta) ==
                       Positivity::Ample,
                   "upper witness class is not positive definite");
            NSClass low = gamma + Rational(cert.lower_witness - g) * eta;
            expect(positivity(-low) == Positivity::Ample,
                   "lower witness class is not negative definite");
        }
    });

    rec.check("minimality_has_an_index_jump_below", [&](std::ostream&) {
        Rng rng(seed + 21);
        for (int it = 0; it < 40; ++it) {
            const auto& model = models[it % models.size()];
            NSClass gamma = random_class(rng, model);
            NSClass eta = random_ample_class(rng, model);
            auto cert = regularity(gamma, eta);
            auto below = regularity_predicate(gamma, eta, cert.value - 1);
            expect(!below.holds, "predicate also holds below the minimum");
            bool jump = false;
            for (const auto& e : below.report)
                if (!e.degenerate && e.index == e.i) jump = true;
            expect(jump, "no index jump at value - 1");
        }
    });

    rec.check("invariant_under_basis_congruence", [&](std::ostream&) {
        Rng rng(seed + 22);
        for (int it = 0; it < 25; ++it) {
            const auto& model = models[it % models.size()];
            NSClass gamma = random_class(rng, model);
            NSClass eta = random_ample_class(rng, model);
            auto p = random_invertible(rng, model->dim(), true);
            std::vector<AbelianModel::Generator> gens;
            for (std::size_t k = 0; k < model->basis_size(); ++k)
                gens.emplace_back(model->name(k),
                                  HermitianForm(conjugate_transpose(p) *
                                                model->generator(k).entries() * p));
            auto congruent = AbelianModel::make(model->dim(), std::move(gens));
            NSClass gamma2 = make_class(congruent, gamma.coeffs);
            NSClass eta2 = make_class(congruent, eta.coeffs);
            expect(regularity(gamma, eta).value == regularity(gamma2, eta2).value,
                   "regularity changed under basis congruence");
        }
    });

    rec.check("constant_on_certified_chambers", [&](std::ostream& detail) {
        Rng rng(seed + 23);
        int tested = 0;
        for (int it = 0; it < 200 && tested < 15; ++it) {
            const auto& model = models[it % models.size()];
            NSClass eta = random_ample_class(rng, model);
            NSClass gamma;
            try {
                gamma = random_class_in_u_eta(rng, model, eta);
            } catch (const std::logic_error&) {
                continue;
            }
            auto cert = regularity(gamma, eta);
            // Perturb and certify chamber equivalence of every shifted segment.
            NSClass direction = random_class(rng, model, 1, 2);
            bool certified = false;
            Rational step = make_rational(1, 64);
            NSClass gamma2 = gamma;
            const long long g = static_cast<long long>(model->dim());
            for (int shrink = 0; shrink < 6 && !certified; ++shrink, step /= 16) {
                gamma2 = gamma + step * direction;
                certified = true;
                for (long long k = cert.lower_witness - g;
                     k <= cert.upper_witness - 1 && certified; ++k) {
                    NSClass from = gamma + Rational(k) * eta;
                    NSClass to = gamma2 + Rational(k) * eta;
                    try {
                        if (!scan_segment(from, to).critical_params.empty())
                            certified = false;
                    } catch (const std::domain_error&) {
                        certified = false;
                    }
                }
            }
            if (!certified) continue;
            ++tested;
            expect(regularity(gamma2, eta).value == cert.value,
                   "value changed inside a certified chamber");
        }
        detail << "perturbations tested: " << tested;
        expect(tested > 0, "no chamber-equivalent perturbation certified");
    });

    return rec.take();
}

inline std::vector<PropertyResult> bundles_suite(std::uint64_t seed) {
    Recorder rec("bundles");
    auto models = zoo_models(3);

    rec.check("creg_bounded_by_gv_threshold", [&](std::ostream&) {
        Rng rng(seed + 30);
        for (int it = 0; it < 60; ++it) {
            const auto& model = models[it % models.size()];
            auto e = make_bundle(Int(rng.uniform(1, 4)), random_class(rng, model));
            NSClass eta = random_ample_class(rng, model);
            expect(creg(e, eta) <= gv_threshold(e, eta), "creg exceeds the GV threshold");
        }
    });

    rec.check("proportional_c1_attains_gv_threshold", [&](std::ostream&) {
        Rng rng(seed + 31);
        for (int it = 0; it < 60; ++it) {
            const auto& model = models[it % models.size()];
            NSClass eta = random_ample_class(rng, model);
            Int r(rng.uniform(1, 4));
            Rational q = rng.small_rational(5, 3);
            auto e = make_bundle(r, (q * Rational(r)) * eta);
            expect(is_proportional(e.c1, eta), "constructed c1 not detected proportional");
            expect(creg(e, eta) == gv_threshold(e, eta),
                   "proportional c1 misses the threshold equality");
        }
    });

    rec.check("gv_slope_respects_dimension_cap", [&](std::ostream&) {
        Rng rng(seed + 32);
        for (int it = 0; it < 50; ++it) {
            const auto& model = models[it % models.size()];
            NSClass eta = random_ample_class(rng, model);
            NSClass base = rng.chance(1, 4) ? zero_class(model)
                                            : make_rational(1, rng.uniform(2, 4)) *
                                                  random_ample_class(rng, model);
            auto e = make_bundle(Int(1), base);
            if (!is_gv_nef(e)) continue;
            long long c = creg(e, eta);
            expect(c <= static_cast<long long>(model->dim()), "GV slope exceeds dimension cap");
            if (positivity(eta - slope_class(e)) == Positivity::Ample)
                expect(c == static_cast<long long>(model->dim()),
                       "ample dual twist without equality");
        }
    });

    rec.check("creg_depends_only_on_slope", [&](std::ostream&) {
        Rng rng(seed + 33);
        for (int it = 0; it < 40; ++it) {
            const auto& model = models[it % models.size()];
            NSClass eta = random_ample_class(rng, model);
            Int r(rng.uniform(1, 3));
            auto e = make_bundle(r, random_class(rng, model));
            Int k(rng.uniform(2, 4));
            auto scaled = make_bundle(k * r, Rational(k) * e.c1);
            expect(creg(e, eta) == creg(scaled, eta), "creg not rank-invariant");
        }
    });

    rec.check("twisting_shifts_creg_by_minus_one", [&](std::ostream&) {
        Rng rng(seed + 34);
        for (int it = 0; it < 40; ++it) {
            const auto& model = models[it % models.size()];
            NSClass eta = random_ample_class(rng, model);
            Int r(rng.uniform(1, 3));
            auto e = make_bundle(r, random_class(rng, model));
            auto twisted = make_bundle(r, e.c1 + Rational(r) * eta);
            expect(creg(twisted, eta) == creg(e, eta) - 1, "twist recurrence fails");
        }
    });

    rec.check("check_bounds_reports_no_violations", [&](std::ostream&) {
        Rng rng(seed + 35);
        for (int it = 0; it < 40; ++it) {
            const auto& model = models[it % models.size()];
            NSClass eta = random_ample_class(rng, model);
            auto e = make_bundle(Int(rng.uniform(1, 4)), random_class(rng, model));
            auto report = check_bounds(e, eta);
            expect(report.violations.empty(), "bounds report has violations");
        }
    });

    return rec.take();
}

inline std::vector<PropertyResult> catalogs_suite(std::uint64_t seed) {
    Recorder rec("catalogs");

    rec.check("verlinde_closed_form_matches_engine", [&](std::ostream& detail) {
        int cases = 0;
        for (long long g = 1; g <= 3; ++g)
            for (long long r = 1; r <= 4; ++r)
                for (long long k = 1; k <= 4; ++k) {
                    if (gcd(Int(r), Int(k)) % 2 == 0) continue;
                    VerlindeSpec spec{g, Int(r), Int(k), Int(2)};
                    auto vm = verlinde_descriptor(spec);
                    expect(verlinde_creg(spec) == creg(vm.bundle, vm.eta),
                           "closed form disagrees with the engine");
                    ++cases;
                }
        detail << cases << " cases";
    });

    rec.check("verlinde_bounds_are_ordered_and_exact_below_rs", [&](std::ostream&) {
        for (long long g = 1; g <= 4; ++g)
            for (long long r = 1; r <= 4; ++r)
                for (long long k = 1; k <= 6; ++k) {
                    if (gcd(Int(r), Int(k)) % 2 == 0) continue;
                    VerlindeSpec spec{g, Int(r), Int(k), Int(2)};
                    auto b = verlinde_reg_bounds(spec);
                    expect(b.lower <= b.upper, "bounds out of order");
                    expect(b.exact == (k < 2 * r), "wrong exactness flag");
                    if (b.exact) expect(b.lower == g, "exact case is not g");
                }
    });

    rec.check("product_creg_matches_elliptic_formula", [&](std::ostream& detail) {
        std::vector<Rational> slopes = {Rational(-3), make_rational(-3, 2), Rational(-1),
                                        Rational(0), make_rational(1, 2), Rational(1),
                                        Rational(3)};
        std::vector<long long> degrees = {1, 2};
        int mismatches_same_degree = 0, mismatches_mixed = 0, cases = 0;
        for (const auto& s1 : slopes)
            for (const auto& s2 : slopes)
                for (long long d1 : degrees)
                    for (long long d2 : degrees) {
                        auto factor = [&](const Rational& s, long long d) {
                            Int rank(denominator(s));
                            auto model = principal_model(1);
                            auto bundle =
                                make_bundle(rank, basis_class(model, 0, Rational(rank) * s));
                            return ProductFactor{model, bundle,
                                                 basis_class(model, 0, Rational(d))};
                        };
                        ProductSpec spec{{factor(s1, d1), factor(s2, d2)}};
                        auto pm = product_model(spec);
                        long long engine = creg(pm.bundle, pm.eta);
                        long long formula = elliptic_product_creg(
                            elliptic_factor_creg(s1, Int(d1)),
                            elliptic_factor_creg(s2, Int(d2)));
                        ++cases;
                        if (engine != formula) {
                            (d1 == d2 ? mismatches_same_degree : mismatches_mixed) += 1;
                        }
                    }
        detail << cases << " cases, mixed-degree discrepancies recorded: "
               << mismatches_mixed;
        // The formula is proved for equal degrees; mixed degrees are recorded,
        // not asserted.
        expect(mismatches_same_degree == 0, "formula fails for equal degrees");
    });

    rec.check("product_slope_is_blockwise_factor_slope", [&](std::ostream&) {
        Rng rng(seed + 40);
        for (int it = 0; it < 20; ++it) {
            std::size_t nfactors = static_cast<std::size_t>(rng.uniform(2, 3));
            ProductSpec spec;
            std::vector<Rational> expected_slope;
            for (std::size_t f = 0; f < nfactors; ++f) {
                auto model = principal_model(1);
                Int rank(rng.uniform(1, 4));
                Rational c1(rng.uniform(-4, 4));
                spec.factors.push_back(
                    {model, make_bundle(rank, basis_class(model, 0, c1)),
                     basis_class(model, 0, Rational(rng.uniform(1, 3)))});
                expected_slope.push_back(c1 / Rational(rank));
            }
            auto pm = product_model(spec);
            NSClass slope = slope_class(pm.bundle);
            expect(slope.coeffs == expected_slope, "product slope is not blockwise");
        }
    });

    return rec.take();
}

inline std::vector<PropertyResult> oracle_suite(std::uint64_t seed) {
    Recorder rec("oracle");

    rec.check("kunneth_oracle_matches_engine", [&](std::ostream& detail) {
        std::vector<Rational> slopes = {Rational(-2), make_rational(-1, 2), Rational(0),
                                        make_rational(1, 2), Rational(1)};
        std::vector<long long> degrees = {1, 2};
        int cases = 0;
        std::vector<EllipticFactor> factors;
        std::vector<std::pair<Rational, long long>> grid;
        for (const auto& s : slopes)
            for (long long d : degrees) grid.emplace_back(s, d);
        for (std::size_t i = 0; i < grid.size(); ++i)
            for (std::size_t j = i; j < grid.size(); ++j) {
                factors.clear();
                for (auto idx : {i, j})
                    factors.push_back({Int(denominator(grid[idx].first)), grid[idx].first,
                                       Int(grid[idx].second)});
                ProductSpec spec;
                for (const auto& f : factors) {
                    auto model = principal_model(1);
                    spec.factors.push_back(
                        {model,
                         make_bundle(f.rank, basis_class(model, 0, Rational(f.rank) * f.slope)),
                         basis_class(model, 0, Rational(f.degree))});
                }
                auto pm = product_model(spec);
                expect(kunneth_creg(factors) == creg(pm.bundle, pm.eta),
                       "oracle disagrees with the engine");
                ++cases;
            }
        detail << cases << " cases";
    });

    rec.check("kunneth_symmetric_under_factor_permutation", [&](std::ostream&) {
        Rng rng(seed + 50);
        for (int it = 0; it < 30; ++it) {
            std::vector<EllipticFactor> factors;
            int n = static_cast<int>(rng.uniform(2, 3));
            for (int k = 0; k < n; ++k) {
                Int rank(rng.uniform(1, 3));
                Rational slope = Rational(rng.uniform(-4, 4)) / Rational(rank);
                factors.push_back({rank, slope, Int(rng.uniform(1, 2))});
            }
            long long base = kunneth_creg(factors);
            std::reverse(factors.begin(), factors.end());
            expect(kunneth_creg(factors) == base, "oracle not permutation-symmetric");
        }
    });

    rec.check("euler_characteristic_additivity", [&](std::ostream&) {
        Rng rng(seed + 51);
        for (int it = 0; it < 50; ++it) {
            Int rank(rng.uniform(1, 4));
            Rational slope = make_rational(rng.uniform(-6, 6), 1) / Rational(rank);
            EllipticFactor f{rank, slope, Int(rng.uniform(1, 3))};
            auto table = cohomology_table(f, -4, 4);
            for (const auto& row : table.rows) {
                expect(row.h0 == 0 || row.h1 == 0, "both cohomologies nonzero");
                Rational chi = Rational(f.rank) *
                               (f.slope + Rational(row.twist) * Rational(f.degree));
                expect(Rational(row.h0 - row.h1) == chi, "h0 - h1 is not chi");
            }
        }
    });

    return rec.take();
}

}  // namespace selftest

// suite_filter empty = run everything.
inline std::vector<PropertyResult> run_selftest(const std::string& suite_filter,
                                                std::uint64_t seed) {
    std::vector<PropertyResult> all;
    const auto want = [&](const char* name) {
        return suite_filter.empty() || suite_filter == name;
    };
    const auto append = [&](std::vector<PropertyResult> part) {
        for (auto& r : part) all.push_back(std::move(r));
    };
    if (want("exactlinalg")) append(selftest::exactlinalg_suite(seed));
    if (want("nsmodel")) append(selftest::nsmodel_suite(seed));
    if (want("regularity")) append(selftest::regularity_suite(seed));
    if (want("bundles")) append(selftest::bundles_suite(seed));
    if (want("catalogs")) append(selftest::catalogs_suite(seed));
    if (want("oracle")) append(selftest::oracle_suite(seed));
    if (all.empty()) throw std::domain_error("unknown suite '" + suite_filter + "'");
    return all;
}

}  // namespace abelreg

#endif
