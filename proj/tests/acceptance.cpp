// Acceptance suite: exact end-to-end checks of the library against its
// closed forms, independent oracles, and proved inequalities, each with a
// wall-clock budget. Prints one line per criterion and exits nonzero when
// any fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include <abelreg/abelreg.hpp>
#include <abelreg/selftest.hpp>

using namespace abelreg;

namespace {

struct Criterion {
    std::string name;
    double budget_seconds;
    std::function<void(std::string&)> body;  // throws or appends detail
};

int g_failures = 0;

void run(const Criterion& c) {
    auto start = std::chrono::steady_clock::now();
    std::string detail;
    bool ok = true;
    std::string reason;
    try {
        c.body(detail);
    } catch (const std::exception& e) {
        ok = false;
        reason = e.what();
    }
    double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (ok && elapsed > c.budget_seconds) {
        ok = false;
        reason = "over time budget";
    }
    if (!ok) ++g_failures;
    std::printf("%s %-42s %6.2fs/%.0fs %s%s%s\n", ok ? "PASS" : "FAIL", c.name.c_str(),
                elapsed, c.budget_seconds, detail.c_str(), reason.empty() ? "" : " ",
                reason.c_str());
    std::fflush(stdout);
}

void require(bool cond, const std::string& what) {
    if (!cond) throw std::runtime_error(what);
}

// --- criterion 1 -----------------------------------------------------------

void polarization_anchors(std::string& detail) {
    int cases = 0;
    Rng rng(101);
    for (std::size_t g = 1; g <= 6; ++g) {
        std::vector<NSClass> etas;
        auto principal = principal_model(g);
        etas.push_back(basis_class(principal, 0));
        auto diag = diag_model(g);
        if (g == 1) {
            etas.push_back(basis_class(principal, 0, Rational(2)));
            etas.push_back(basis_class(principal, 0, make_rational(1, 2)));
        } else {
            etas.push_back(make_class(diag, [&] {
                std::vector<Rational> c(diag->basis_size());
                c[0] = Rational(1);
                c[1] = Rational(1);
                return c;
            }()));
            etas.push_back(make_class(diag, [&] {
                std::vector<Rational> c(diag->basis_size());
                c[0] = Rational(2);
                c[2] = Rational(1);
                return c;
            }()));
        }
        for (const auto& eta : etas) {
            require(positivity(eta) == Positivity::Ample, "anchor polarization not ample");
            require(regularity(eta, eta).value == static_cast<long long>(g) - 1,
                    "polarization class regularity is not g - 1");
            ++cases;
        }
    }
    detail = std::to_string(cases) + " anchors";
}

// --- criterion 2 -----------------------------------------------------------

void verlinde_grid(std::string& detail) {
    int cases = 0;
    for (long long g = 1; g <= 5; ++g)
        for (long long r = 1; r <= 6; ++r)
            for (long long k = 1; k <= 6; ++k) {
                if (gcd(Int(r), Int(k)) % 2 == 0) continue;
                for (long long s = 2; s <= 4; ++s) {
                    VerlindeSpec spec{g, Int(r), Int(k), Int(s)};
                    auto vm = verlinde_descriptor(spec);
                    require(creg(vm.bundle, vm.eta) == verlinde_creg(spec),
                            "engine disagrees with the closed form");
                    ++cases;
                }
            }
    detail = std::to_string(cases) + " cases";
}

// --- criteria 3 and 4 ------------------------------------------------------

std::vector<ModelPtr> acceptance_models(std::size_t max_dim) {
    std::vector<ModelPtr> models;
    for (std::size_t g = 1; g <= max_dim; ++g) {
        models.push_back(diag_model(g));
        if (g >= 2) models.push_back(elliptic_product_model(g));
    }
    if (max_dim >= 2) models.push_back(cm_surface_model());
    return models;
}

void gv_threshold_bounds(std::string& detail) {
    auto models = acceptance_models(4);
    Rng rng(202);
    for (int it = 0; it < 500; ++it) {
        const auto& model = models[it % models.size()];
        NSClass eta = random_ample_class(rng, model);
        Int r(rng.uniform(1, 4));
        auto proportional = make_bundle(r, (rng.small_rational(5, 3) * Rational(r)) * eta);
        require(creg(proportional, eta) == gv_threshold(proportional, eta),
                "proportional c1 misses the threshold equality");
    }
    for (int it = 0; it < 500; ++it) {
        const auto& model = models[it % models.size()];
        NSClass eta = random_ample_class(rng, model);
        auto arbitrary = make_bundle(Int(rng.uniform(1, 4)), random_class(rng, model));
        require(creg(arbitrary, eta) <= gv_threshold(arbitrary, eta),
                "creg exceeds the GV threshold");
    }
    detail = "500 proportional + 500 arbitrary";
}

NSClass random_nef_class(Rng& rng, const ModelPtr& model) {
    // Mix interior ample classes with boundary (singular semidefinite) ones.
    long long mode = rng.uniform(0, 9);
    if (mode == 0) return zero_class(model);
    if (mode <= 3) {
        std::vector<Rational> c(model->basis_size());
        const std::size_t g = model->dim();
        Rational scale = make_rational(rng.uniform(1, 4), rng.uniform(1, 2));
        if (model->basis_size() >= 2 && model->name(1) == "D") {
            // g*I - D = diag(g-1, ..., 0), positive semidefinite and singular
            c[0] = scale * Rational(static_cast<long long>(g));
            c[1] = -scale;
        } else if (model->basis_size() >= 2) {
            c[static_cast<std::size_t>(rng.uniform(0,
                  static_cast<long long>(model->basis_size()) - 1))] = scale;
        } else {
            return zero_class(model);
        }
        NSClass cls = make_class(model, std::move(c));
        if (positivity(cls) != Positivity::Other) return cls;
        return zero_class(model);
    }
    return make_rational(1, rng.uniform(1, 3)) * random_ample_class(rng, model);
}

void gv_dimension_cap(std::string& detail) {
    auto models = acceptance_models(4);
    Rng rng(303);
    int equality_subset = 0;
    for (int it = 0; it < 500; ++it) {
        const auto& model = models[it % models.size()];
        const long long g = static_cast<long long>(model->dim());
        NSClass eta = random_ample_class(rng, model);
        NSClass slope = random_nef_class(rng, model);
        require(positivity(slope) != Positivity::Other, "sampled slope is not nef");
        Int r(rng.uniform(1, 4));
        auto e = make_bundle(r, Rational(r) * slope);
        long long c = creg(e, eta);
        require(c <= g, "GV slope exceeds the dimension cap");
        if (positivity(eta - slope) == Positivity::Ample) {
            ++equality_subset;
            require(c == g, "ample dual twist without equality");
        }
    }
    require(equality_subset >= 100, "equality subset too small to be meaningful");
    detail = "500 nef slopes, " + std::to_string(equality_subset) + " equality cases";
}

// --- criterion 5 -----------------------------------------------------------

void kunneth_oracle_grid(std::string& detail) {
    std::vector<Rational> slopes = {Rational(-2), make_rational(-3, 2), Rational(-1),
                                    make_rational(-1, 2), Rational(0), make_rational(1, 2),
                                    Rational(1), Rational(2)};
    std::vector<long long> degrees = {1, 2};
    std::vector<std::pair<Rational, long long>> grid;
    for (const auto& s : slopes)
        for (long long d : degrees) grid.emplace_back(s, d);

    int cases = 0, formula_cases = 0;
    const auto check_tuple = [&](const std::vector<std::size_t>& pick) {
        const std::size_t n = pick.size();
        std::vector<EllipticFactor> factors;
        auto model = elliptic_product_model(n);
        std::vector<Rational> gcoeffs, ecoeffs;
        for (std::size_t idx : pick) {
            const auto& [s, d] = grid[idx];
            factors.push_back({Int(denominator(s)), s, Int(d)});
            gcoeffs.push_back(s);
            ecoeffs.push_back(Rational(d));
        }
        long long engine;
        if (n == 1) {
            auto single = principal_model(1);
            engine = regularity(basis_class(single, 0, gcoeffs[0]),
                                basis_class(single, 0, ecoeffs[0])).value;
        } else {
            engine = regularity(make_class(model, gcoeffs), make_class(model, ecoeffs)).value;
        }
        require(kunneth_creg(factors) == engine, "oracle disagrees with the engine");
        ++cases;
        if (n == 2 && factors[0].degree == factors[1].degree) {
            long long formula = elliptic_product_creg(
                elliptic_factor_creg(factors[0].slope, factors[0].degree),
                elliptic_factor_creg(factors[1].slope, factors[1].degree));
            require(engine == formula, "two-factor formula disagrees");
            ++formula_cases;
        }
    };

    for (std::size_t i = 0; i < grid.size(); ++i) {
        check_tuple({i});
        for (std::size_t j = i; j < grid.size(); ++j) {
            check_tuple({i, j});
            for (std::size_t k = j; k < grid.size(); ++k) check_tuple({i, j, k});
        }
    }
    detail = std::to_string(cases) + " products, " + std::to_string(formula_cases) +
             " formula cases";
}

// --- criterion 6 -----------------------------------------------------------

void exact_linalg_properties(std::string& detail) {
    Rng rng(404);
    for (int it = 0; it < 1000; ++it) {
        std::size_t n = static_cast<std::size_t>(rng.uniform(1, 6));
        bool cx = rng.chance(1, 3);
        auto h = selftest::random_hermitian(rng, n, cx);
        Inertia in = inertia(h);
        require(in.dim() == static_cast<int>(n), "counts do not sum to dim");

        auto p = selftest::random_invertible(rng, n, cx);
        require(inertia(HermitianForm(conjugate_transpose(p) * h.entries() * p)) == in,
                "congruence changed the inertia");

        Rational d = det(h);
        if (in.zeros > 0)
            require(d.is_zero(), "singular form with nonzero determinant");
        else
            require(d.sign() == (in.negatives % 2 == 0 ? 1 : -1),
                    "determinant sign disagrees with inertia");
    }

    for (int it = 0; it < 1000; ++it) {
        std::size_t n = static_cast<std::size_t>(rng.uniform(1, 5));
        auto hc = selftest::random_hermitian(rng, n, rng.chance(1, 4));
        Matrix<GaussianRational> amp(n, n);
        for (std::size_t i = 0; i < n; ++i)
            amp(i, i) = GaussianRational(Rational(rng.uniform(1, 3)));
        HermitianForm he(amp);
        int prev_neg = static_cast<int>(n) + 1, prev_pos = -1;
        Rational t(-4);
        for (int step = 0; step < 5; ++step) {
            t += make_rational(rng.uniform(1, 4), rng.uniform(1, 2));
            Inertia in = inertia(hc + t * he);
            require(in.negatives <= prev_neg, "negative count increased along the ray");
            require(in.positives >= prev_pos, "positive count decreased along the ray");
            prev_neg = in.negatives;
            prev_pos = in.positives;
        }
    }

    for (int it = 0; it < 200; ++it) {
        int count = static_cast<int>(rng.uniform(1, 5));
        std::vector<Rational> expected;
        RationalPolynomial p = RationalPolynomial::constant(Rational(rng.uniform(1, 3)));
        for (int k = 0; k < count; ++k) {
            // linear factor q x - pnum with root pnum/q
            long long q = rng.uniform(1, 3), pnum = rng.uniform(-5, 5);
            expected.push_back(make_rational(pnum, q));
            p = p * RationalPolynomial(std::vector<Rational>{Rational(-pnum), Rational(q)});
        }
        std::sort(expected.begin(), expected.end());
        auto distinct = expected;
        distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
        auto roots = isolate_real_roots(p, Rational(-7), Rational(7));
        require(roots.size() == distinct.size(), "wrong number of isolated roots");
        for (std::size_t k = 0; k < roots.size(); ++k) {
            const auto& r = roots[k];
            require(r.exact() ? r.lo == distinct[k]
                              : r.lo < distinct[k] && distinct[k] < r.hi,
                    "interval misses its root");
            require(r.multiplicity == static_cast<int>(std::count(expected.begin(),
                                                                  expected.end(), distinct[k])),
                    "wrong multiplicity");
        }
    }
    detail = "1000 congruences, 1000 ray sweeps, 200 isolations";
}

// --- criterion 7 -----------------------------------------------------------

void chamber_constancy(std::string& detail) {
    auto models = acceptance_models(3);
    Rng rng(505);
    int tested = 0, attempts = 0;
    while (tested < 100 && attempts < 4000) {
        ++attempts;
        const auto& model = models[static_cast<std::size_t>(attempts) % models.size()];
        NSClass eta = random_ample_class(rng, model);
        NSClass gamma;
        try {
            gamma = random_class_in_u_eta(rng, model, eta);
        } catch (const std::logic_error&) {
            continue;
        }
        auto cert = regularity(gamma, eta);
        const long long g = static_cast<long long>(model->dim());
        NSClass direction = random_class(rng, model, 1, 2);
        bool certified = false;
        Rational step = make_rational(1, 64);
        NSClass gamma2 = gamma;
        for (int shrink = 0; shrink < 5 && !certified; ++shrink, step /= 16) {
            gamma2 = gamma + step * direction;
            certified = true;
            for (long long k = cert.lower_witness - g;
                 k <= cert.upper_witness - 1 && certified; ++k) {
                try {
                    if (!scan_segment(gamma + Rational(k) * eta, gamma2 + Rational(k) * eta)
                             .critical_params.empty())
                        certified = false;
                } catch (const std::domain_error&) {
                    certified = false;
                }
            }
        }
        if (!certified) continue;
        ++tested;
        require(regularity(gamma2, eta).value == cert.value,
                "value changed inside a certified chamber");
    }
    require(tested == 100, "could not certify 100 perturbations");
    detail = "100 certified perturbations";
}

}  // namespace

int main() {
    std::vector<Criterion> criteria = {
        {"polarization_class_regularity_anchors", 1.0, polarization_anchors},
        {"verlinde_closed_form_grid", 5.0, verlinde_grid},
        {"gv_threshold_bound_and_equality", 30.0, gv_threshold_bounds},
        {"gv_dimension_cap_and_equality", 30.0, gv_dimension_cap},
        {"kunneth_oracle_equivalence", 60.0, kunneth_oracle_grid},
        {"exact_linalg_property_suite", 30.0, exact_linalg_properties},
        {"chamber_local_constancy", 30.0, chamber_constancy},
    };
    for (const auto& c : criteria) run(c);
    if (g_failures > 0) {
        std::printf("%d criteria failed\n", g_failures);
        return 1;
    }
    std::printf("all criteria passed\n");
    return 0;
}
