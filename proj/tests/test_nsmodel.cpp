#include <doctest.h>

#include <abelreg/modelzoo.hpp>
#include <abelreg/nsmodel.hpp>
#include <abelreg/selftest.hpp>

using namespace abelreg;

TEST_CASE("model construction rejects bad bases") {
    CHECK_THROWS_AS(AbelianModel::make(2, {}), std::invalid_argument);
    CHECK_THROWS_AS(
        AbelianModel::make(2, {{"A", HermitianForm::identity(2)},
                               {"A", HermitianForm::diagonal({Rational(1), Rational(2)})}}),
        std::invalid_argument);
    CHECK_THROWS_AS(AbelianModel::make(2, {{"A", HermitianForm::identity(3)}}),
                    std::invalid_argument);
    // 2*I is dependent on I
    CHECK_THROWS_AS(
        AbelianModel::make(2, {{"A", HermitianForm::identity(2)},
                               {"B", Rational(2) * HermitianForm::identity(2)}}),
        std::invalid_argument);
}

TEST_CASE("to_matrix is the exact linear combination") {
    auto model = elliptic_product_model(2);
    CHECK(to_matrix(zero_class(model)) ==
          HermitianForm::diagonal({Rational(0), Rational(0)}));

    auto single = principal_model(3);
    CHECK(to_matrix(basis_class(single, 0)) == HermitianForm::identity(3));

    auto c = make_class(model, {Rational(5), make_rational(-1, 2)});
    CHECK(to_matrix(c) == HermitianForm::diagonal({Rational(5), make_rational(-1, 2)}));
}

TEST_CASE("nondegeneracy via determinant") {
    auto model = elliptic_product_model(2);
    CHECK(is_nondegenerate(make_class(model, {Rational(1), make_rational(-1, 2)})));
    CHECK_FALSE(is_nondegenerate(zero_class(model)));
    CHECK_FALSE(is_nondegenerate(make_class(model, {Rational(1), Rational(0)})));

    auto diag = diag_model(2);
    CHECK(is_nondegenerate(basis_class(diag, 0)));
}

TEST_CASE("index values and the degenerate error") {
    auto model = elliptic_product_model(2);
    CHECK(index(make_class(model, {Rational(1), Rational(1)})) == 0);
    CHECK(index(make_class(model, {Rational(-1), Rational(-1)})) == 2);
    CHECK(index(make_class(model, {Rational(1), make_rational(-1, 2)})) == 1);
    CHECK_THROWS_WITH_AS(index(zero_class(model)), "index undefined on degenerate class",
                         std::domain_error);
}

TEST_CASE("positivity trichotomy") {
    auto model = elliptic_product_model(2);
    CHECK(positivity(make_class(model, {Rational(1), Rational(1)})) == Positivity::Ample);
    CHECK(positivity(zero_class(model)) == Positivity::NefNotAmple);
    CHECK(positivity(make_class(model, {Rational(1), Rational(0)})) == Positivity::NefNotAmple);
    CHECK(positivity(make_class(model, {Rational(1), make_rational(-1, 2)})) ==
          Positivity::Other);
}

TEST_CASE("scan of a constant-index segment") {
    auto model = diag_model(2);
    auto eta = basis_class(model, 0);
    auto report = scan_segment(eta, eta);
    CHECK(report.critical_params.empty());
    REQUIRE(report.intervals.size() == 1);
    CHECK(report.intervals[0].index == 0);
}

TEST_CASE("scan from an ample class to its negative") {
    auto model = diag_model(3);
    auto eta = basis_class(model, 0);
    auto report = scan_segment(eta, -eta);
    REQUIRE(report.critical_params.size() == 1);
    CHECK(report.critical_params[0].exact());
    CHECK(report.critical_params[0].lo == make_rational(1, 2));
    CHECK(report.critical_params[0].multiplicity == 3);
    REQUIRE(report.intervals.size() == 2);
    CHECK(report.intervals[0].index == 0);
    CHECK(report.intervals[1].index == 3);
}

TEST_CASE("scan across a single eigenvalue crossing") {
    auto model = elliptic_product_model(2);
    auto a = make_class(model, {Rational(1), Rational(-1)});
    auto b = make_class(model, {Rational(1), Rational(1)});
    auto report = scan_segment(a, b);
    REQUIRE(report.critical_params.size() == 1);
    CHECK(report.critical_params[0].exact());
    CHECK(report.critical_params[0].lo == make_rational(1, 2));
    REQUIRE(report.intervals.size() == 2);
    CHECK(report.intervals[0].index == 1);
    CHECK(report.intervals[1].index == 0);
}

TEST_CASE("scan with two separated crossings") {
    // entries -1 + 4t and -2 + 3t vanish at t = 1/4 and t = 2/3
    auto model = elliptic_product_model(2);
    auto a = make_class(model, {Rational(-1), Rational(-2)});
    auto b = make_class(model, {Rational(3), Rational(1)});
    auto report = scan_segment(a, b);
    REQUIRE(report.critical_params.size() == 2);
    const auto& r0 = report.critical_params[0];
    const auto& r1 = report.critical_params[1];
    CHECK((r0.exact() ? r0.lo == make_rational(1, 4)
                      : r0.lo < make_rational(1, 4) && make_rational(1, 4) < r0.hi));
    CHECK((r1.exact() ? r1.lo == make_rational(2, 3)
                      : r1.lo < make_rational(2, 3) && make_rational(2, 3) < r1.hi));
    REQUIRE(report.intervals.size() == 3);
    CHECK(report.intervals[0].index == 2);
    CHECK(report.intervals[1].index == 1);
    CHECK(report.intervals[2].index == 0);
    // samples sit strictly between consecutive critical parameters
    CHECK(report.intervals[0].sample < make_rational(1, 4));
    CHECK(make_rational(1, 4) < report.intervals[1].sample);
    CHECK(report.intervals[1].sample < make_rational(2, 3));
    CHECK(make_rational(2, 3) < report.intervals[2].sample);
}

TEST_CASE("segment inside the degenerate locus is an error") {
    auto model = elliptic_product_model(2);
    auto a = make_class(model, {Rational(1), Rational(0)});
    auto b = make_class(model, {Rational(2), Rational(0)});
    CHECK_THROWS_WITH_AS(scan_segment(a, b), "segment lies in degenerate locus",
                         std::domain_error);
}

TEST_CASE("classes from different models do not mix") {
    auto m1 = diag_model(2);
    auto m2 = diag_model(2);
    CHECK_THROWS_AS(basis_class(m1, 0) + basis_class(m2, 0), std::domain_error);
}

TEST_CASE("index symmetry and scaling on random classes") {
    Rng rng(3);
    auto models = selftest::zoo_models(3);
    int seen = 0;
    for (int it = 0; it < 120; ++it) {
        const auto& model = models[it % models.size()];
        NSClass c = random_class(rng, model);
        if (!is_nondegenerate(c)) continue;
        ++seen;
        CHECK(index(c) == static_cast<int>(model->dim()) - index(-c));
        CHECK(index(make_rational(rng.uniform(1, 9), rng.uniform(1, 9)) * c) == index(c));
    }
    CHECK(seen > 50);
}

TEST_CASE("negative count never increases along an ample ray") {
    Rng rng(5);
    auto models = selftest::zoo_models(3);
    for (int it = 0; it < 60; ++it) {
        const auto& model = models[it % models.size()];
        HermitianForm hc = to_matrix(random_class(rng, model));
        HermitianForm he = to_matrix(random_ample_class(rng, model));
        int prev_neg = static_cast<int>(model->dim()) + 1;
        int prev_pos = -1;
        Rational t(-5);
        for (int step = 0; step < 7; ++step) {
            t += make_rational(rng.uniform(1, 4), rng.uniform(1, 3));
            Inertia in = inertia(hc + t * he);
            CHECK(in.negatives <= prev_neg);
            CHECK(in.positives >= prev_pos);
            prev_neg = in.negatives;
            prev_pos = in.positives;
        }
    }
}
