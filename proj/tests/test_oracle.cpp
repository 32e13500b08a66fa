#include <doctest.h>

#include <abelreg/modelzoo.hpp>
#include <abelreg/oracle.hpp>

using namespace abelreg;

TEST_CASE("generic cohomology of elliptic twists") {
    EllipticFactor line{1, Rational(0), 1};
    CHECK(elliptic_cohomology(line, 1) == std::pair<Int, Int>{1, 0});
    CHECK(elliptic_cohomology(line, 0) == std::pair<Int, Int>{0, 0});
    CHECK(elliptic_cohomology(line, -2) == std::pair<Int, Int>{0, 2});

    EllipticFactor f{2, make_rational(-3, 2), 1};
    CHECK(elliptic_cohomology(f, 1) == std::pair<Int, Int>{0, 1});
    CHECK(elliptic_cohomology(f, 2) == std::pair<Int, Int>{1, 0});

    CHECK_THROWS_WITH_AS(elliptic_cohomology({2, make_rational(1, 3), 1}, 0),
                         "non-integral c1", std::domain_error);
}

TEST_CASE("cohomology tables satisfy the Euler characteristic") {
    Rng rng(47);
    for (int it = 0; it < 50; ++it) {
        Int rank(rng.uniform(1, 4));
        EllipticFactor f{rank, Rational(rng.uniform(-6, 6)) / Rational(rank),
                         Int(rng.uniform(1, 3))};
        auto table = cohomology_table(f, -5, 5);
        for (const auto& row : table.rows) {
            CHECK((row.h0 == 0 || row.h1 == 0));
            CHECK(Rational(row.h0 - row.h1) ==
                  Rational(f.rank) * (f.slope + Rational(row.twist) * Rational(f.degree)));
        }
    }
}

TEST_CASE("kunneth oracle on single factors") {
    CHECK(kunneth_creg({{1, Rational(0), 1}}) == 1);
    CHECK(kunneth_creg({{2, make_rational(-3, 2), 1}}) == 3);
    CHECK(kunneth_creg({{1, Rational(5), 2}}) == -1);
}

TEST_CASE("kunneth oracle on pairs") {
    CHECK(kunneth_creg({{1, Rational(0), 1}, {2, make_rational(-3, 2), 1}}) == 3);
    CHECK(kunneth_creg({{1, Rational(0), 1}, {1, Rational(0), 1}}) == 2);
    CHECK(kunneth_creg({{1, Rational(0), 1}, {1, Rational(1), 1}}) == 1);
}

TEST_CASE("kunneth oracle is permutation symmetric") {
    std::vector<EllipticFactor> f = {{1, Rational(-2), 1},
                                     {2, make_rational(1, 2), 2},
                                     {1, Rational(1), 1}};
    long long base = kunneth_creg(f);
    std::swap(f[0], f[2]);
    CHECK(kunneth_creg(f) == base);
    std::swap(f[0], f[1]);
    CHECK(kunneth_creg(f) == base);
}

TEST_CASE("kunneth oracle matches the chamber engine end to end") {
    std::vector<Rational> slopes = {Rational(-2), Rational(-1), make_rational(-1, 2),
                                    Rational(0), make_rational(1, 2), Rational(2)};
    std::vector<long long> degrees = {1, 2};

    // g = 1: oracle against the one-dimensional model directly.
    for (const auto& s : slopes)
        for (long long d : degrees) {
            Int rank(denominator(s));
            auto model = principal_model(1);
            auto cert = regularity(basis_class(model, 0, s),
                                   basis_class(model, 0, Rational(d)));
            CHECK(kunneth_creg({{rank, s, Int(d)}}) == cert.value);
        }

    // g = 2: oracle against product models.
    for (const auto& s1 : slopes)
        for (const auto& s2 : slopes)
            for (long long d1 : degrees)
                for (long long d2 : degrees) {
                    auto model = elliptic_product_model(2);
                    auto gamma = make_class(model, {s1, s2});
                    auto eta = make_class(model, {Rational(d1), Rational(d2)});
                    CHECK(kunneth_creg({{Int(denominator(s1)), s1, Int(d1)},
                                        {Int(denominator(s2)), s2, Int(d2)}}) ==
                          regularity(gamma, eta).value);
                }
}

TEST_CASE("oracle factor count is capped") {
    std::vector<EllipticFactor> five(5, EllipticFactor{1, Rational(0), 1});
    CHECK_THROWS_AS(kunneth_creg(five), std::domain_error);
    CHECK_THROWS_AS(kunneth_creg({}), std::domain_error);
}
