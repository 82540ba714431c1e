#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "bresse/errors.hpp"
#include "bresse/params.hpp"

using namespace bresse;

namespace {

PhysicalParams unit_params() {
    PhysicalParams p;
    p.rho = p.I1 = p.I2 = p.I3 = p.E = p.kprimeG = 1.0;
    p.alpha = p.delta11 = p.delta13 = p.c_nu = p.Theta0 = 1.0;
    p.R = p.L = 1.0;
    return p;
}

} // namespace

TEST_CASE("reduction table rows") {
    SUBCASE("rho1 = rho*I1") {
        auto p = unit_params();
        p.rho = 2.0;
        p.I1 = 3.0;
        const auto c = derive_coefficients(p);
        CHECK(c.rho1 == doctest::Approx(6.0));
    }

    SUBCASE("k = kprimeG*I1 and b = E*I3") {
        const auto c = derive_coefficients(unit_params());
        CHECK(c.k == doctest::Approx(1.0));
        CHECK(c.b == doctest::Approx(1.0));
    }

    SUBCASE("alpha = 0 is rejected (positivity), tiny alpha kills coupling") {
        auto p = unit_params();
        p.alpha = 0.0;
        CHECK_THROWS_WITH_AS(derive_coefficients(p),
                             "alpha must be a positive finite number",
                             ValidationError);
    }

    SUBCASE("coupling rows scale linearly in alpha") {
        auto p = unit_params();
        p.alpha = 0.5;
        p.delta13 = 3.0;
        p.I2 = 2.0;
        const auto c = derive_coefficients(p);
        CHECK(c.m[0] == doctest::Approx(2.0 * 0.5 * 1.0 * 1.0 * 3.0));
        CHECK(c.m[1] == doctest::Approx(0.5 * 1.0 * 2.0 * 1.0));
        CHECK(c.m[2] == doctest::Approx(0.5 * 1.0 * 1.0 * 1.0));
    }
}

TEST_CASE("coefficient consistency over random positive inputs") {
    std::mt19937 rng(20240817);
    std::uniform_real_distribution<double> dist(0.1, 5.0);
    for (int trial = 0; trial < 200; ++trial) {
        PhysicalParams p;
        p.rho = dist(rng);
        p.I2 = dist(rng);
        p.I3 = dist(rng);
        p.E = dist(rng);
        p.kprimeG = dist(rng);
        p.alpha = dist(rng);
        p.delta11 = dist(rng);
        p.delta13 = dist(rng);
        p.c_nu = dist(rng);
        p.Theta0 = dist(rng);
        p.R = dist(rng);
        p.L = dist(rng);
        p.I1 = p.I2 / p.R; // honor the geometric relation
        const auto c = derive_coefficients(p);

        CHECK(c.rho1 == doctest::Approx(p.rho * p.I1));
        CHECK(c.rho2 == doctest::Approx(p.rho * p.I3));
        CHECK(c.k == doctest::Approx(p.kprimeG * p.I1));
        CHECK(c.k0 == doctest::Approx(p.E * p.I1));
        CHECK(c.b == doctest::Approx(p.E * p.I3));
        CHECK(c.ell == doctest::Approx(1.0 / p.R));
        CHECK(c.m[0] == doctest::Approx(2.0 * p.alpha * p.kprimeG * p.I1 * p.delta13));
        CHECK(c.m[1] == doctest::Approx(p.alpha * p.E * p.I2 * p.delta11));
        CHECK(c.m[2] == doctest::Approx(p.alpha * p.E * p.I3 * p.delta11));
        CHECK(c.gamma[0] == doctest::Approx((2.0 / p.Theta0) * c.m[0]));
        CHECK(c.gamma[1] == doctest::Approx((p.R / p.Theta0) * c.m[1]));
        CHECK(c.gamma[2] == doctest::Approx((1.0 / p.Theta0) * c.m[2]));
        for (int i = 0; i < 3; ++i)
            CHECK(c.varrho[i] == doctest::Approx(p.c_nu * p.rho * c.gamma[i]));
        CHECK_NOTHROW(c.validate());
    }
}

TEST_CASE("validation errors name the offending field") {
    auto p = unit_params();
    p.Theta0 = -1.0;
    CHECK_THROWS_WITH_AS(derive_coefficients(p),
                         "Theta0 must be a positive finite number",
                         ValidationError);

    p = unit_params();
    p.I3 = 0.0;
    CHECK_THROWS_WITH_AS(derive_coefficients(p),
                         "I3 must be a positive finite number",
                         ValidationError);

    Coefficients c;
    CHECK_THROWS_AS(c.validate(), ValidationError);
    c.rho1 = c.rho2 = c.k = c.k0 = c.b = c.ell = 1.0;
    c.varrho = {1.0, 1.0, 1.0};
    c.gamma = {1.0, 1.0, 1.0};
    c.m = {0.0, -0.5, 0.0};
    CHECK_THROWS_WITH_AS(c.validate(),
                         "m2 must be a nonnegative finite number",
                         ValidationError);
    c.m = {0.0, 0.0, 0.0}; // nonnegative is enough for couplings
    CHECK_NOTHROW(c.validate());
}

TEST_CASE("I1 = I2/R mismatch is advisory, not fatal") {
    auto p = unit_params();
    p.I1 = 3.0; // violates I1 = I2/R = 1
    std::vector<std::string> warnings;
    CHECK_NOTHROW(derive_coefficients(p, &warnings));
    REQUIRE(warnings.size() == 1);
    CHECK(warnings[0].find("I1") != std::string::npos);

    warnings.clear();
    p.I1 = p.I2 / p.R;
    (void)derive_coefficients(p, &warnings);
    CHECK(warnings.empty());
}

TEST_CASE("stability numbers") {
    Coefficients c;
    c.rho1 = c.rho2 = c.k = c.k0 = c.b = c.ell = 1.0;
    c.varrho = {1.0, 1.0, 1.0};
    c.gamma = {1.0, 1.0, 1.0};

    SUBCASE("equal wave speeds give (0, 0)") {
        c.rho1 = c.k;
        c.rho2 = c.b;
        c.k0 = c.k;
        const auto s = stability_number(c);
        CHECK(s.chi1 == doctest::Approx(0.0));
        CHECK(s.chi2 == doctest::Approx(0.0));
    }

    SUBCASE("chi1 = k/rho1 - b/rho2") {
        c.k = 1.0; c.rho1 = 1.0; c.b = 2.0; c.rho2 = 1.0; c.k0 = 1.0;
        const auto s = stability_number(c);
        CHECK(s.chi1 == doctest::Approx(-1.0));
        CHECK(s.chi2 == doctest::Approx(0.0));
    }

    SUBCASE("chi2 = k - k0") {
        c.k = 4.0; c.rho1 = 2.0; c.b = 2.0; c.rho2 = 1.0; c.k0 = 3.0;
        const auto s = stability_number(c);
        CHECK(s.chi1 == doctest::Approx(0.0));
        CHECK(s.chi2 == doctest::Approx(1.0));
    }
}
