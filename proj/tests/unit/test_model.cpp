#include <doctest.h>

#include <cmath>

#include "glkinks/errors.hpp"
#include "glkinks/model.hpp"
#include "oracles.hpp"

using namespace glkinks;

namespace {
const double kRho0 = 3.0 / std::sqrt(2.0);  // |rho| of the zero-field kinks at A1 = 1
}

TEST_CASE("validate_params accepts positive coefficients only") {
    CHECK_NOTHROW(validate_params({1.0, 1.0, 0.0, 1.0, 0.0}));
    CHECK_NOTHROW(validate_params({3.0, 0.7, 0.90326, 1.0, 0.0}));
    CHECK_THROWS_AS(validate_params({-1.0, 1.0}), NonPositiveCoefficient);
    CHECK_THROWS_AS(validate_params({1.0, 0.0}), NonPositiveCoefficient);
    CHECK_THROWS_AS(validate_params({1.0, -0.7}), ParameterError);
}

TEST_CASE("driven_setup at zero field") {
    const DrivenSetup s = driven_setup(1.0, 1.0, 0.0);
    CHECK(s.delta_eps == doctest::Approx(4.0));
    CHECK(s.r_plus == doctest::Approx(1.0));
    CHECK(s.r_minus == doctest::Approx(-1.0));
    CHECK(s.eta_times_gamma1 == 0.0);
    CHECK(s.alpha1 == doctest::Approx(1.0 / std::sqrt(2.0)));
}

TEST_CASE("driven_setup for the first plotted parameter set") {
    const DrivenSetup s = driven_setup(3.0, 0.7, 2.2772);
    CHECK(s.delta_eps == doctest::Approx(1.1102).epsilon(1e-4));
    CHECK(s.r_minus == doctest::Approx(2.3310).epsilon(1e-4));
    CHECK(s.r_plus == doctest::Approx(oracle::r_plus(3.0, 0.7, 2.2772)).epsilon(1e-14));
    CHECK(s.r_minus == doctest::Approx(oracle::r_minus(3.0, 0.7, 2.2772)).epsilon(1e-14));
    CHECK(s.eta_times_gamma1 == doctest::Approx(3.0 * 2.2772 - 0.7 * std::pow(2.2772, 3)));
}

TEST_CASE("driven_setup rejects complex factors and accepts the boundary") {
    CHECK_THROWS_AS(driven_setup(1.0, 1.0, 2.0), ComplexDelta);
    CHECK_THROWS_AS(driven_setup(0.0, 1.0, 0.1), NonPositiveCoefficient);
    const double edge = 2.0 / std::sqrt(3.0);
    const DrivenSetup s = driven_setup(1.0, 1.0, edge);
    CHECK(std::abs(s.delta_eps) < 1e-12);
    CHECK(s.r_plus == doctest::Approx(s.r_minus).epsilon(1e-7));
}

TEST_CASE("rate identities hold across admissible epsilon") {
    for (double A : {0.7, 1.0, 3.0}) {
        for (double B : {0.7, 1.0, 3.0}) {
            const double edge = 2.0 / std::sqrt(3.0) * std::sqrt(A / B);
            for (int i = -10; i <= 10; ++i) {
                const double e = 0.99 * edge * i / 10.0;
                const DrivenSetup s = driven_setup(A, B, e);
                CHECK(std::abs(s.r_plus + s.r_minus - 3.0 * std::sqrt(B) * e) < 1e-12);
                CHECK(std::abs(std::pow(s.r_plus - s.r_minus, 2) - s.delta_eps) < 1e-12);
            }
        }
    }
}

TEST_CASE("forced friction reproduces the plotted values") {
    CHECK(std::abs(rho_case1(driven_setup(3.0, 0.7, 2.2772), Sign::plus) - 0.90326) < 1e-4);
    CHECK(std::abs(rho_case1(driven_setup(3.0, 0.7, 1.0351), Sign::minus) - 2.39335) < 1e-4);
    CHECK(std::abs(rho_case2(driven_setup(0.7, 3.0, 0.5313), Sign::plus) - 1.51635) < 1e-3);
    CHECK(std::abs(rho_case2(driven_setup(0.7, 3.0, -0.5313), Sign::minus) - 0.435766) < 1e-3);
}

TEST_CASE("forced friction reduces to the zero-field value") {
    const DrivenSetup s = driven_setup(1.0, 1.0, 0.0);
    CHECK(std::abs(rho_case1(s, Sign::minus) - kRho0) < 1e-12);
    CHECK(std::abs(rho_case2(s, Sign::plus) - kRho0) < 1e-12);
    for (double A : {0.5, 2.0, 4.0}) {
        const DrivenSetup z = driven_setup(A, 1.3, 0.0);
        CHECK(std::abs(std::abs(rho_case1(z, Sign::minus)) - kRho0 * std::sqrt(A)) < 1e-12);
        CHECK(std::abs(std::abs(rho_case2(z, Sign::plus)) - kRho0 * std::sqrt(A)) < 1e-12);
    }
}

TEST_CASE("forced friction is odd in the front sign") {
    for (double e : {-1.1, -0.5, 0.0, 0.3, 1.1}) {
        const DrivenSetup s = driven_setup(1.0, 1.0, e);
        CHECK(rho_case1(s, Sign::plus) + rho_case1(s, Sign::minus) == doctest::Approx(0.0));
        CHECK(rho_case2(s, Sign::plus) + rho_case2(s, Sign::minus) == doctest::Approx(0.0));
        CHECK(forced_rho(s, DrivenCase::I, Sign::plus) == rho_case1(s, Sign::plus));
        CHECK(forced_rho(s, DrivenCase::II, Sign::minus) == rho_case2(s, Sign::minus));
    }
}

TEST_CASE("epsilon_admissible_interval") {
    const double edge = 2.0 / std::sqrt(3.0);
    const auto i1 = epsilon_admissible_interval(1.0, 1.0, DrivenCase::I, Sign::plus, true);
    CHECK(i1.lower == doctest::Approx(1.0));
    CHECK(i1.upper == doctest::Approx(edge));
    CHECK(i1.lower_open);
    CHECK_FALSE(i1.upper_open);
    CHECK_FALSE(i1.contains(1.0));
    CHECK(i1.contains(i1.upper));

    const auto fig1 = epsilon_admissible_interval(3.0, 0.7, DrivenCase::I, Sign::plus, true);
    CHECK(fig1.contains(2.2772));
    CHECK(fig1.lower == doctest::Approx(std::sqrt(3.0 / 0.7)));
    CHECK(fig1.upper == doctest::Approx(2.3905).epsilon(1e-4));

    for (DrivenCase c : {DrivenCase::I, DrivenCase::II}) {
        for (Sign s : {Sign::plus, Sign::minus}) {
            const auto any = epsilon_admissible_interval(1.0, 1.0, c, s, false);
            CHECK(any.lower == doctest::Approx(-edge));
            CHECK(any.upper == doctest::Approx(edge));
            CHECK_FALSE(any.lower_open);
            CHECK_FALSE(any.upper_open);
        }
    }
}

TEST_CASE("admissible epsilon intervals agree with the sign of the forced friction") {
    for (DrivenCase c : {DrivenCase::I, DrivenCase::II}) {
        for (Sign s : {Sign::plus, Sign::minus}) {
            const auto range = epsilon_admissible_interval(1.7, 0.9, c, s, true);
            const double edge = 2.0 / std::sqrt(3.0) * std::sqrt(1.7 / 0.9);
            for (int i = -199; i <= 199; ++i) {
                const double e = edge * i / 200.0;
                const double rho = forced_rho(driven_setup(1.7, 0.9, e), c, s);
                if (std::abs(rho) < 1e-9) continue;
                CAPTURE(e);
                CHECK(range.contains(e) == (rho > 0.0));
            }
        }
    }
}

TEST_CASE("admissible interval depends only on A1/B1") {
    for (DrivenCase c : {DrivenCase::I, DrivenCase::II}) {
        for (Sign s : {Sign::plus, Sign::minus}) {
            for (bool positive : {true, false}) {
                const auto a = epsilon_admissible_interval(1.3, 0.8, c, s, positive);
                const auto b = epsilon_admissible_interval(2.6, 1.6, c, s, positive);
                CHECK(std::abs(a.lower - b.lower) < 1e-12);
                CHECK(std::abs(a.upper - b.upper) < 1e-12);
                CHECK(a.lower_open == b.lower_open);
                CHECK(a.upper_open == b.upper_open);
            }
        }
    }
}

TEST_CASE("epsilon_from_field matches a bracketing root search") {
    for (double g : {-1.5, -0.3, 0.0, 0.2, 0.38, 0.9}) {
        const auto roots = epsilon_from_field(1.0, 1.0, g);
        const auto expected = oracle::field_cubic_roots(1.0, 1.0, g);
        REQUIRE(roots.size() == expected.size());
        for (std::size_t i = 0; i < roots.size(); ++i) {
            CHECK(roots[i].epsilon == doctest::Approx(expected[i]).epsilon(1e-10));
            const double delta = 4.0 - 3.0 * roots[i].epsilon * roots[i].epsilon;
            CHECK(roots[i].admissible == (delta >= 0.0));
        }
    }
    const auto fig1 = epsilon_from_field(3.0, 0.7, driven_setup(3.0, 0.7, 2.2772).eta_times_gamma1);
    bool found = false;
    for (const auto& r : fig1) found = found || std::abs(r.epsilon - 2.2772) < 1e-10;
    CHECK(found);
}

TEST_CASE("map_condon_params divides through") {
    const ModelParams a = map_condon_params({0.9, 1.0, 1.0, 3.0, 0.7, 1.0, 1.0});
    CHECK(a.rho == doctest::Approx(0.9));
    CHECK(a.A1 == doctest::Approx(3.0));
    CHECK(a.B1 == doctest::Approx(0.7));
    CHECK(a.gamma1 == doctest::Approx(1.0));
    const ModelParams b = map_condon_params({1.0, 2.0, 0.5, 2.0, 2.0, 1.0, 2.0});
    CHECK(b.rho == doctest::Approx(1.0));
    CHECK(b.A1 == doctest::Approx(1.0));
    CHECK(b.B1 == doctest::Approx(1.0));
    CHECK(b.gamma1 == doctest::Approx(0.5));
    CHECK_THROWS_AS(map_condon_params({0.0, 1.0, 1.0, -1.0, 1.0, 0.0, 1.0}),
                    NonPositiveCoefficient);
}

TEST_CASE("AdmissibleRange prints brackets") {
    const AdmissibleRange r{0.0, 1.0, true, false};
    CHECK(r.to_string() == "(0, 1]");
    CHECK(AdmissibleRange{2.0, 1.0, false, false}.empty());
    CHECK(AdmissibleRange{1.0, 1.0, true, false}.empty());
    CHECK_FALSE(AdmissibleRange{1.0, 1.0, false, false}.empty());
}
