#include <doctest.h>

#include <array>
#include <cmath>
#include <string>
#include <vector>

#include "glkinks/analysis.hpp"
#include "glkinks/errors.hpp"
#include "glkinks/figures.hpp"
#include "glkinks/kinks.hpp"

using namespace glkinks;

namespace {

// Midpoints frozen from a reference run; lambda sets of the four plotted families.
struct Baseline {
    int fig;
    std::array<double, 4> midpoints;
    double midpoint_inf;
};
const Baseline kBaselines[] = {
    {1, {-2.164950, -0.691679, -0.408255, -0.294812}, -0.289616},
    {2, {1.701853, 0.788291, 0.469576, 0.349892}, 0.342713},
    {3, {-9.759432, -3.295394, -1.480913, -0.971406}, -0.870829},
    {4, {5.762449, 1.254551, 0.052895, -0.552456}, -0.599526},
};

}  // namespace

TEST_CASE("forbidden lambda interval") {
    const DrivenSetup s = driven_setup(3.0, 0.7, 2.2772);
    const LambdaDomain d = lambda_forbidden_interval(s, DrivenCase::I, Sign::plus);
    CHECK(d.bound_value == doctest::Approx(0.1236).epsilon(1e-3));
    CHECK(d.forbidden.lower == 0.0);
    CHECK(d.forbidden.lower_open);
    CHECK(d.forbidden.upper == d.bound_value);
    CHECK_FALSE(d.forbidden.upper_open);
    CHECK_FALSE(d.forbidden.contains(0.125));

    const LambdaDomain unit =
        lambda_forbidden_interval(driven_setup(1.0, 1.0, 0.0), DrivenCase::I, Sign::plus);
    CHECK(unit.bound_value == doctest::Approx(0.5));

    const LambdaDomain minus = lambda_forbidden_interval(s, DrivenCase::I, Sign::minus);
    CHECK(std::abs(minus.bound_value) == doctest::Approx(std::abs(d.bound_value)));
    CHECK(minus.forbidden.lower == doctest::Approx(-d.bound_value));
    CHECK(minus.forbidden.upper == 0.0);
    CHECK_FALSE(minus.forbidden.lower_open);
    CHECK(minus.forbidden.upper_open);
}

TEST_CASE("negative rate mirrors the forbidden interval") {
    const FigureSpec& f4 = figure_spec(4);
    const DrivenSetup s = f4.setup();
    REQUIRE(s.r_minus < 0.0);
    const LambdaDomain d = lambda_forbidden_interval(s, DrivenCase::II, Sign::minus);
    CHECK(d.bound_value < 0.0);
    CHECK(d.forbidden.lower == 0.0);
    CHECK(d.forbidden.upper == doctest::Approx(0.5297).epsilon(1e-3));
    CHECK_FALSE(d.forbidden.contains(0.53));
    CHECK(d.forbidden.contains(0.529));
}

TEST_CASE("singularity scan") {
    const FigureSpec& f1 = figure_spec(1);
    const LambdaFamily fam = f1.family();
    const double bound = lambda_forbidden_interval(f1.setup(), DrivenCase::I, Sign::plus).bound_value;
    CHECK(singularity_scan(fam.make(0.125)).empty());
    CHECK(singularity_scan(fam.make(1e6)).empty());
    const KinkSolution inside = fam.make(0.5 * bound);
    const auto roots = singularity_scan(inside);
    REQUIRE(roots.size() >= 1);
    CHECK(roots[0] == doctest::Approx(inside.singularities()[0]).epsilon(1e-8));
    CHECK(std::abs(inside.inner_denominator(roots[0])) < 1e-8);
    CHECK_THROWS_AS(singularity_scan(inside, 1.0, 0.0), ParameterError);
}

TEST_CASE("singularity dichotomy over lambda") {
    for (const FigureSpec& f : all_figures()) {
        const LambdaFamily fam = f.family();
        const LambdaDomain d = lambda_forbidden_interval(f.setup(), f.driven_case, f.branch);
        const double b = std::abs(d.bound_value);
        const double cell = 6.0 * b / 199.0;
        for (int i = 0; i < 200; ++i) {
            const double l = -3.0 * b + i * cell;
            if (l == 0.0) continue;
            bool poles = false;
            try {
                poles = !singularity_scan(fam.make(l)).empty();
            } catch (const ParameterError&) {
                poles = true;  // the degenerate endpoint itself
            }
            const bool near_edge = std::abs(std::abs(l) - b) < cell || std::abs(l) < cell;
            CAPTURE(f.id);
            CAPTURE(l);
            if (!near_edge) CHECK(poles == d.forbidden.contains(l));
            CHECK(fam.forbidden(l) == (d.forbidden.contains(l) || poles));
        }
    }
}

TEST_CASE("zero-field pole intervals agree with a lambda sweep") {
    for (Sign b : {Sign::plus, Sign::minus}) {
        for (Variant v : {Variant::first, Variant::second}) {
            const auto ranges = zero_field_forbidden_lambda(3.0, b, v);
            for (int i = -60; i <= 60; ++i) {
                const double l = 0.05 * i + 0.013;
                bool expected = false;
                for (const auto& r : ranges) expected = expected || r.contains(l);
                bool poles = false;
                try {
                    poles = !make_lambda_zero_field(3.0, 0.7, b, v, l).singularities().empty();
                } catch (const ParameterError&) {
                    continue;
                }
                CAPTURE(l);
                CHECK(poles == expected);
            }
        }
    }
}

TEST_CASE("switching midpoint") {
    CHECK(std::abs(switching_midpoint(make_undriven(1.0, 1.0, 1)).xi) < 1e-9);
    CHECK(std::abs(switching_midpoint(make_montroll(0.0, 1.0)).xi) < 1e-9);
    const LambdaFamily fam = figure_spec(1).family();
    LambdaFamily moved = fam;
    moved.xi0 = 2.5;
    for (double l : {0.125, 0.5, 10.0}) {
        const double a = switching_midpoint(fam.make(l)).xi;
        const double b = switching_midpoint(moved.make(l)).xi;
        CHECK(std::abs(b - a - 2.5) < 1e-9);
    }
    CHECK_THROWS_AS(switching_midpoint(make_undriven(1.0, 1.0, 4)), DomainMismatch);
    CHECK_THROWS_AS(switching_midpoint(make_undriven(1.0, 1.0, 1), 5.0, 10.0), NoCrossing);
}

TEST_CASE("midpoint regression baseline for the plotted lambda sets") {
    for (const Baseline& base : kBaselines) {
        const FigureSpec& f = figure_spec(base.fig);
        const DelayCurve curve =
            delay_curve(f.family(), std::vector<double>(f.lambdas.begin(), f.lambdas.end()));
        REQUIRE(curve.midpoints.size() == 4);
        CAPTURE(base.fig);
        for (int i = 0; i < 4; ++i) {
            CHECK(curve.midpoints[i] == doctest::Approx(base.midpoints[i]).epsilon(1e-6));
            CHECK_FALSE(curve.multiple_crossings[i]);
        }
        CHECK(curve.midpoint_inf == doctest::Approx(base.midpoint_inf).epsilon(1e-6));
        // Ordering over the plotted set is monotone toward the lambda -> infinity value.
        for (int i = 1; i < 4; ++i) {
            CHECK(std::abs(curve.midpoints[i] - curve.midpoint_inf) <
                  std::abs(curve.midpoints[i - 1] - curve.midpoint_inf));
        }
    }
}

TEST_CASE("delay saturates") {
    for (const FigureSpec& f : all_figures()) {
        const DelayCurve curve = delay_curve(f.family(), {10.0, 20.0, 40.0, 80.0});
        for (int i = 1; i < 4; ++i) {
            CHECK(std::abs(curve.midpoints[i] - curve.midpoint_inf) <
                  std::abs(curve.midpoints[i - 1] - curve.midpoint_inf));
        }
        CHECK(std::abs(curve.midpoints[3] - curve.midpoints[2]) <
              std::abs(curve.midpoints[1] - curve.midpoints[0]));
        const DelayCurve decades = delay_curve(f.family(), {1e1, 1e2, 1e3, 1e4});
        for (int i = 1; i < 4; ++i) {
            CHECK(std::abs(decades.midpoints[i] - decades.midpoint_inf) <
                  std::abs(decades.midpoints[i - 1] - decades.midpoint_inf));
        }
    }
}

TEST_CASE("delay_curve input handling") {
    const LambdaFamily fam = figure_spec(1).family();
    const DelayCurve one = delay_curve(fam, {0.5});
    CHECK(one.midpoints.size() == 1);
    const DelayCurve sorted = delay_curve(fam, {10.0, 0.5, 10.0, 0.2});
    CHECK(sorted.lambdas == std::vector<double>{0.2, 0.5, 10.0});
    try {
        delay_curve(fam, {0.05, 0.5, 0.1});
        FAIL("expected ForbiddenLambda");
    } catch (const ForbiddenLambda& e) {
        const std::string what = e.what();
        CHECK(what.find("0.05") != std::string::npos);
        CHECK(what.find("0.1") != std::string::npos);
        CHECK(what.find("0.5") == std::string::npos);
    }
}

TEST_CASE("figure parameter sets") {
    CHECK_THROWS_AS(figure_spec(5), ParameterError);
    CHECK_THROWS_AS(figure_spec(0), ParameterError);
    for (const FigureSpec& f : all_figures()) {
        CAPTURE(f.id);
        CHECK(std::abs(f.recomputed_rho() - f.quoted_rho) <= f.rho_tolerance);
        CHECK(f.xi0 == 0.0);
        const LambdaFamily fam = f.family();
        for (double l : f.lambdas) CHECK_FALSE(fam.forbidden(l));
    }
    CHECK(figure_spec(1).lambdas == std::array<double, 4>{0.125, 0.2, 0.5, 10.0});
    CHECK(figure_spec(2).lambdas == std::array<double, 4>{0.01, 0.1, 0.5, 10.0});
    CHECK(figure_spec(3).lambdas == std::array<double, 4>{0.77, 0.9, 2.0, 10.0});
    CHECK(figure_spec(4).lambdas == std::array<double, 4>{0.53, 0.6, 1.0, 10.0});
}
