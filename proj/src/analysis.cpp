#include "glkinks/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "glkinks/errors.hpp"

namespace glkinks {

LambdaDomain lambda_forbidden_interval(const DrivenSetup& setup, DrivenCase c, Sign branch) {
    const double r = c == DrivenCase::I ? setup.r_plus : setup.r_minus;
    if (r == 0.0) throw NonPositiveRate("r = 0: no lambda-kinks for this setup");
    LambdaDomain d;
    d.driven_case = c;
    d.branch = branch;
    d.bound_value = std::sqrt(setup.B1) / (2.0 * r);
    const double end = branch == Sign::plus ? d.bound_value : -d.bound_value;
    if (end > 0.0) d.forbidden = {0.0, end, true, false};
    else d.forbidden = {end, 0.0, false, true};
    return d;
}

namespace {

template <class F>
double bisect(F f, double a, double b, double fa, double tolerance) {
    while (b - a > tolerance) {
        const double m = 0.5 * (a + b);
        const double fm = f(m);
        if (fm == 0.0) return m;
        if ((fm < 0.0) == (fa < 0.0)) {
            a = m;
            fa = fm;
        } else {
            b = m;
        }
    }
    return 0.5 * (a + b);
}

// Roots of f on [lo, hi] from sign changes on an n-point grid.
template <class F>
std::vector<double> grid_roots(F f, double lo, double hi, std::size_t n, double tolerance) {
    std::vector<double> roots;
    double x_prev = lo;
    double f_prev = f(lo);
    if (f_prev == 0.0) roots.push_back(lo);
    for (std::size_t i = 1; i < n; ++i) {
        const double x = i + 1 == n ? hi : lo + (hi - lo) * static_cast<double>(i) / (n - 1);
        const double fx = f(x);
        if (fx == 0.0) {
            roots.push_back(x);
        } else if (f_prev != 0.0 && (fx < 0.0) != (f_prev < 0.0)) {
            roots.push_back(bisect(f, x_prev, x, f_prev, tolerance));
        }
        x_prev = x;
        f_prev = fx;
    }
    return roots;
}

}  // namespace

std::vector<AdmissibleRange> zero_field_forbidden_lambda(double A1, Sign branch,
                                                        Variant variant) {
    if (!(A1 > 0.0)) throw NonPositiveCoefficient("A1 must be positive");
    // Pole where e^{-+a s} = -lambda sqrt(A1) / (sv sqrt(B1) (lambda sqrt(A1) +- 1)) is positive.
    const double degenerate = (branch == Sign::plus ? -1.0 : 1.0) / std::sqrt(A1);
    const double lo = std::min(0.0, degenerate);
    const double hi = std::max(0.0, degenerate);
    const double inf = std::numeric_limits<double>::infinity();
    if (variant == Variant::second) return {AdmissibleRange{lo, hi, true, true}};
    return {AdmissibleRange{-inf, lo, true, true}, AdmissibleRange{hi, inf, true, true}};
}

std::vector<double> singularity_scan(const KinkSolution& solution, double lo, double hi,
                                     std::size_t n, double tolerance) {
    if (!(lo < hi) || n < 2) throw ParameterError("singularity scan needs lo < hi and n >= 2");
    return grid_roots([&](double xi) { return solution.inner_denominator(xi); }, lo, hi, n,
                      tolerance);
}

std::vector<double> singularity_scan(const KinkSolution& solution) {
    const double half = 40.0 * solution.width();
    return singularity_scan(solution, solution.xi0() - half, solution.xi0() + half);
}

Midpoint switching_midpoint(const KinkSolution& solution, std::optional<double> lo,
                            std::optional<double> hi) {
    const double half = 40.0 * solution.width();
    const double a = lo.value_or(solution.xi0() - half);
    const double b = hi.value_or(solution.xi0() + half);
    if (solution.left_limit() == solution.right_limit()) {
        throw NoCrossing("profile has equal limits; no switching midpoint");
    }
    for (double p : solution.singularities()) {
        if (p >= a && p <= b) {
            throw DomainMismatch(solution.name() + " has a pole inside the midpoint search range");
        }
    }
    const double mid = 0.5 * (solution.left_limit() + solution.right_limit());
    const auto roots =
        grid_roots([&](double xi) { return solution.raw(xi) - mid; }, a, b, 10000, 1e-10);
    if (roots.empty()) throw NoCrossing(solution.name() + " never reaches its midpoint in range");
    return {*std::max_element(roots.begin(), roots.end()), roots.size()};
}

KinkSolution LambdaFamily::make(double lambda) const {
    if (driven) {
        return make_lambda_driven(driven_setup(A1, B1, epsilon), driven_case, branch, lambda, xi0);
    }
    return make_lambda_zero_field(A1, B1, branch, variant, lambda, xi0);
}

KinkSolution LambdaFamily::particular() const {
    if (driven) return make_driven(driven_setup(A1, B1, epsilon), driven_case, branch, xi0);
    return make_undriven(A1, B1, zero_field_particular_index(branch, variant), xi0);
}

bool LambdaFamily::forbidden(double lambda) const {
    if (driven) {
        const auto domain =
            lambda_forbidden_interval(driven_setup(A1, B1, epsilon), driven_case, branch);
        if (domain.forbidden.contains(lambda)) return true;
    }
    try {
        return !make(lambda).singularities().empty();
    } catch (const ParameterError&) {
        return true;
    }
}

std::string LambdaFamily::describe() const {
    std::ostringstream out;
    out.precision(17);
    if (driven) {
        out << "lambda-driven case=" << to_string(driven_case) << " branch=" << to_string(branch)
            << " A1=" << A1 << " B1=" << B1 << " epsilon=" << epsilon;
    } else {
        out << "lambda-zero branch=" << to_string(branch) << " variant=" << to_string(variant)
            << " A1=" << A1 << " B1=" << B1;
    }
    out << " xi0=" << xi0;
    return out.str();
}

DelayCurve delay_curve(const LambdaFamily& family, std::vector<double> lambdas) {
    std::sort(lambdas.begin(), lambdas.end());
    lambdas.erase(std::unique(lambdas.begin(), lambdas.end()), lambdas.end());
    std::vector<double> bad;
    for (double l : lambdas) {
        if (family.forbidden(l)) bad.push_back(l);
    }
    if (!bad.empty()) {
        std::ostringstream msg;
        msg << "forbidden lambda:";
        for (double l : bad) msg << ' ' << l;
        throw ForbiddenLambda(msg.str());
    }
    DelayCurve curve;
    curve.lambdas = lambdas;
    for (double l : lambdas) {
        const auto m = switching_midpoint(family.make(l));
        curve.midpoints.push_back(m.xi);
        curve.multiple_crossings.push_back(m.multiple());
    }
    curve.midpoint_inf = switching_midpoint(family.particular()).xi;
    return curve;
}

}  // namespace glkinks
