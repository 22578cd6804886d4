#pragma once

#include <optional>
#include <string>
#include <vector>

#include "glkinks/kinks.hpp"
#include "glkinks/model.hpp"

namespace glkinks {

/// Values of lambda for which a driven lambda-kink has a real pole.
struct LambdaDomain {
    DrivenCase driven_case = DrivenCase::I;
    Sign branch = Sign::plus;
    AdmissibleRange forbidden;
    /// sqrt(B1) / (2 r), with r = r_plus (Case I) or r_minus (Case II); signed.
    double bound_value = 0.0;
};

/// Branch + forbids lambda between 0 and sqrt(B1)/(2r), branch - between -sqrt(B1)/(2r)
/// and 0, closed at the nonzero end. For r > 0 these are (0, b] and [-b, 0); a negative r
/// mirrors the interval. Throws NonPositiveRate for r == 0.
LambdaDomain lambda_forbidden_interval(const DrivenSetup& setup, DrivenCase c, Sign branch);

/// Lambda values giving a zero-field lambda-kink a real pole. The endpoints are 0 and the
/// degenerate value -+1/sqrt(A1), both excluded; variant first gets the complement of
/// variant second's interval.
std::vector<AdmissibleRange> zero_field_forbidden_lambda(double A1, Sign branch, Variant variant);

/// Real roots of the solution's inner denominator in [lo, hi]: sign changes on an n-point
/// grid refined by bisection to `tolerance`.
std::vector<double> singularity_scan(const KinkSolution& solution, double lo, double hi,
                                     std::size_t n = 10000, double tolerance = 1e-10);
/// Scan over xi0 +- 40 widths.
std::vector<double> singularity_scan(const KinkSolution& solution);

struct Midpoint {
    double xi;
    /// Number of crossings found; the reported xi is the largest one.
    std::size_t crossings;
    bool multiple() const { return crossings > 1; }
};

/// Where the profile crosses (left_limit + right_limit)/2. Search range defaults to
/// xi0 +- 40 widths. Throws NoCrossing, or DomainMismatch when a pole lies in range.
Midpoint switching_midpoint(const KinkSolution& solution, std::optional<double> lo = std::nullopt,
                            std::optional<double> hi = std::nullopt);

/// A lambda-kink family with everything but lambda fixed.
struct LambdaFamily {
    bool driven = true;
    double A1 = 1.0;
    double B1 = 1.0;
    double epsilon = 0.0;
    DrivenCase driven_case = DrivenCase::I;
    Sign branch = Sign::plus;
    Variant variant = Variant::second;  // zero-field only
    double xi0 = 0.0;

    KinkSolution make(double lambda) const;
    KinkSolution particular() const;
    /// True when the lambda-kink has a real pole (or lambda is degenerate).
    bool forbidden(double lambda) const;
    std::string describe() const;
};

struct DelayCurve {
    std::vector<double> lambdas;
    std::vector<double> midpoints;
    std::vector<bool> multiple_crossings;
    double midpoint_inf = 0.0;
};

/// Midpoints for each lambda (sorted ascending, duplicates dropped) and for the particular
/// kink. Throws ForbiddenLambda naming every forbidden lambda.
DelayCurve delay_curve(const LambdaFamily& family, std::vector<double> lambdas);

}  // namespace glkinks
