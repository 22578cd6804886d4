#pragma once

#include <array>

#include "glkinks/model.hpp"

namespace glkinks {

/// Cubic without constant term, F(x) = c1 x + c2 x^2 + c3 x^3.
struct OddCubic {
    double c1 = 0.0;
    double c2 = 0.0;
    double c3 = 0.0;

    double operator()(double x) const { return x * (c1 + x * (c2 + x * c3)); }

    static OddCubic undriven(double A1, double B1) { return {A1, 0.0, -B1}; }
    /// F(phi) = -phi (B1 phi^2 - 3 B1 eps phi + 3 B1 eps^2 - A1) after the epsilon shift.
    static OddCubic shifted(const DrivenSetup& s);
};

enum class Variant { first, second };

/// Which closed-form particular solution the compatible first-order equation has.
enum class ParticularKind { undriven_bounded, undriven_singular, driven_case_i, driven_case_ii };

/// Factorization [D - f2][D - f1] psi = 0 of  psi'' + rho psi' + F(psi) = 0 with f1, f2
/// linear in psi. The imaginary prefactor a1 = +-i/sqrt(2) of the driven factors has
/// already been multiplied out; only its sign is kept.
struct FactorPair {
    double f1_slope = 0.0;
    double f1_offset = 0.0;
    double f2_slope = 0.0;
    double f2_offset = 0.0;
    Sign a1_factor = Sign::plus;
    double forced_rho = 0.0;
    OddCubic F;
    ParticularKind kind = ParticularKind::undriven_bounded;

    double f1(double x) const { return f1_slope * x + f1_offset; }
    double f2(double x) const { return f2_slope * x + f2_offset; }
    /// f1(x) f2(x) x - F(x); vanishes identically for a valid pair.
    double product_defect(double x) const { return f1(x) * f2(x) * x - F(x); }
    /// f2 + d(f1 x)/dx + rho; vanishes identically for a valid pair.
    double sum_defect(double x) const { return f2(x) + f1(x) + x * f1_slope + forced_rho; }
};

/// Compatible equation y' = c1 y^2 + c2 y.
struct RiccatiCoefficients {
    double c1 = 0.0;
    double c2 = 0.0;
    ParticularKind y_particular_kind = ParticularKind::undriven_bounded;

    double rhs(double y) const { return y * (c1 * y + c2); }
    double nontrivial_fixed_point() const { return -c2 / c1; }
};

struct MontrollRoots {
    double alpha;
    bool valid;
};

/// alpha = (b - a)/sqrt(2); valid iff {a, b, d} is a permutation of the roots {-1, 0, 1}
/// of psi^3 - psi.
MontrollRoots montroll_roots(double a, double b, double d);

/// Zero-field factorizations. Variant first: f1 ~ (sqrt(A1) - sqrt(B1) psi);
/// variant second: f1 ~ (sqrt(A1) + sqrt(B1) psi). Both force rho = +-(3/sqrt2) sqrt(A1).
FactorPair factor_undriven(double A1, double B1, Variant variant, Sign sign);

/// Factorizations of the epsilon-shifted equation. Case I pairs f1 with r_plus,
/// Case II with r_minus.
FactorPair factor_driven(const DrivenSetup& setup, DrivenCase c, Sign sign);

RiccatiCoefficients compatible_riccati(const FactorPair& fp);

}  // namespace glkinks
