#include "glkinks/factorization.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "glkinks/errors.hpp"

namespace glkinks {

namespace {
constexpr double kRootTolerance = 1e-12;
}

OddCubic OddCubic::shifted(const DrivenSetup& s) {
    return {s.A1 - 3.0 * s.B1 * s.epsilon * s.epsilon, 3.0 * s.B1 * s.epsilon, -s.B1};
}

MontrollRoots montroll_roots(double a, double b, double d) {
    std::array<double, 3> got{a, b, d};
    std::sort(got.begin(), got.end());
    const std::array<double, 3> want{-1.0, 0.0, 1.0};
    bool valid = true;
    for (std::size_t i = 0; i < 3; ++i) {
        valid = valid && std::abs(got[i] - want[i]) <= kRootTolerance;
    }
    return {(b - a) / std::numbers::sqrt2, valid};
}

FactorPair factor_undriven(double A1, double B1, Variant variant, Sign sign) {
    validate_params(ModelParams{A1, B1});
    const double s = sign_value(sign);
    const double sa = std::sqrt(A1);
    const double sb = std::sqrt(B1);
    const double r2 = std::numbers::sqrt2;

    // Both bracket signs are taken together (upper/upper or lower/lower).
    FactorPair fp;
    fp.F = OddCubic::undriven(A1, B1);
    fp.a1_factor = sign;
    fp.forced_rho = s * 3.0 * sa / r2;
    if (variant == Variant::first) {
        fp.f2_slope = -s * r2 * sb;
        fp.f2_offset = -s * r2 * sa;
        fp.f1_slope = s * sb / r2;
        fp.f1_offset = -s * sa / r2;
        fp.kind = ParticularKind::undriven_bounded;
    } else {
        fp.f2_slope = s * r2 * sb;
        fp.f2_offset = -s * r2 * sa;
        fp.f1_slope = -s * sb / r2;
        fp.f1_offset = -s * sa / r2;
        fp.kind = ParticularKind::undriven_singular;
    }
    return fp;
}

FactorPair factor_driven(const DrivenSetup& setup, DrivenCase c, Sign sign) {
    if (setup.delta_eps < 0.0) throw ComplexDelta("delta_eps < 0");
    const double s = sign_value(sign);
    const double sb = std::sqrt(setup.B1);
    const double r2 = std::numbers::sqrt2;
    // f1 = a1 i (sqrt(B1) phi - r_a), f2 = a1^-1 i (sqrt(B1) phi - r_b), a1 = s i / sqrt(2).
    const double r_a = c == DrivenCase::I ? setup.r_plus : setup.r_minus;
    const double r_b = c == DrivenCase::I ? setup.r_minus : setup.r_plus;

    FactorPair fp;
    fp.F = OddCubic::shifted(setup);
    fp.a1_factor = sign;
    fp.f1_slope = -s * sb / r2;
    fp.f1_offset = s * r_a / r2;
    fp.f2_slope = s * r2 * sb;
    fp.f2_offset = -s * r2 * r_b;
    fp.forced_rho = forced_rho(setup, c, sign);
    fp.kind = c == DrivenCase::I ? ParticularKind::driven_case_i : ParticularKind::driven_case_ii;
    return fp;
}

RiccatiCoefficients compatible_riccati(const FactorPair& fp) {
    // [D - f1] psi = 0  <=>  psi' = f1_slope psi^2 + f1_offset psi
    return {fp.f1_slope, fp.f1_offset, fp.kind};
}

}  // namespace glkinks
