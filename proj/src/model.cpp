#include "glkinks/model.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "glkinks/errors.hpp"

namespace glkinks {

namespace {

void require_positive(double A1, double B1) {
    if (!(A1 > 0.0)) {
        throw NonPositiveCoefficient("A1 must be positive (got " + std::to_string(A1) + ")");
    }
    if (!(B1 > 0.0)) {
        throw NonPositiveCoefficient("B1 must be positive (got " + std::to_string(B1) + ")");
    }
}

}  // namespace

std::string to_string(Sign s) { return s == Sign::plus ? "+" : "-"; }
std::string to_string(DrivenCase c) { return c == DrivenCase::I ? "I" : "II"; }

const ModelParams& validate_params(const ModelParams& p) {
    require_positive(p.A1, p.B1);
    return p;
}

double DrivenSetup::sqrt_delta() const { return std::sqrt(delta_eps); }

ModelParams DrivenSetup::model(double rho, double gamma1) const {
    return ModelParams{A1, B1, rho, gamma1, eta_times_gamma1 / gamma1};
}

DrivenSetup driven_setup(double A1, double B1, double epsilon) {
    require_positive(A1, B1);
    DrivenSetup s;
    s.A1 = A1;
    s.B1 = B1;
    s.epsilon = epsilon;
    s.eta_times_gamma1 = A1 * epsilon - B1 * epsilon * epsilon * epsilon;
    s.delta_eps = 4.0 * A1 - 3.0 * B1 * epsilon * epsilon;
    // epsilon typed at the boundary 2 sqrt(A1 / (3 B1)) leaves a few ulps of negative Delta.
    if (s.delta_eps < 0.0 && s.delta_eps >= -1e-14 * 4.0 * A1) s.delta_eps = 0.0;
    if (s.delta_eps < 0.0) {
        std::ostringstream msg;
        msg << "epsilon^2 = " << epsilon * epsilon << " exceeds 4 A1 / (3 B1) = "
            << 4.0 * A1 / (3.0 * B1) << "; factorization parameters are complex";
        throw ComplexDelta(msg.str());
    }
    const double root = std::sqrt(s.delta_eps);
    const double centre = 3.0 * std::sqrt(B1) * epsilon;
    s.r_plus = 0.5 * (centre + root);
    s.r_minus = 0.5 * (centre - root);
    s.alpha1 = s.r_plus / std::numbers::sqrt2;
    s.alpha2 = s.r_minus / std::numbers::sqrt2;
    return s;
}

double rho_case1(const DrivenSetup& setup, Sign front_sign) {
    return sign_value(front_sign) * (setup.r_minus - setup.sqrt_delta()) / std::numbers::sqrt2;
}

double rho_case2(const DrivenSetup& setup, Sign front_sign) {
    return sign_value(front_sign) * (setup.r_plus + setup.sqrt_delta()) / std::numbers::sqrt2;
}

double forced_rho(const DrivenSetup& setup, DrivenCase c, Sign front_sign) {
    return c == DrivenCase::I ? rho_case1(setup, front_sign) : rho_case2(setup, front_sign);
}

bool AdmissibleRange::contains(double x) const {
    const bool above = lower_open ? x > lower : x >= lower;
    const bool below = upper_open ? x < upper : x <= upper;
    return above && below;
}

bool AdmissibleRange::empty() const {
    if (lower < upper) return false;
    return !(lower == upper && !lower_open && !upper_open);
}

std::string AdmissibleRange::to_string() const {
    std::ostringstream out;
    out.precision(17);
    out << (lower_open ? '(' : '[') << lower << ", " << upper << (upper_open ? ')' : ']');
    return out.str();
}

AdmissibleRange epsilon_admissible_interval(double A1, double B1, DrivenCase c, Sign front_sign,
                                            bool require_positive_rho) {
    require_positive(A1, B1);
    const double unit = std::sqrt(A1 / B1);
    const double edge = 2.0 / std::sqrt(3.0) * unit;
    if (!require_positive_rho) return {-edge, edge, false, false};

    if (c == DrivenCase::I) {
        if (front_sign == Sign::plus) return {unit, edge, true, false};
        return {-edge, unit, false, true};
    }
    if (front_sign == Sign::plus) return {-unit, edge, true, false};
    return {-edge, -unit, false, true};
}

std::vector<EpsilonRoot> epsilon_from_field(double A1, double B1, double gamma1_eta) {
    require_positive(A1, B1);
    // B1 e^3 - A1 e + g = 0  ->  depressed cubic e^3 + p e + q = 0.
    const double p = -A1 / B1;
    const double q = gamma1_eta / B1;
    std::vector<double> roots;
    const double disc = q * q / 4.0 + p * p * p / 27.0;
    if (disc > 0.0) {
        const double s = std::sqrt(disc);
        roots.push_back(std::cbrt(-q / 2.0 + s) + std::cbrt(-q / 2.0 - s));
    } else {
        const double m = 2.0 * std::sqrt(-p / 3.0);
        const double arg = std::clamp(3.0 * q / (p * m), -1.0, 1.0);
        const double theta = std::acos(arg) / 3.0;
        for (int k = 0; k < 3; ++k) {
            roots.push_back(m * std::cos(theta - 2.0 * std::numbers::pi * k / 3.0));
        }
    }
    // One Newton polish per root; the trigonometric form loses a few digits near double roots.
    for (double& e : roots) {
        const double f = B1 * e * e * e - A1 * e + gamma1_eta;
        const double df = 3.0 * B1 * e * e - A1;
        if (df != 0.0) e -= f / df;
    }
    std::sort(roots.begin(), roots.end());
    std::vector<EpsilonRoot> out;
    out.reserve(roots.size());
    for (double e : roots) {
        out.push_back({e, 4.0 * A1 - 3.0 * B1 * e * e >= 0.0});
    }
    return out;
}

ModelParams map_condon_params(const CondonParams& c) {
    if (!(c.K > 0.0) || !(c.Gamma > 0.0)) {
        throw NonPositiveCoefficient("Condon K and Gamma must be positive");
    }
    if (c.k_field == 0.0) throw ParameterError("Condon k_field must be nonzero");
    ModelParams p;
    p.rho = c.v / (c.K * c.Gamma);
    p.A1 = c.A / c.K;
    p.B1 = c.B / c.K;
    p.gamma1 = c.a_field / c.k_field;
    p.eta = 0.0;
    return validate_params(p);
}

}  // namespace glkinks
