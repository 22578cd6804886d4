#include "glkinks/kinks.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "glkinks/errors.hpp"

namespace glkinks {

namespace {

constexpr double kSqrt2 = std::numbers::sqrt2;

using std::exp;

double rate_or_throw(double r) {
    if (r == 0.0) throw NonPositiveRate("driving root r is zero; the profile is constant");
    return r / kSqrt2;
}

// Limits of  num / (c + exp(kappa s))  for s -> -inf and s -> +inf.
std::pair<double, double> logistic_limits(double num, double c, double kappa) {
    const double big_side = 0.0;
    const double small_side = num / c;
    return kappa > 0.0 ? std::pair{small_side, big_side} : std::pair{big_side, small_side};
}

// s = log(x) / k if x > 0.
std::vector<double> pole_from_exponential(double x, double k, double xi0) {
    if (x > 0.0 && std::isfinite(x)) return {xi0 + std::log(x) / k};
    return {};
}

}  // namespace

std::string to_string(Family f) {
    switch (f) {
        case Family::montroll: return "montroll";
        case Family::undriven: return "undriven";
        case Family::driven: return "driven";
        case Family::lambda_zero_field: return "lambda-zero";
        case Family::lambda_driven: return "lambda-driven";
    }
    return "?";
}

std::string to_string(Variant v) { return v == Variant::first ? "first" : "second"; }

UndrivenFactor undriven_factor_for_index(int index) {
    switch (index) {
        case 1: return {Variant::first, Sign::plus};
        case 2: return {Variant::first, Sign::minus};
        case 3: return {Variant::second, Sign::minus};
        case 4: return {Variant::second, Sign::plus};
        default: throw ParameterError("undriven index must be 1..4, got " + std::to_string(index));
    }
}

int zero_field_particular_index(Sign branch, Variant variant) {
    if (branch == Sign::plus) return variant == Variant::first ? 4 : 1;
    return variant == Variant::first ? 3 : 2;
}

// ---------------------------------------------------------------------------
// Closed forms. Every family is written as psi = num / den + rest; poles are the
// real roots of den.

template <class T>
KinkSolution::Parts<T> KinkSolution::parts(T xi) const {
    const T s = xi - T(xi0_);
    const T one(1.0);
    const T two(2.0);
    switch (family_) {
        case Family::montroll: {
            const T alpha((b_ - a_) / kSqrt2);
            return {T(kSqrt2) * alpha, one + exp(alpha * s), T(a_)};
        }
        case Family::undriven: {
            const T sa(std::sqrt(params_.A1));
            const T sb(std::sqrt(params_.B1));
            const T k(rate_);
            switch (index_) {
                case 1: return {sa, sb + exp(k * s), T(0.0)};
                case 2: return {sa, sb + exp(-k * s), T(0.0)};
                case 3: return {sa, -sb + exp(-k * s), T(0.0)};
                default: return {sa, -sb + exp(k * s), T(0.0)};
            }
        }
        case Family::driven: {
            const T sb(std::sqrt(params_.B1));
            const T k(branch_ == Sign::plus ? -rate_ : rate_);
            return {two * T(r_) / sb, two + exp(k * s), T(-shift_)};
        }
        case Family::lambda_zero_field: {
            // Bracketed formulas multiplied through; the pole of the particular
            // solution cancels against the bracket.
            const T sa(std::sqrt(params_.A1));
            const T sb((variant_ == Variant::first ? -1.0 : 1.0) * std::sqrt(params_.B1));
            const T la(*lambda_ * std::sqrt(params_.A1));
            const T alpha(rate_);
            if (branch_ == Sign::plus) {
                // sqrt(A1)(lambda sqrt(A1) + 1) E / (lambda sqrt(A1)(1 + sb E) + sb E), E = e^{-alpha s}
                const T E = exp(-alpha * s);
                const T c = sa * (la + one);
                if (value_of(E) <= 1.0) return {c * E, la + sb * E * (la + one), T(0.0)};
                const T inv = exp(alpha * s);
                return {c, la * inv + sb * (la + one), T(0.0)};
            }
            // lambda A1 G / (lambda sqrt(A1)(1 + sb G) - 1), G = e^{alpha s}
            const T G = exp(alpha * s);
            const T c = la * sa;
            if (value_of(G) <= 1.0) return {c * G, la - one + la * sb * G, T(0.0)};
            const T inv = exp(-alpha * s);
            return {c, (la - one) * inv + la * sb, T(0.0)};
        }
        case Family::lambda_driven: {
            // Bracketed formulas multiplied through:
            //   branch +: 4 lambda r^2 / (sqrt(B1) (4 lambda r + (2 lambda r - sqrt(B1)) E)), E = e^{-a s}
            //   branch -: 2 r (2 lambda r + sqrt(B1)) / (sqrt(B1) (2 lambda r G + 2 (2 lambda r + sqrt(B1)))),
            //             G = e^{a s}
            const double sb = std::sqrt(params_.B1);
            const double lr = 2.0 * *lambda_ * r_;
            const T a(rate_);
            const T rest(-shift_);
            if (branch_ == Sign::plus) {
                const T num(2.0 * lr * r_);
                const T c0(2.0 * lr * sb);
                const T c1((lr - sb) * sb);
                const T E = exp(-a * s);
                if (value_of(E) <= 1.0) return {num, c0 + c1 * E, rest};
                const T inv = exp(a * s);
                return {num * inv, c0 * inv + c1, rest};
            }
            const T num(2.0 * r_ * (lr + sb));
            const T c0(2.0 * (lr + sb) * sb);
            const T c1(lr * sb);
            const T G = exp(a * s);
            if (value_of(G) <= 1.0) return {num, c0 + c1 * G, rest};
            const T inv = exp(-a * s);
            return {num * inv, c0 * inv + c1, rest};
        }
    }
    return {T(0.0), T(1.0), T(0.0)};
}

double KinkSolution::raw(double xi) const {
    const auto p = parts(xi);
    return p.num / p.den + p.rest;
}

long double KinkSolution::raw_extended(long double xi) const {
    const auto p = parts(xi);
    return p.num / p.den + p.rest;
}

Jet<double> KinkSolution::jet(double xi) const {
    const auto p = parts(Jet<double>::variable(xi));
    return p.num / p.den + p.rest;
}

double KinkSolution::inner_denominator(double xi) const { return parts(xi).den; }

bool KinkSolution::is_singular(double xi) const {
    const auto p = parts(xi);
    return !(std::abs(p.den) >= kSingularTolerance * (1.0 + std::abs(p.num)));
}

std::optional<double> KinkSolution::try_value(double xi) const {
    const auto p = parts(xi);
    if (!(std::abs(p.den) >= kSingularTolerance * (1.0 + std::abs(p.num)))) return std::nullopt;
    return p.num / p.den + p.rest;
}

double KinkSolution::operator()(double xi) const {
    if (auto v = try_value(xi)) return *v;
    throw SingularPoint(xi);
}

double KinkSolution::k1() const {
    const double k = std::sqrt(params_.A1) / kSqrt2;
    const bool upper = family_ != Family::undriven || index_ == 1 || index_ == 4;
    return std::exp((upper ? -k : k) * xi0_);
}

RiccatiCoefficients KinkSolution::riccati() const {
    switch (family_) {
        case Family::montroll:
            if (a_ == 0.0) return {1.0 / kSqrt2, -b_ / kSqrt2, ParticularKind::undriven_bounded};
            if (b_ == 0.0) return {1.0 / kSqrt2, -a_ / kSqrt2, ParticularKind::undriven_bounded};
            throw DomainMismatch("Montroll kink without a zero root has no y' = c1 y^2 + c2 y form");
        case Family::undriven: {
            const auto f = undriven_factor_for_index(index_);
            return compatible_riccati(factor_undriven(params_.A1, params_.B1, f.variant, f.sign));
        }
        case Family::lambda_zero_field:
            return particular().riccati();
        case Family::driven:
        case Family::lambda_driven:
            return compatible_riccati(factor_driven(*setup_, case_, branch_));
    }
    return {};
}

KinkSolution KinkSolution::particular() const {
    switch (family_) {
        case Family::lambda_zero_field:
            return make_undriven(params_.A1, params_.B1,
                                 zero_field_particular_index(branch_, variant_), xi0_);
        case Family::lambda_driven:
            return make_driven(*setup_, case_, branch_, xi0_, params_.gamma1);
        default:
            return *this;
    }
}

std::optional<double> KinkSolution::general_lambda() const {
    if (!lambda_) return std::nullopt;
    const double jump = riccati_value(xi0_) - particular().riccati_value(xi0_);
    if (jump == 0.0) return std::nullopt;
    return 1.0 / jump;
}

std::string KinkSolution::name() const {
    std::ostringstream out;
    switch (family_) {
        case Family::montroll: out << "montroll(" << a_ << "," << b_ << ")"; break;
        case Family::undriven: out << "psi" << index_; break;
        case Family::driven: out << "driven-" << to_string(case_) << to_string(branch_); break;
        case Family::lambda_zero_field:
            out << "lambda-zero" << to_string(branch_) << "-" << to_string(variant_)
                << "(lambda=" << *lambda_ << ")";
            break;
        case Family::lambda_driven:
            out << "lambda-" << to_string(case_) << to_string(branch_) << "(lambda=" << *lambda_
                << ")";
            break;
    }
    return out.str();
}

// ---------------------------------------------------------------------------

KinkSolution make_montroll(double a, double b, double xi0) {
    if (a == b) throw ParameterError("Montroll kink needs two distinct roots");
    const double d = -(a + b);
    if (!montroll_roots(a, b, d).valid) {
        throw ParameterError("Montroll roots must be two of {-1, 0, 1}");
    }
    KinkSolution k;
    k.family_ = Family::montroll;
    k.a_ = a;
    k.b_ = b;
    k.d_ = d;
    k.xi0_ = xi0;
    // Matching psi' = (psi - a)(psi - b)/sqrt(2) against the second-order equation.
    k.params_ = ModelParams{1.0, 1.0, -3.0 * d / kSqrt2, 1.0, 0.0};
    const double alpha = (b - a) / kSqrt2;
    k.width_inverse_ = std::abs(alpha);
    k.left_limit_ = alpha > 0.0 ? b : a;
    k.right_limit_ = alpha > 0.0 ? a : b;
    return k;
}

KinkSolution make_undriven(double A1, double B1, int index, double xi0) {
    validate_params(ModelParams{A1, B1});
    const auto factor = undriven_factor_for_index(index);
    KinkSolution k;
    k.family_ = Family::undriven;
    k.index_ = index;
    k.variant_ = factor.variant;
    k.branch_ = factor.sign;
    k.xi0_ = xi0;
    k.params_ = ModelParams{A1, B1, factor_undriven(A1, B1, factor.variant, factor.sign).forced_rho,
                            1.0, 0.0};
    k.rate_ = std::sqrt(A1) / kSqrt2;
    k.width_inverse_ = k.rate_;
    const double sa = std::sqrt(A1);
    const double sb = std::sqrt(B1);
    switch (index) {
        case 1: std::tie(k.left_limit_, k.right_limit_) = logistic_limits(sa, sb, 1.0); break;
        case 2: std::tie(k.left_limit_, k.right_limit_) = logistic_limits(sa, sb, -1.0); break;
        case 3:
            std::tie(k.left_limit_, k.right_limit_) = logistic_limits(sa, -sb, -1.0);
            k.singularities_ = pole_from_exponential(sb, -k.rate_, xi0);
            break;
        default:
            std::tie(k.left_limit_, k.right_limit_) = logistic_limits(sa, -sb, 1.0);
            k.singularities_ = pole_from_exponential(sb, k.rate_, xi0);
            break;
    }
    return k;
}

KinkSolution make_driven(const DrivenSetup& setup, DrivenCase c, Sign sign, double xi0,
                         double gamma1) {
    if (setup.delta_eps < 0.0) throw ComplexDelta("delta_eps < 0");
    KinkSolution k;
    k.family_ = Family::driven;
    k.case_ = c;
    k.branch_ = sign;
    k.setup_ = setup;
    k.xi0_ = xi0;
    k.params_ = setup.model(forced_rho(setup, c, sign), gamma1);
    k.r_ = c == DrivenCase::I ? setup.r_plus : setup.r_minus;
    k.rate_ = rate_or_throw(k.r_);
    k.width_inverse_ = std::abs(k.rate_);
    k.shift_ = setup.epsilon;
    const double kappa = sign == Sign::plus ? -k.rate_ : k.rate_;
    const auto [l, r] = logistic_limits(2.0 * k.r_ / std::sqrt(setup.B1), 2.0, kappa);
    k.left_limit_ = l - setup.epsilon;
    k.right_limit_ = r - setup.epsilon;
    return k;
}

KinkSolution make_lambda_zero_field(double A1, double B1, Sign branch, Variant variant,
                                    double lambda, double xi0) {
    validate_params(ModelParams{A1, B1});
    if (lambda == 0.0 || !std::isfinite(lambda)) {
        throw ParameterError("lambda must be finite and nonzero");
    }
    const double la = lambda * std::sqrt(A1);
    if ((branch == Sign::plus && la == -1.0) || (branch == Sign::minus && la == 1.0)) {
        throw ParameterError("degenerate lambda: the profile reduces to an equilibrium");
    }
    KinkSolution k = make_undriven(A1, B1, zero_field_particular_index(branch, variant), xi0);
    k.family_ = Family::lambda_zero_field;
    k.index_ = 0;
    k.branch_ = branch;
    k.variant_ = variant;
    k.lambda_ = lambda;
    const double sb = (variant == Variant::first ? -1.0 : 1.0) * std::sqrt(B1);
    if (branch == Sign::plus) {
        k.singularities_ = pole_from_exponential(-la / (sb * (la + 1.0)), -k.rate_, xi0);
    } else {
        k.singularities_ = pole_from_exponential((1.0 - la) / (la * sb), k.rate_, xi0);
    }
    return k;
}

KinkSolution make_lambda_driven(const DrivenSetup& setup, DrivenCase c, Sign branch, double lambda,
                                double xi0, double gamma1) {
    if (lambda == 0.0 || !std::isfinite(lambda)) {
        throw ParameterError("lambda must be finite and nonzero");
    }
    KinkSolution k = make_driven(setup, c, branch, xi0, gamma1);
    const double sb = std::sqrt(setup.B1);
    const double lr = 2.0 * lambda * k.r_;
    if ((branch == Sign::plus && lr == sb) || (branch == Sign::minus && lr == -sb)) {
        throw ParameterError("degenerate lambda: the profile reduces to an equilibrium");
    }
    k.family_ = Family::lambda_driven;
    k.lambda_ = lambda;
    if (branch == Sign::plus) {
        k.singularities_ = pole_from_exponential(0.5 * (sb / lr - 1.0), k.rate_, xi0);
    } else {
        k.singularities_ = pole_from_exponential(-lr / (2.0 * lr + 2.0 * sb), -k.rate_, xi0);
    }
    return k;
}

// ---------------------------------------------------------------------------

double montroll_kink(double a, double b, double xi) { return make_montroll(a, b)(xi); }

double undriven_kink(const ModelParams& params, int index, double xi0, double xi) {
    return make_undriven(params.A1, params.B1, index, xi0)(xi);
}

double driven_kink(const DrivenSetup& setup, DrivenCase c, Sign sign, double xi0, double xi) {
    return make_driven(setup, c, sign, xi0)(xi);
}

double lambda_kink_zero_field(const ModelParams& params, Sign branch, Variant variant,
                              double lambda, double xi0, double xi) {
    return make_lambda_zero_field(params.A1, params.B1, branch, variant, lambda, xi0)(xi);
}

double lambda_kink_driven(const DrivenSetup& setup, DrivenCase c, Sign branch, double lambda,
                          double xi0, double xi) {
    return make_lambda_driven(setup, c, branch, lambda, xi0)(xi);
}

double lambda_kink_driven_bracketed(const DrivenSetup& setup, DrivenCase c, Sign branch,
                                    double lambda, double xi0, double xi) {
    const double r = c == DrivenCase::I ? setup.r_plus : setup.r_minus;
    const double a = r / kSqrt2;
    const double sb = std::sqrt(setup.B1);
    const double s = xi - xi0;
    double phi = 0.0;
    if (branch == Sign::plus) {
        phi = 2.0 * r / (2.0 + std::exp(-a * s)) *
              (1.0 / sb + 1.0 / (2.0 * lambda * r * (1.0 + 2.0 * std::exp(a * s)) - sb));
    } else {
        phi = 2.0 * r / (2.0 + std::exp(a * s)) *
              (1.0 / sb + 1.0 / (2.0 * lambda * r * (1.0 + 2.0 * std::exp(-a * s)) +
                                 2.0 * sb * std::exp(-a * s)));
    }
    return phi - setup.epsilon;
}

double lambda_kink_zero_field_bracketed(double A1, double B1, Sign branch, Variant variant,
                                        double lambda, double xi0, double xi) {
    const double sa = std::sqrt(A1);
    const double sb = (variant == Variant::first ? -1.0 : 1.0) * std::sqrt(B1);
    const double alpha = sa / kSqrt2;
    const double s = xi - xi0;
    if (branch == Sign::plus) {
        const double em = std::exp(-alpha * s);
        return sa / (sb + std::exp(alpha * s)) *
               (1.0 + 1.0 / (lambda * sa * (1.0 + sb * em) + sb * em));
    }
    const double ep = std::exp(alpha * s);
    return sa / (sb + std::exp(-alpha * s)) * (1.0 + 1.0 / (lambda * sa * (1.0 + sb * ep) - 1.0));
}

RiccatiIntegrals riccati_integrals(const RiccatiCoefficients& coeffs, double y1_at_xi0,
                                   double y1_at_xi, double xi0, double xi) {
    // With y1'/y1 = c1 y1 + c2:  I1 = 2 ln(y1/y1(xi0)) - c2 s, and e^{I1} is the derivative
    // of y1 (1 - e^{-c2 s}) / (c2 y1(xi0)).
    const double s = xi - xi0;
    const double c2 = coeffs.c2;
    const double ratio = y1_at_xi / y1_at_xi0;
    const double damping = c2 == 0.0 ? s : -std::expm1(-c2 * s) / c2;
    return {ratio * ratio * std::exp(-c2 * s), ratio * damping};
}

double general_riccati(const RiccatiCoefficients& coeffs, const std::function<double(double)>& y1,
                       double lambda, double xi0, double xi) {
    if (coeffs.c1 == 0.0) throw ParameterError("c1 must be nonzero");
    const double y0 = y1(xi0);
    if (y0 == 0.0) throw DomainMismatch("particular solution vanishes at the base point");
    const double y = y1(xi);
    const auto ints = riccati_integrals(coeffs, y0, y, xi0, xi);
    const double den = lambda - coeffs.c1 * ints.i2;
    if (!(std::abs(den) >= kSingularTolerance * (1.0 + std::abs(ints.exp_i1)))) {
        throw SingularPoint(xi);
    }
    return y + ints.exp_i1 / den;
}

}  // namespace glkinks
