#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "glkinks/factorization.hpp"
#include "glkinks/jet.hpp"
#include "glkinks/model.hpp"

namespace glkinks {

enum class Family { montroll, undriven, driven, lambda_zero_field, lambda_driven };

/// Relative pole test shared by every family: |den| < 1e-12 (1 + |num|).
inline constexpr double kSingularTolerance = 1e-12;

/// Closed-form traveling kink psi(xi) together with the friction it forces,
/// its asymptotic states and the poles it has on the real line.
///
/// Sign table for the lambda families (Variant is the bracket sign choice of the
/// zero-field formulas: first = upper sign = -sqrt(B1), second = lower = +sqrt(B1)):
///
///   zero field, branch +, first   -> particular psi_4, rho = +3 sqrt(A1/2)
///   zero field, branch +, second  -> particular psi_1, rho = +3 sqrt(A1/2)
///   zero field, branch -, first   -> particular psi_3, rho = -3 sqrt(A1/2)
///   zero field, branch -, second  -> particular psi_2, rho = -3 sqrt(A1/2)
///   driven case c, branch s       -> particular driven(c, s), rho = rho_case{1,2}(s)
///
/// and for the particular solutions psi_1..psi_4:
///
///   psi_1: factorization (first, +)    psi_2: (first, -)
///   psi_3: factorization (second, -)   psi_4: (second, +)
class KinkSolution {
public:
    Family family() const { return family_; }
    /// psi_1..psi_4 for Family::undriven, 0 otherwise.
    int index() const { return index_; }
    Sign branch() const { return branch_; }
    DrivenCase driven_case() const { return case_; }
    Variant variant() const { return variant_; }

    /// Model coefficients with rho set to the forced friction.
    const ModelParams& params() const { return params_; }
    double rho() const { return params_.rho; }
    double field_term() const { return params_.field_term(); }
    const std::optional<DrivenSetup>& setup() const { return setup_; }
    double xi0() const { return xi0_; }
    /// k1 = exp(-+ sqrt(A1) xi0 / sqrt(2)) of the undriven solutions (upper sign for psi_1, psi_4).
    double k1() const;
    const std::optional<double>& lambda() const { return lambda_; }
    double width_inverse() const { return width_inverse_; }
    double width() const { return 1.0 / width_inverse_; }
    double left_limit() const { return left_limit_; }
    double right_limit() const { return right_limit_; }
    /// Real poles, ascending.
    const std::vector<double>& singularities() const { return singularities_; }
    /// Amount subtracted from the Riccati variable (epsilon for driven families).
    double shift() const { return shift_; }

    /// Throws SingularPoint at a pole.
    double operator()(double xi) const;
    std::optional<double> try_value(double xi) const;
    /// No pole check; these are the raw closed form in the requested arithmetic.
    double raw(double xi) const;
    long double raw_extended(long double xi) const;
    Jet<double> jet(double xi) const;

    /// Denominator whose real roots are the poles of the profile.
    double inner_denominator(double xi) const;
    bool is_singular(double xi) const;

    /// Value of the variable that satisfies the compatible Riccati equation (psi + shift).
    double riccati_value(double xi) const { return (*this)(xi) + shift_; }
    RiccatiCoefficients riccati() const;
    /// lambda -> infinity member of the family; returns *this for particular solutions.
    KinkSolution particular() const;
    /// lambda in the y1 + e^I1 / (lambda - c1 I2) normalization with base point xi0
    /// that produces this profile; nullopt for particular solutions.
    std::optional<double> general_lambda() const;

    std::string name() const;

private:
    friend KinkSolution make_montroll(double, double, double);
    friend KinkSolution make_undriven(double, double, int, double);
    friend KinkSolution make_driven(const DrivenSetup&, DrivenCase, Sign, double, double);
    friend KinkSolution make_lambda_zero_field(double, double, Sign, Variant, double, double);
    friend KinkSolution make_lambda_driven(const DrivenSetup&, DrivenCase, Sign, double, double,
                                           double);

    template <class T>
    struct Parts {
        T num;
        T den;
        T rest;
    };
    template <class T>
    Parts<T> parts(T xi) const;

    KinkSolution() = default;

    Family family_ = Family::montroll;
    int index_ = 0;
    Sign branch_ = Sign::plus;
    DrivenCase case_ = DrivenCase::I;
    Variant variant_ = Variant::first;
    ModelParams params_;
    std::optional<DrivenSetup> setup_;
    double xi0_ = 0.0;
    std::optional<double> lambda_;
    double width_inverse_ = 1.0;
    double left_limit_ = 0.0;
    double right_limit_ = 0.0;
    std::vector<double> singularities_;
    double shift_ = 0.0;

    // Montroll roots (a, b, d).
    double a_ = 0.0;
    double b_ = 0.0;
    double d_ = 0.0;
    // Rate of the driving exponential: r / sqrt(2) or sqrt(A1) / sqrt(2).
    double rate_ = 0.0;
    double r_ = 0.0;
};

/// Montroll kink a + sqrt(2) alpha / (1 + exp(alpha (xi - xi0))) of psi^3 - psi (A1 = B1 = 1).
KinkSolution make_montroll(double a, double b, double xi0 = 0.0);
/// psi_1..psi_4 of the zero-field equation.
KinkSolution make_undriven(double A1, double B1, int index, double xi0 = 0.0);
/// Downshifted Case I (r_plus) or Case II (r_minus) kink; gamma1 only splits gamma1 eta.
KinkSolution make_driven(const DrivenSetup& setup, DrivenCase c, Sign sign, double xi0 = 0.0,
                         double gamma1 = 1.0);
KinkSolution make_lambda_zero_field(double A1, double B1, Sign branch, Variant variant,
                                    double lambda, double xi0 = 0.0);
KinkSolution make_lambda_driven(const DrivenSetup& setup, DrivenCase c, Sign branch, double lambda,
                                double xi0 = 0.0, double gamma1 = 1.0);

/// Factorization whose compatible equation has psi_index as particular solution.
struct UndrivenFactor {
    Variant variant;
    Sign sign;
};
UndrivenFactor undriven_factor_for_index(int index);
/// psi index of the lambda -> infinity member of a zero-field lambda family.
int zero_field_particular_index(Sign branch, Variant variant);

// Direct evaluators.
double montroll_kink(double a, double b, double xi);
double undriven_kink(const ModelParams& params, int index, double xi0, double xi);
double driven_kink(const DrivenSetup& setup, DrivenCase c, Sign sign, double xi0, double xi);
double lambda_kink_zero_field(const ModelParams& params, Sign branch, Variant variant,
                              double lambda, double xi0, double xi);
double lambda_kink_driven(const DrivenSetup& setup, DrivenCase c, Sign branch, double lambda,
                          double xi0, double xi);

/// The zero-field lambda formulas exactly as bracketed,
///   sqrt(A1)/(-+sqrt(B1) + e^{+-a s}) [1 + 1/(...)].
/// Undefined (0 * inf) at poles of the particular solution, which the reduced form used by
/// KinkSolution cancels.
double lambda_kink_zero_field_bracketed(double A1, double B1, Sign branch, Variant variant,
                                        double lambda, double xi0, double xi);

/// Driven lambda formulas as bracketed, downshifted by epsilon:
///   2r/(2 + e^{-+a s}) [1/sqrt(B1) + 1/(2 lambda r [1 + 2 e^{+-a s}] ...)] - epsilon.
/// KinkSolution evaluates the same expression multiplied through, which avoids the
/// per-point cancellation inside the inner bracket for lambda close to the forbidden range.
double lambda_kink_driven_bracketed(const DrivenSetup& setup, DrivenCase c, Sign branch,
                                    double lambda, double xi0, double xi);

/// General solution  y1 + e^{I1} / (lambda - c1 I2)  of y' = c1 y^2 + c2 y built on a
/// particular solution y1, with I1, I2 integrated from xi0. Throws SingularPoint where
/// lambda - c1 I2 vanishes.
double general_riccati(const RiccatiCoefficients& coeffs, const std::function<double(double)>& y1,
                       double lambda, double xi0, double xi);

/// The two integrals of the general solution in closed form.
struct RiccatiIntegrals {
    double exp_i1;  // e^{I1}
    double i2;
};
RiccatiIntegrals riccati_integrals(const RiccatiCoefficients& coeffs, double y1_at_xi0,
                                   double y1_at_xi, double xi0, double xi);

std::string to_string(Family f);
std::string to_string(Variant v);

}  // namespace glkinks
