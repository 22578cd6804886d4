#pragma once

#include <limits>
#include <string>
#include <vector>

namespace glkinks {

enum class Sign { plus, minus };
enum class DrivenCase { I, II };

inline constexpr double sign_value(Sign s) { return s == Sign::plus ? 1.0 : -1.0; }
inline constexpr Sign flip(Sign s) { return s == Sign::plus ? Sign::minus : Sign::plus; }
std::string to_string(Sign s);
std::string to_string(DrivenCase c);

/// Rescaled coefficients of  psi'' + rho psi' - B1 psi^3 + A1 psi + gamma1 eta = 0.
struct ModelParams {
    double A1 = 1.0;
    double B1 = 1.0;
    double rho = 0.0;
    double gamma1 = 1.0;
    double eta = 0.0;

    double field_term() const { return gamma1 * eta; }
};

/// Throws NonPositiveCoefficient unless A1 > 0 and B1 > 0.
const ModelParams& validate_params(const ModelParams& p);

/// Data of the shift phi = psi + epsilon that absorbs a constant field,
/// gamma1 eta = A1 epsilon - B1 epsilon^3.
struct DrivenSetup {
    double A1 = 0.0;
    double B1 = 0.0;
    double epsilon = 0.0;
    double eta_times_gamma1 = 0.0;
    double delta_eps = 0.0;  // 4 A1 - 3 B1 epsilon^2
    double r_plus = 0.0;
    double r_minus = 0.0;
    double alpha1 = 0.0;  // r_plus / sqrt(2)
    double alpha2 = 0.0;  // r_minus / sqrt(2)

    double sqrt_delta() const;
    /// ModelParams for the driven equation; eta is recovered with the given coupling.
    ModelParams model(double rho, double gamma1 = 1.0) const;
};

/// Throws NonPositiveCoefficient, or ComplexDelta when epsilon^2 > 4 A1 / (3 B1).
/// The boundary delta_eps == 0 is accepted.
DrivenSetup driven_setup(double A1, double B1, double epsilon);

/// Friction forced by the Case I factorization: +-(r_minus - sqrt(delta)) / sqrt(2).
double rho_case1(const DrivenSetup& setup, Sign front_sign);
/// Friction forced by the Case II factorization: +-(r_plus + sqrt(delta)) / sqrt(2).
double rho_case2(const DrivenSetup& setup, Sign front_sign);
double forced_rho(const DrivenSetup& setup, DrivenCase c, Sign front_sign);

/// Interval on the real line with per-end open/closed flags. Infinite ends are open.
struct AdmissibleRange {
    double lower = -std::numeric_limits<double>::infinity();
    double upper = std::numeric_limits<double>::infinity();
    bool lower_open = true;
    bool upper_open = true;

    bool contains(double x) const;
    bool empty() const;
    std::string to_string() const;
};

/// Range of epsilon giving a real friction (require_positive_rho = false)
/// or a real and positive friction for the requested case and front sign.
AdmissibleRange epsilon_admissible_interval(double A1, double B1, DrivenCase c, Sign front_sign,
                                            bool require_positive_rho);

struct EpsilonRoot {
    double epsilon;
    bool admissible;  // delta_eps >= 0
};

/// All real epsilon with A1 eps - B1 eps^3 = gamma1 eta, ascending.
std::vector<EpsilonRoot> epsilon_from_field(double A1, double B1, double gamma1_eta);

/// Domain-wall parameters in the form used for diamagnetic (Condon) domains.
struct CondonParams {
    double v = 0.0;
    double K = 1.0;
    double Gamma = 1.0;
    double A = 1.0;
    double B = 1.0;
    double a_field = 0.0;
    double k_field = 1.0;
};

ModelParams map_condon_params(const CondonParams& c);

}  // namespace glkinks
