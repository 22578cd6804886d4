#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "glkinks/kinks.hpp"
#include "glkinks/model.hpp"

namespace glkinks {

/// Uniform grid of n >= 2 points on [lo, hi].
struct Grid {
    double lo = -1.0;
    double hi = 1.0;
    std::size_t n = 2;

    double at(std::size_t i) const;
    double spacing() const { return (hi - lo) / static_cast<double>(n - 1); }
    void validate() const;

    /// n points over xi0 +- half_widths / width_inverse.
    static Grid around(const KinkSolution& k, double half_widths = 40.0, std::size_t n = 4001);
};

enum class DerivativeMode { analytic, finite_difference };
std::string to_string(DerivativeMode m);

struct ResidualOptions {
    DerivativeMode mode = DerivativeMode::analytic;
    double fd_step = 1e-4;
    /// Accuracy order of the central stencil (2 or 4). Stencil values are taken in
    /// extended precision so that cancellation stays below the truncation error.
    int fd_order = 4;
    /// Points closer than this many widths to a known pole are skipped.
    double pole_exclusion_widths = 0.25;
};

struct ResidualReport {
    double max_abs_residual = 0.0;
    double argmax_xi = 0.0;
    Grid grid;
    DerivativeMode derivative_mode = DerivativeMode::analytic;
    std::size_t evaluated = 0;
    std::size_t skipped = 0;
};

/// max |psi'' + rho psi' - B1 psi^3 + A1 psi + gamma1 eta| over the grid, with A1, B1 taken
/// from the solution. Throws EmptyGrid if every point was skipped.
ResidualReport residual(const KinkSolution& solution, double rho, double eta_gamma,
                        const Grid& grid, const ResidualOptions& options = {});

/// Residual with the solution's own forced rho and field term.
ResidualReport residual(const KinkSolution& solution, const Grid& grid,
                        const ResidualOptions& options = {});

/// Integration interval; `to` may be smaller than `from` (integration runs backwards).
struct Span {
    double from = 0.0;
    double to = 1.0;
};

/// Fixed-step samples, stored with xi ascending regardless of integration direction.
struct Trajectory {
    std::vector<double> xi_values;
    std::vector<double> psi_values;
    std::vector<double> dpsi_values;
    double step = 0.0;
    /// Set when the state stopped being finite; samples end just before it.
    std::optional<double> blowup_xi;

    std::size_t size() const { return xi_values.size(); }
};

/// Classical RK4 on (psi, psi') for psi'' + rho psi' - B1 psi^3 + A1 psi + gamma1 eta = 0.
/// The span end is rounded to a whole number of steps.
Trajectory integrate_second_order(const ModelParams& params, double psi0, double dpsi0,
                                  Span span, double step = 1e-3);

/// Classical RK4 on y' = c1 y^2 + c2 y; finite-time blow-up is reported, not thrown.
Trajectory integrate_riccati(double c1, double c2, double y0, Span span, double step = 1e-3);

/// Largest |mu| over mu^2 + rho mu + A1 - 3 B1 psi*^2 = 0 at both end states psi*, and the
/// kink's own rate. Steps small against 1/rate keep RK4 in its asymptotic regime.
double fastest_linear_rate(const KinkSolution& solution);

/// sup |traj.psi - solution(xi)| over the trajectory samples. Throws DomainMismatch if the
/// solution has a pole at a sample or the trajectory is empty.
double compare(const Trajectory& traj, const KinkSolution& solution);
double compare(const Trajectory& traj, const std::function<double(double)>& reference);

/// Friction sign that pairs with each psi_i, obtained by minimizing the residual over
/// rho = +-(3/sqrt2) sqrt(A1).
struct PairingEntry {
    int index;
    Sign rho_sign;
    double residual_plus;
    double residual_minus;
};
std::vector<PairingEntry> derive_undriven_pairing(double A1, double B1);

}  // namespace glkinks
