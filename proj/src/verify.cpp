#include "glkinks/verify.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <numbers>

#include "glkinks/errors.hpp"

namespace glkinks {

double Grid::at(std::size_t i) const {
    if (i + 1 == n) return hi;
    return lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n - 1);
}

void Grid::validate() const {
    if (n < 2) throw ParameterError("grid needs at least two points");
    if (!(lo < hi)) throw ParameterError("grid needs lo < hi");
}

Grid Grid::around(const KinkSolution& k, double half_widths, std::size_t n) {
    const double half = half_widths * k.width();
    return {k.xi0() - half, k.xi0() + half, n};
}

std::string to_string(DerivativeMode m) {
    return m == DerivativeMode::analytic ? "analytic" : "finite-difference";
}

namespace {

struct Derivs {
    long double v;
    long double d1;
    long double d2;
};

std::optional<Derivs> finite_differences(const KinkSolution& k, double xi, double h, int order) {
    const long double x = xi;
    const long double lh = h;
    auto f = [&](int m) { return k.raw_extended(x + m * lh); };
    for (int m = -order / 2; m <= order / 2; ++m) {
        if (k.is_singular(xi + m * h)) return std::nullopt;
    }
    const long double f0 = f(0);
    if (order == 2) {
        const long double fp = f(1), fm = f(-1);
        return Derivs{f0, (fp - fm) / (2 * lh), (fp - 2 * f0 + fm) / (lh * lh)};
    }
    const long double f1 = f(1), fm1 = f(-1), f2 = f(2), fm2 = f(-2);
    return Derivs{f0, (-f2 + 8 * f1 - 8 * fm1 + fm2) / (12 * lh),
                  (-f2 + 16 * f1 - 30 * f0 + 16 * fm1 - fm2) / (12 * lh * lh)};
}

bool near_pole(const KinkSolution& k, double xi, double radius) {
    return std::any_of(k.singularities().begin(), k.singularities().end(),
                       [&](double p) { return std::abs(xi - p) < radius; });
}

}  // namespace

ResidualReport residual(const KinkSolution& solution, double rho, double eta_gamma,
                        const Grid& grid, const ResidualOptions& options) {
    grid.validate();
    if (options.fd_order != 2 && options.fd_order != 4) {
        throw ParameterError("finite-difference order must be 2 or 4");
    }
    const double A1 = solution.params().A1;
    const double B1 = solution.params().B1;
    const double radius = options.pole_exclusion_widths * solution.width();

    ResidualReport report;
    report.grid = grid;
    report.derivative_mode = options.mode;
    for (std::size_t i = 0; i < grid.n; ++i) {
        const double xi = grid.at(i);
        if (near_pole(solution, xi, radius) || solution.is_singular(xi)) {
            ++report.skipped;
            continue;
        }
        long double res = 0.0L;
        if (options.mode == DerivativeMode::analytic) {
            const auto j = solution.jet(xi);
            res = j.d2 + rho * j.d1 - B1 * j.v * j.v * j.v + A1 * j.v + eta_gamma;
        } else {
            const auto d = finite_differences(solution, xi, options.fd_step, options.fd_order);
            if (!d) {
                ++report.skipped;
                continue;
            }
            res = d->d2 + rho * d->d1 - B1 * d->v * d->v * d->v + A1 * d->v + eta_gamma;
        }
        const double r = static_cast<double>(std::abs(res));
        ++report.evaluated;
        if (!(r <= report.max_abs_residual)) {
            report.max_abs_residual = r;
            report.argmax_xi = xi;
        }
    }
    if (report.evaluated == 0) throw EmptyGrid("every grid point was skipped");
    return report;
}

ResidualReport residual(const KinkSolution& solution, const Grid& grid,
                        const ResidualOptions& options) {
    return residual(solution, solution.rho(), solution.field_term(), grid, options);
}

namespace {

constexpr double kBlowup = 1e150;

// psi is the first state component; dpsi_of maps a state to psi'.
template <class State, class Rhs, class Dpsi>
Trajectory integrate(State y0, Span span, double step, Rhs rhs, Dpsi dpsi_of) {
    if (!(step > 0.0)) throw ParameterError("step must be positive");
    const double length = std::abs(span.to - span.from);
    if (!(length > 0.0)) throw ParameterError("integration span is empty");
    const double dir = span.to > span.from ? 1.0 : -1.0;
    const auto n = static_cast<std::size_t>(std::llround(length / step));
    if (n == 0) throw ParameterError("integration span shorter than one step");
    const double h = dir * step;

    Trajectory t;
    t.step = step;
    t.xi_values.reserve(n + 1);
    t.psi_values.reserve(n + 1);
    t.dpsi_values.reserve(n + 1);
    State y = y0;
    auto finite = [](const State& s) {
        for (double c : s) {
            if (!std::isfinite(c) || std::abs(c) > kBlowup) return false;
        }
        return true;
    };
    for (std::size_t i = 0;; ++i) {
        const double xi = span.from + static_cast<double>(i) * h;
        if (!finite(y)) {
            t.blowup_xi = xi;
            break;
        }
        t.xi_values.push_back(xi);
        t.psi_values.push_back(y[0]);
        t.dpsi_values.push_back(dpsi_of(y));
        if (i == n) break;
        const State k1 = rhs(y);
        State tmp;
        for (std::size_t c = 0; c < y.size(); ++c) tmp[c] = y[c] + 0.5 * h * k1[c];
        const State k2 = rhs(tmp);
        for (std::size_t c = 0; c < y.size(); ++c) tmp[c] = y[c] + 0.5 * h * k2[c];
        const State k3 = rhs(tmp);
        for (std::size_t c = 0; c < y.size(); ++c) tmp[c] = y[c] + h * k3[c];
        const State k4 = rhs(tmp);
        for (std::size_t c = 0; c < y.size(); ++c) {
            y[c] += h / 6.0 * (k1[c] + 2.0 * k2[c] + 2.0 * k3[c] + k4[c]);
        }
    }
    if (dir < 0.0) {
        std::reverse(t.xi_values.begin(), t.xi_values.end());
        std::reverse(t.psi_values.begin(), t.psi_values.end());
        std::reverse(t.dpsi_values.begin(), t.dpsi_values.end());
    }
    return t;
}

}  // namespace

Trajectory integrate_second_order(const ModelParams& params, double psi0, double dpsi0,
                                  Span span, double step) {
    using State = std::array<double, 2>;
    const double A1 = params.A1, B1 = params.B1, rho = params.rho, g = params.field_term();
    auto rhs = [=](const State& s) {
        const double p = s[0];
        return State{s[1], -rho * s[1] + B1 * p * p * p - A1 * p - g};
    };
    return integrate(State{psi0, dpsi0}, span, step, rhs, [](const State& s) { return s[1]; });
}

Trajectory integrate_riccati(double c1, double c2, double y0, Span span, double step) {
    using State = std::array<double, 1>;
    auto rhs = [=](const State& s) { return State{s[0] * (c1 * s[0] + c2)}; };
    return integrate(State{y0}, span, step, rhs, [&](const State& s) { return rhs(s)[0]; });
}

double compare(const Trajectory& traj, const std::function<double(double)>& reference) {
    if (traj.size() == 0) throw DomainMismatch("empty trajectory");
    double sup = 0.0;
    for (std::size_t i = 0; i < traj.size(); ++i) {
        sup = std::max(sup, std::abs(traj.psi_values[i] - reference(traj.xi_values[i])));
    }
    return sup;
}

double compare(const Trajectory& traj, const KinkSolution& solution) {
    return compare(traj, [&](double xi) {
        if (auto v = solution.try_value(xi)) return *v;
        throw DomainMismatch("trajectory passes through a pole of " + solution.name());
    });
}

double fastest_linear_rate(const KinkSolution& solution) {
    const ModelParams& p = solution.params();
    double rate = solution.width_inverse();
    for (double state : {solution.left_limit(), solution.right_limit()}) {
        const double q = p.A1 - 3.0 * p.B1 * state * state;
        const std::complex<double> root = std::sqrt(std::complex<double>(p.rho * p.rho - 4.0 * q));
        rate = std::max({rate, std::abs(0.5 * (-p.rho + root)), std::abs(0.5 * (-p.rho - root))});
    }
    return rate;
}

std::vector<PairingEntry> derive_undriven_pairing(double A1, double B1) {
    const double magnitude = 3.0 * std::sqrt(A1) / std::numbers::sqrt2;
    std::vector<PairingEntry> table;
    for (int index = 1; index <= 4; ++index) {
        const auto k = make_undriven(A1, B1, index);
        const auto grid = Grid::around(k, 20.0, 801);
        const double plus = residual(k, magnitude, 0.0, grid).max_abs_residual;
        const double minus = residual(k, -magnitude, 0.0, grid).max_abs_residual;
        table.push_back({index, plus <= minus ? Sign::plus : Sign::minus, plus, minus});
    }
    return table;
}

}  // namespace glkinks
