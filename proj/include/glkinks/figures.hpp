#pragma once

#include <array>
#include <vector>

#include "glkinks/analysis.hpp"
#include "glkinks/model.hpp"

namespace glkinks {

/// Parameter sets of the four published lambda-kink plots.
struct FigureSpec {
    int id;
    double A1;
    double B1;
    double epsilon;
    DrivenCase driven_case;
    Sign branch;
    /// Friction printed alongside the plot, and the agreement expected from recomputing it.
    double quoted_rho;
    double rho_tolerance;
    std::array<double, 4> lambdas;
    double xi0 = 0.0;

    DrivenSetup setup() const { return driven_setup(A1, B1, epsilon); }
    double recomputed_rho() const { return forced_rho(setup(), driven_case, branch); }
    LambdaFamily family() const;
};

/// Throws ParameterError for ids other than 1..4.
const FigureSpec& figure_spec(int id);
const std::array<FigureSpec, 4>& all_figures();

}  // namespace glkinks
