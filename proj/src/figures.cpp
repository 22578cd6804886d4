#include "glkinks/figures.hpp"

#include <string>

#include "glkinks/errors.hpp"

namespace glkinks {

namespace {

const std::array<FigureSpec, 4> kFigures{{
    {1, 3.0, 0.7, 2.2772, DrivenCase::I, Sign::plus, 0.90326, 1e-4, {0.125, 0.2, 0.5, 10.0}},
    {2, 3.0, 0.7, 1.0351, DrivenCase::I, Sign::minus, 2.39335, 1e-4, {0.01, 0.1, 0.5, 10.0}},
    {3, 0.7, 3.0, 0.5313, DrivenCase::II, Sign::plus, 1.51635, 1e-3, {0.77, 0.9, 2.0, 10.0}},
    {4, 0.7, 3.0, -0.5313, DrivenCase::II, Sign::minus, 0.435766, 1e-3, {0.53, 0.6, 1.0, 10.0}},
}};

}  // namespace

LambdaFamily FigureSpec::family() const {
    LambdaFamily f;
    f.driven = true;
    f.A1 = A1;
    f.B1 = B1;
    f.epsilon = epsilon;
    f.driven_case = driven_case;
    f.branch = branch;
    f.xi0 = xi0;
    return f;
}

const FigureSpec& figure_spec(int id) {
    if (id < 1 || id > 4) throw ParameterError("unknown figure id " + std::to_string(id));
    return kFigures[static_cast<std::size_t>(id - 1)];
}

const std::array<FigureSpec, 4>& all_figures() { return kFigures; }

}  // namespace glkinks
