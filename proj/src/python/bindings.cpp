#include <cmath>
#include <limits>
#include <sstream>

#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "glkinks/analysis.hpp"
#include "glkinks/cli.hpp"
#include "glkinks/errors.hpp"
#include "glkinks/figures.hpp"
#include "glkinks/kinks.hpp"
#include "glkinks/verify.hpp"

namespace py = pybind11;
using namespace pybind11::literals;
using namespace glkinks;

namespace {

// NaN at poles so whole profiles can be handed to numpy/matplotlib.
using InArray = py::array_t<double, py::array::c_style | py::array::forcecast>;

py::array_t<double> sample(const KinkSolution& k, InArray xi) {
    py::array_t<double> out(xi.request().shape);
    double* dst = out.mutable_data();
    const double* src = xi.data();
    for (py::ssize_t i = 0; i < xi.size(); ++i) {
        const auto v = k.try_value(src[i]);
        dst[i] = v ? *v : std::numeric_limits<double>::quiet_NaN();
    }
    return out;
}

}  // namespace

PYBIND11_MODULE(glkinks, m) {
    m.doc() = "Closed-form traveling kinks of the damped cubic Ginzburg-Landau equation";
    m.attr("__version__") = version();

    auto base = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
    auto param = py::register_exception<ParameterError>(m, "ParameterError", base.ptr());
    auto domain = py::register_exception<DomainError>(m, "DomainError", base.ptr());
    py::register_exception<ComplexDelta>(m, "ComplexDelta", param.ptr());
    py::register_exception<NonPositiveCoefficient>(m, "NonPositiveCoefficient", param.ptr());
    py::register_exception<NonPositiveRate>(m, "NonPositiveRate", param.ptr());
    py::register_exception<SingularPoint>(m, "SingularPoint", domain.ptr());
    py::register_exception<ForbiddenLambda>(m, "ForbiddenLambda", domain.ptr());
    py::register_exception<NoCrossing>(m, "NoCrossing", domain.ptr());
    py::register_exception<DomainMismatch>(m, "DomainMismatch", domain.ptr());
    py::register_exception<EmptyGrid>(m, "EmptyGrid", domain.ptr());

    py::enum_<Sign>(m, "Sign").value("plus", Sign::plus).value("minus", Sign::minus);
    py::enum_<DrivenCase>(m, "DrivenCase").value("I", DrivenCase::I).value("II", DrivenCase::II);
    py::enum_<Variant>(m, "Variant").value("first", Variant::first).value("second", Variant::second);
    py::enum_<Family>(m, "Family")
        .value("montroll", Family::montroll)
        .value("undriven", Family::undriven)
        .value("driven", Family::driven)
        .value("lambda_zero_field", Family::lambda_zero_field)
        .value("lambda_driven", Family::lambda_driven);

    py::class_<ModelParams>(m, "ModelParams")
        .def(py::init<>())
        .def_readwrite("A1", &ModelParams::A1)
        .def_readwrite("B1", &ModelParams::B1)
        .def_readwrite("rho", &ModelParams::rho)
        .def_readwrite("gamma1", &ModelParams::gamma1)
        .def_readwrite("eta", &ModelParams::eta)
        .def_property_readonly("field_term", &ModelParams::field_term);

    py::class_<DrivenSetup>(m, "DrivenSetup")
        .def_readonly("A1", &DrivenSetup::A1)
        .def_readonly("B1", &DrivenSetup::B1)
        .def_readonly("epsilon", &DrivenSetup::epsilon)
        .def_readonly("eta_times_gamma1", &DrivenSetup::eta_times_gamma1)
        .def_readonly("delta_eps", &DrivenSetup::delta_eps)
        .def_readonly("r_plus", &DrivenSetup::r_plus)
        .def_readonly("r_minus", &DrivenSetup::r_minus)
        .def_readonly("alpha1", &DrivenSetup::alpha1)
        .def_readonly("alpha2", &DrivenSetup::alpha2)
        .def("model", &DrivenSetup::model, "rho"_a, "gamma1"_a = 1.0);

    m.def("driven_setup", &driven_setup, "A1"_a, "B1"_a, "epsilon"_a);
    m.def("forced_rho", &forced_rho, "setup"_a, "case"_a, "sign"_a);

    py::class_<KinkSolution>(m, "KinkSolution")
        .def_property_readonly("family", &KinkSolution::family)
        .def_property_readonly("index", &KinkSolution::index)
        .def_property_readonly("params", &KinkSolution::params)
        .def_property_readonly("rho", &KinkSolution::rho)
        .def_property_readonly("field_term", &KinkSolution::field_term)
        .def_property_readonly("xi0", &KinkSolution::xi0)
        .def_property_readonly("lambda_", &KinkSolution::lambda)
        .def_property_readonly("width", &KinkSolution::width)
        .def_property_readonly("left_limit", &KinkSolution::left_limit)
        .def_property_readonly("right_limit", &KinkSolution::right_limit)
        .def_property_readonly("singularities", &KinkSolution::singularities)
        .def_property_readonly("name", &KinkSolution::name)
        .def("__call__", &KinkSolution::operator(), "xi"_a)
        .def("__call__", &sample, "xi"_a)
        .def("try_value", &KinkSolution::try_value, "xi"_a)
        .def("derivatives", [](const KinkSolution& k, double xi) {
            const Jet<double> j = k.jet(xi);
            return py::make_tuple(j.v, j.d1, j.d2);
        }, "xi"_a)
        .def("particular", &KinkSolution::particular)
        .def("general_lambda", &KinkSolution::general_lambda)
        .def("__repr__", [](const KinkSolution& k) { return "<KinkSolution " + k.name() + ">"; });

    m.def("make_montroll", &make_montroll, "a"_a, "b"_a, "xi0"_a = 0.0);
    m.def("make_undriven", &make_undriven, "A1"_a, "B1"_a, "index"_a, "xi0"_a = 0.0);
    m.def("make_driven", &make_driven, "setup"_a, "case"_a, "sign"_a, "xi0"_a = 0.0,
          "gamma1"_a = 1.0);
    m.def("make_lambda_zero_field", &make_lambda_zero_field, "A1"_a, "B1"_a, "branch"_a,
          "variant"_a, "lambda_"_a, "xi0"_a = 0.0);
    m.def("make_lambda_driven", &make_lambda_driven, "setup"_a, "case"_a, "branch"_a,
          "lambda_"_a, "xi0"_a = 0.0, "gamma1"_a = 1.0);

    m.def("max_residual", [](const KinkSolution& k, bool finite_difference) {
        ResidualOptions o;
        if (finite_difference) o.mode = DerivativeMode::finite_difference;
        return residual(k, Grid::around(k), o).max_abs_residual;
    }, "solution"_a, "finite_difference"_a = false,
          "max |residual| over 4001 points spanning xi0 +- 40 widths.");

    m.def("integrate", [](const ModelParams& p, double psi0, double dpsi0, double from,
                          double to, double step) {
        const Trajectory t = integrate_second_order(p, psi0, dpsi0, {from, to}, step);
        return py::make_tuple(t.xi_values, t.psi_values, t.blowup_xi);
    }, "params"_a, "psi0"_a, "dpsi0"_a, "start"_a, "stop"_a, "step"_a = 1e-3,
          "RK4 samples (xi, psi, blowup_xi), xi ascending.");

    m.def("switching_midpoint", [](const KinkSolution& k) { return switching_midpoint(k).xi; });
    m.def("singularity_scan", py::overload_cast<const KinkSolution&>(&singularity_scan));
    m.def("lambda_forbidden_interval", [](const DrivenSetup& s, DrivenCase c, Sign b) {
        const LambdaDomain d = lambda_forbidden_interval(s, c, b);
        return py::make_tuple(d.forbidden.lower, d.forbidden.upper);
    }, "setup"_a, "case"_a, "branch"_a, "Endpoints of the forbidden lambda interval.");

    py::class_<FigureSpec>(m, "FigureSpec")
        .def_readonly("id", &FigureSpec::id)
        .def_readonly("A1", &FigureSpec::A1)
        .def_readonly("B1", &FigureSpec::B1)
        .def_readonly("epsilon", &FigureSpec::epsilon)
        .def_readonly("quoted_rho", &FigureSpec::quoted_rho)
        .def_readonly("lambdas", &FigureSpec::lambdas)
        .def("setup", &FigureSpec::setup)
        .def("recomputed_rho", &FigureSpec::recomputed_rho)
        .def("make", [](const FigureSpec& f, double l) { return f.family().make(l); }, "lambda_"_a)
        .def("delay_curve", [](const FigureSpec& f, std::vector<double> lambdas) {
            const DelayCurve c = delay_curve(f.family(), std::move(lambdas));
            return py::make_tuple(c.lambdas, c.midpoints, c.midpoint_inf);
        }, "lambdas"_a);
    m.def("figure_spec", &figure_spec, "id"_a, py::return_value_policy::reference);

    m.def("run_cli", [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        const int code = run_cli(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
    }, "args"_a, "Runs the command line in process; returns (exit_code, stdout, stderr).");
}
