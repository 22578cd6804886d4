#include "glkinks/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

#include "glkinks/analysis.hpp"
#include "glkinks/errors.hpp"
#include "glkinks/figures.hpp"
#include "glkinks/kinks.hpp"
#include "glkinks/verify.hpp"

namespace glkinks {

const char* version() { return GLKINKS_VERSION; }

std::string format_number(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

namespace {

constexpr double kAnalyticLimit = 1e-10;
constexpr double kFiniteDifferenceLimit = 1e-8;
constexpr double kRk4Limit = 1e-6;
constexpr double kRiccatiLimit = 1e-7;

std::string short_number(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3g", x);
    return buf;
}

// Everything the flags can say about which solution is meant.
struct Selection {
    std::string family;
    double a1 = 1.0;
    double b1 = 1.0;
    std::optional<double> epsilon;
    std::optional<DrivenCase> driven_case;
    std::optional<Sign> branch;
    std::optional<int> index;
    std::optional<Variant> variant;
    std::vector<double> lambdas;
    double xi0 = 0.0;
    std::optional<int> fig;
    std::string roots = "0:1";
};

struct GridSpec {
    std::string text = "-15:15:4001";

    Grid parse() const {
        std::vector<std::string> pieces;
        std::stringstream in(text);
        for (std::string piece; std::getline(in, piece, ':');) pieces.push_back(piece);
        if (pieces.size() != 3) throw ParameterError("--grid expects lo:hi:n, got '" + text + "'");
        Grid g;
        try {
            g.lo = std::stod(pieces[0]);
            g.hi = std::stod(pieces[1]);
            const long long n = std::stoll(pieces[2]);
            if (n < 2) throw ParameterError("--grid needs n >= 2, got " + pieces[2]);
            g.n = static_cast<std::size_t>(n);
        } catch (const std::logic_error&) {
            throw ParameterError("--grid expects numbers lo:hi:n, got '" + text + "'");
        }
        g.validate();
        return g;
    }
};

std::pair<double, double> parse_roots(const std::string& text) {
    const auto colon = text.find(':');
    if (colon == std::string::npos) throw ParameterError("--roots expects a:b");
    try {
        return {std::stod(text.substr(0, colon)), std::stod(text.substr(colon + 1))};
    } catch (const std::logic_error&) {
        throw ParameterError("--roots expects numbers a:b, got '" + text + "'");
    }
}

std::string infer_family(const Selection& s) {
    if (!s.family.empty()) return s.family;
    if (s.fig) return "lambda";
    if (s.index) return "undriven";
    if (!s.lambdas.empty()) return "lambda";
    if (s.epsilon) return "driven";
    return "";
}

template <class T>
std::vector<T> chosen_or_all(const std::optional<T>& v, std::vector<T> all) {
    if (v) return {*v};
    return all;
}

LambdaFamily lambda_family(const Selection& s) {
    if (s.fig) return figure_spec(*s.fig).family();
    if (!s.branch) throw ParameterError("lambda families need --branch");
    LambdaFamily f;
    f.A1 = s.a1;
    f.B1 = s.b1;
    f.branch = *s.branch;
    f.xi0 = s.xi0;
    if (s.epsilon) {
        if (!s.driven_case) throw ParameterError("driven lambda families need --case");
        f.driven = true;
        f.epsilon = *s.epsilon;
        f.driven_case = *s.driven_case;
    } else {
        f.driven = false;
        f.variant = s.variant.value_or(Variant::second);
    }
    return f;
}

// Solutions named by the flags; unspecified discrete choices expand to all of them.
std::vector<KinkSolution> select_solutions(const Selection& s) {
    const std::string family = infer_family(s);
    std::vector<KinkSolution> out;
    if (family == "montroll") {
        const auto [a, b] = parse_roots(s.roots);
        out.push_back(make_montroll(a, b, s.xi0));
    } else if (family == "undriven") {
        for (int i : chosen_or_all(s.index, {1, 2, 3, 4})) {
            out.push_back(make_undriven(s.a1, s.b1, i, s.xi0));
        }
    } else if (family == "driven") {
        if (!s.epsilon) throw ParameterError("driven family needs --epsilon");
        const DrivenSetup setup = driven_setup(s.a1, s.b1, *s.epsilon);
        for (DrivenCase c : chosen_or_all(s.driven_case, {DrivenCase::I, DrivenCase::II})) {
            for (Sign b : chosen_or_all(s.branch, {Sign::plus, Sign::minus})) {
                out.push_back(make_driven(setup, c, b, s.xi0));
            }
        }
    } else if (family == "lambda") {
        const LambdaFamily f = lambda_family(s);
        std::vector<double> lambdas = s.lambdas;
        if (lambdas.empty() && s.fig) {
            const auto& fl = figure_spec(*s.fig).lambdas;
            lambdas.assign(fl.begin(), fl.end());
        }
        if (lambdas.empty()) throw ParameterError("lambda family needs --lambda");
        for (double l : lambdas) out.push_back(f.make(l));
    } else {
        throw ParameterError(
            "cannot tell which family is meant; give --family, --index, --epsilon or --fig");
    }
    return out;
}

void append_setup(std::ostringstream& o, const DrivenSetup& d) {
    o << " epsilon=" << format_number(d.epsilon) << " r_plus=" << format_number(d.r_plus)
      << " r_minus=" << format_number(d.r_minus);
}

std::string parameter_comment(const std::string& command, const KinkSolution& k) {
    std::ostringstream o;
    o << "# glkinks " << version() << " " << command << " family=" << k.name()
      << " A1=" << format_number(k.params().A1) << " B1=" << format_number(k.params().B1)
      << " rho=" << format_number(k.rho()) << " gamma1_eta=" << format_number(k.field_term());
    if (k.setup()) append_setup(o, *k.setup());
    if (k.family() == Family::lambda_driven || k.family() == Family::driven) {
        o << " case=" << to_string(k.driven_case()) << " branch=" << to_string(k.branch());
    }
    if (k.family() == Family::lambda_zero_field) {
        o << " branch=" << to_string(k.branch()) << " variant=" << to_string(k.variant());
    }
    if (k.lambda()) o << " lambda=" << format_number(*k.lambda());
    o << " xi0=" << format_number(k.xi0());
    return o.str();
}

std::string grid_text(const Grid& g) {
    return format_number(g.lo) + ":" + format_number(g.hi) + ":" + std::to_string(g.n);
}

// Writes the xi,psi,is_singular table; returns the number of regular rows.
std::size_t write_profile(std::ostream& o, const std::string& command, const KinkSolution& k,
                          const Grid& g) {
    o << parameter_comment(command, k) << " grid=" << grid_text(g) << "\n";
    o << "xi,psi,is_singular\n";
    std::size_t regular = 0;
    for (std::size_t i = 0; i < g.n; ++i) {
        const double xi = g.at(i);
        if (const auto v = k.try_value(xi)) {
            o << format_number(xi) << "," << format_number(*v) << ",0\n";
            ++regular;
        } else {
            o << format_number(xi) << ",,1\n";
        }
    }
    return regular;
}

// Output goes to a file when a path is given, otherwise to `fallback`.
class Sink {
public:
    Sink(const std::string& path, std::ostream& fallback) : stream_(&fallback) {
        if (path.empty()) return;
        file_.open(path, std::ios::binary);
        if (!file_) throw ParameterError("cannot open '" + path + "' for writing");
        stream_ = &file_;
    }
    std::ostream& get() { return *stream_; }

private:
    std::ofstream file_;
    std::ostream* stream_;
};

// ---------------------------------------------------------------------------

void describe_solution(std::ostream& o, const KinkSolution& k, const std::string& extra = "") {
    o << k.name() << " rho=" << format_number(k.rho()) << " width=" << format_number(k.width())
      << " left=" << format_number(k.left_limit()) << " right=" << format_number(k.right_limit());
    o << " poles=";
    if (k.singularities().empty()) {
        o << "none";
    } else {
        for (std::size_t i = 0; i < k.singularities().size(); ++i) {
            o << (i ? ";" : "") << format_number(k.singularities()[i]);
        }
    }
    o << extra << "\n";
}

int cmd_families(const Selection& s, std::ostream& out) {
    validate_params(ModelParams{s.a1, s.b1});
    if (s.epsilon) driven_setup(s.a1, s.b1, *s.epsilon);
    out << "# glkinks " << version() << " families A1=" << format_number(s.a1)
        << " B1=" << format_number(s.b1);
    if (s.epsilon) out << " epsilon=" << format_number(*s.epsilon);
    out << "\n";

    if (!s.epsilon) {
        if (s.a1 == 1.0 && s.b1 == 1.0) {
            for (const auto& [a, b] : {std::pair{0.0, 1.0}, {-1.0, 0.0}, {1.0, -1.0}}) {
                describe_solution(out, make_montroll(a, b, s.xi0));
            }
        }
        for (int i = 1; i <= 4; ++i) {
            const KinkSolution k = make_undriven(s.a1, s.b1, i, s.xi0);
            const UndrivenFactor f = undriven_factor_for_index(i);
            describe_solution(out, k,
                              " factorization=" + to_string(f.variant) + to_string(f.sign));
        }
        for (Sign b : {Sign::plus, Sign::minus}) {
            for (Variant v : {Variant::first, Variant::second}) {
                const int p = zero_field_particular_index(b, v);
                const KinkSolution k = make_undriven(s.a1, s.b1, p, s.xi0);
                out << "lambda-zero" << to_string(b) << "-" << to_string(v)
                    << " rho=" << format_number(k.rho()) << " width=" << format_number(k.width())
                    << " particular=psi" << p << " degenerate_lambda="
                    << format_number((b == Sign::plus ? -1.0 : 1.0) / std::sqrt(s.a1))
                    << " pole_lambda=";
                const auto ranges = zero_field_forbidden_lambda(s.a1, b, v);
                for (std::size_t i = 0; i < ranges.size(); ++i) {
                    out << (i ? "U" : "") << ranges[i].to_string();
                }
                out << "\n";
            }
        }
        return exit_ok;
    }

    const DrivenSetup setup = driven_setup(s.a1, s.b1, *s.epsilon);
    out << "setup gamma1_eta=" << format_number(setup.eta_times_gamma1)
        << " delta_eps=" << format_number(setup.delta_eps)
        << " r_plus=" << format_number(setup.r_plus) << " r_minus=" << format_number(setup.r_minus)
        << "\n";
    for (DrivenCase c : {DrivenCase::I, DrivenCase::II}) {
        for (Sign b : {Sign::plus, Sign::minus}) {
            const auto range = epsilon_admissible_interval(s.a1, s.b1, c, b, true);
            const std::string verdict =
                range.contains(*s.epsilon) ? " positive_rho=yes" : " positive_rho=no";
            try {
                const KinkSolution k = make_driven(setup, c, b, s.xi0);
                describe_solution(out, k,
                                  verdict + " positive_rho_epsilon=" + range.to_string());
                const LambdaDomain d = lambda_forbidden_interval(setup, c, b);
                out << "lambda-" << to_string(c) << to_string(b)
                    << " forbidden_lambda=" << d.forbidden.to_string()
                    << " bound=" << format_number(d.bound_value) << "\n";
            } catch (const NonPositiveRate& e) {
                out << "driven-" << to_string(c) << to_string(b) << " unavailable: " << e.what()
                    << "\n";
            }
        }
    }
    return exit_ok;
}

int cmd_eval(const Selection& s, const GridSpec& gs, const std::string& path, std::ostream& out) {
    const Grid grid = gs.parse();
    if (s.lambdas.size() > 1) throw ParameterError("eval takes a single --lambda");
    if (s.fig && s.lambdas.empty()) throw ParameterError("eval --fig needs --lambda");
    const auto solutions = select_solutions(s);
    if (solutions.size() != 1) {
        throw ParameterError("eval needs exactly one solution; add --index, --case or --branch");
    }
    std::ostringstream buffer;
    const std::size_t regular = write_profile(buffer, "eval", solutions.front(), grid);
    if (regular == 0) throw DomainError("every grid point is singular");
    Sink sink(path, out);
    sink.get() << buffer.str();
    return exit_ok;
}

std::string lambda_label(double lambda) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%g", lambda);
    return buf;
}

int cmd_figure(int id, const GridSpec& gs, const std::string& dir, std::ostream& out) {
    const FigureSpec& f = figure_spec(id);
    const Grid grid = gs.parse();
    const LambdaFamily family = f.family();
    const double rho = f.recomputed_rho();

    std::ostringstream side;
    side << "# glkinks " << version() << " figure " << id << " parameters\n";
    side << "key,value\n";
    side << "figure," << id << "\n";
    side << "A1," << format_number(f.A1) << "\n";
    side << "B1," << format_number(f.B1) << "\n";
    side << "epsilon," << format_number(f.epsilon) << "\n";
    side << "case," << to_string(f.driven_case) << "\n";
    side << "branch," << to_string(f.branch) << "\n";
    side << "xi0," << format_number(f.xi0) << "\n";
    side << "quoted_rho," << format_number(f.quoted_rho) << "\n";
    side << "recomputed_rho," << format_number(rho) << "\n";
    side << "rho_tolerance," << format_number(f.rho_tolerance) << "\n";
    side << "rho_within_tolerance," << (std::abs(rho - f.quoted_rho) <= f.rho_tolerance ? 1 : 0)
         << "\n";
    side << "gamma1_eta," << format_number(f.setup().eta_times_gamma1) << "\n";
    side << "grid," << grid_text(grid) << "\n";
    for (double l : f.lambdas) side << "lambda," << format_number(l) << "\n";

    std::vector<std::pair<std::string, std::string>> files;
    const std::string stem = "fig" + std::to_string(id);
    files.emplace_back(stem + "_params.csv", side.str());
    for (double l : f.lambdas) {
        std::ostringstream body;
        write_profile(body, "figure " + std::to_string(id), family.make(l), grid);
        files.emplace_back(stem + "_lambda_" + lambda_label(l) + ".csv", body.str());
    }

    if (dir.empty()) {
        for (std::size_t i = 0; i < files.size(); ++i) {
            if (i) out << "\n";
            out << files[i].second;
        }
        return exit_ok;
    }
    namespace fs = std::filesystem;
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec) throw ParameterError("cannot create directory '" + dir + "': " + ec.message());
    for (const auto& [name, body] : files) {
        Sink sink((fs::path(dir) / name).string(), out);
        sink.get() << body;
    }
    return exit_ok;
}

int cmd_delay(const Selection& s, const std::string& path, std::ostream& out) {
    const LambdaFamily family = lambda_family(s);
    std::vector<double> lambdas = s.lambdas;
    if (lambdas.empty() && s.fig) {
        const auto& fl = figure_spec(*s.fig).lambdas;
        lambdas.assign(fl.begin(), fl.end());
    }
    if (lambdas.empty()) throw ParameterError("delay needs at least one --lambda");
    const DelayCurve curve = delay_curve(family, lambdas);

    std::ostringstream o;
    o << "# glkinks " << version() << " delay " << family.describe() << "\n";
    o << "lambda,xi_mid,multiplicity_flag\n";
    for (std::size_t i = 0; i < curve.lambdas.size(); ++i) {
        o << format_number(curve.lambdas[i]) << "," << format_number(curve.midpoints[i]) << ","
          << (curve.multiple_crossings[i] ? 1 : 0) << "\n";
    }
    o << "# midpoint_inf," << format_number(curve.midpoint_inf) << "\n";
    Sink sink(path, out);
    sink.get() << o.str();
    return exit_ok;
}

// ---------------------------------------------------------------------------

struct CheckLine {
    std::string name;
    std::vector<std::pair<std::string, double>> values;
    std::vector<std::string> failures;
    std::vector<std::string> notes;
};

void check(CheckLine& line, const std::string& label, double value, double limit) {
    line.values.emplace_back(label, value);
    if (!(value < limit)) {
        line.failures.push_back(label + " " + short_number(value) + " >= " + short_number(limit));
    }
}

std::vector<KinkSolution> default_suite() {
    std::vector<KinkSolution> all;
    for (const auto& [a, b] : {std::pair{0.0, 1.0}, {-1.0, 0.0}, {1.0, -1.0}}) {
        all.push_back(make_montroll(a, b));
    }
    for (const auto& [A1, B1] : {std::pair{1.0, 1.0}, {3.0, 0.7}}) {
        for (int i = 1; i <= 4; ++i) all.push_back(make_undriven(A1, B1, i));
    }
    for (const FigureSpec& f : all_figures()) {
        const DrivenSetup setup = f.setup();
        for (DrivenCase c : {DrivenCase::I, DrivenCase::II}) {
            for (Sign b : {Sign::plus, Sign::minus}) all.push_back(make_driven(setup, c, b));
        }
    }
    for (const FigureSpec& f : all_figures()) {
        const LambdaFamily fam = f.family();
        for (double l : f.lambdas) all.push_back(fam.make(l));
    }
    for (Sign b : {Sign::plus, Sign::minus}) {
        for (Variant v : {Variant::first, Variant::second}) {
            for (double l : {1.0, 10.0, 100.0}) {
                all.push_back(make_lambda_zero_field(3.0, 0.7, b, v, l));
            }
        }
    }
    return all;
}

CheckLine verify_solution(const KinkSolution& k, double rho_perturbation) {
    CheckLine line;
    line.name = k.name();
    const double rho = k.rho() + rho_perturbation;
    const Grid grid = Grid::around(k);

    ResidualOptions analytic;
    check(line, "analytic", residual(k, rho, k.field_term(), grid, analytic).max_abs_residual,
          kAnalyticLimit);
    ResidualOptions fd;
    fd.mode = DerivativeMode::finite_difference;
    check(line, "fd", residual(k, rho, k.field_term(), grid, fd).max_abs_residual,
          kFiniteDifferenceLimit);

    if (!k.singularities().empty()) {
        line.notes.push_back("poles: integration checks skipped");
        return line;
    }
    double center = k.xi0();
    try {
        center = switching_midpoint(k).xi;
    } catch (const DomainError&) {
    }
    // Phase-space volume contracts at rate rho, so integrate forwards for rho >= 0 and
    // backwards otherwise; the other direction amplifies roundoff exponentially.
    const double lo = center - 10.0 * k.width();
    const double hi = center + 10.0 * k.width();
    const Span span = rho >= 0.0 ? Span{lo, hi} : Span{hi, lo};
    const Jet<double> start = k.jet(span.from);
    ModelParams p = k.params();
    p.rho = rho;
    const Trajectory traj = integrate_second_order(p, start.v, start.d1, span, 1e-3);
    check(line, "rk4", traj.blowup_xi ? INFINITY : compare(traj, k), kRk4Limit);

    RiccatiCoefficients rc;
    try {
        rc = k.riccati();
    } catch (const DomainMismatch&) {
        line.notes.push_back("no Riccati form");
        return line;
    }
    const auto riccati_ref = [&k](double xi) { return k.riccati_value(xi); };
    const Trajectory rtraj = integrate_riccati(rc.c1, rc.c2, k.riccati_value(span.from), span);
    check(line, "riccati", rtraj.blowup_xi ? INFINITY : compare(rtraj, riccati_ref),
          kRiccatiLimit);

    if (const auto lg = k.general_lambda()) {
        const KinkSolution y1 = k.particular();
        const auto y1f = [&y1](double xi) { return y1.riccati_value(xi); };
        double worst = 0.0;
        const Grid g{lo, hi, 401};
        for (std::size_t i = 0; i < g.n; ++i) {
            const double xi = g.at(i);
            const double general = general_riccati(rc, y1f, *lg, k.xi0(), xi);
            worst = std::max(worst, std::abs(general - k.riccati_value(xi)));
        }
        check(line, "general", worst, kRiccatiLimit);
    }
    return line;
}

int cmd_verify(const Selection& s, double rho_perturbation, std::ostream& out) {
    const bool everything = (s.family.empty() || s.family == "all") && !s.fig && !s.index &&
                            s.lambdas.empty() && !s.epsilon;
    const std::vector<KinkSolution> suite = everything ? default_suite() : select_solutions(s);

    out << "# glkinks " << version() << " verify"
        << (everything ? " all" : " " + infer_family(s))
        << " limits analytic<" << short_number(kAnalyticLimit)
        << " fd<" << short_number(kFiniteDifferenceLimit) << " rk4<" << short_number(kRk4Limit)
        << " riccati<" << short_number(kRiccatiLimit);
    if (rho_perturbation != 0.0) out << " rho_perturbation=" << format_number(rho_perturbation);
    out << "\n";

    std::size_t failed = 0;
    for (const KinkSolution& k : suite) {
        CheckLine line;
        try {
            line = verify_solution(k, rho_perturbation);
        } catch (const Error& e) {
            line.name = k.name();
            line.failures.push_back(e.what());
        }
        out << (line.failures.empty() ? "PASS " : "FAIL ") << line.name;
        for (const auto& [label, value] : line.values) out << " " << label << "=" << short_number(value);
        for (const auto& n : line.notes) out << " (" << n << ")";
        for (const auto& f : line.failures) out << " [" << f << "]";
        out << "\n";
        if (!line.failures.empty()) ++failed;
    }
    out << "verify: " << suite.size() << " solutions, " << failed << " failed\n";
    return failed == 0 ? exit_ok : exit_verification_failed;
}

// ---------------------------------------------------------------------------

const std::map<std::string, DrivenCase> kCases{{"I", DrivenCase::I}, {"II", DrivenCase::II},
                                               {"1", DrivenCase::I}, {"2", DrivenCase::II}};
const std::map<std::string, Sign> kSigns{
    {"+", Sign::plus}, {"plus", Sign::plus}, {"-", Sign::minus}, {"minus", Sign::minus}};
const std::map<std::string, Variant> kVariants{{"first", Variant::first},
                                               {"second", Variant::second}};

void add_model_flags(CLI::App* app, Selection& s) {
    app->add_option("--a1", s.a1, "Linear coefficient A1 > 0");
    app->add_option("--b1", s.b1, "Cubic coefficient B1 > 0");
    app->add_option("--epsilon", s.epsilon, "Field shift epsilon (driven families)");
}

void add_selection_flags(CLI::App* app, Selection& s, bool with_all) {
    add_model_flags(app, s);
    std::vector<std::string> families{"montroll", "undriven", "driven", "lambda"};
    if (with_all) families.push_back("all");
    app->add_option("--family", s.family, "Solution family")->check(CLI::IsMember(families));
    app->add_option("--case", s.driven_case, "Driven case I or II")
        ->transform(CLI::CheckedTransformer(kCases));
    app->add_option("--branch", s.branch, "Front sign + or - (use --branch=-)")
        ->transform(CLI::CheckedTransformer(kSigns));
    app->add_option("--index", s.index, "Undriven solution psi_1..psi_4")
        ->check(CLI::Range(1, 4));
    app->add_option("--variant", s.variant, "Zero-field lambda sign choice")
        ->transform(CLI::CheckedTransformer(kVariants));
    app->add_option("--lambda", s.lambdas, "Riccati parameter (repeatable)")
        ->allow_extra_args(false);
    app->add_option("--xi0", s.xi0, "Centre xi0");
    app->add_option("--fig", s.fig, "Published parameter set 1..4");
    app->add_option("--roots", s.roots, "Montroll roots a:b");
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Closed-form traveling kinks of the damped cubic Ginzburg-Landau equation",
                 "glkinks"};
    app.set_version_flag("--version", std::string(version()));
    app.require_subcommand(1);

    Selection sel;
    GridSpec grid;
    std::string out_path;
    double rho_perturbation = 0.0;
    int fig_id = 0;

    auto* families = app.add_subcommand("families", "List constructible families");
    add_model_flags(families, sel);
    families->add_option("--xi0", sel.xi0, "Centre xi0");

    auto* eval = app.add_subcommand("eval", "Evaluate one solution on a grid (CSV)");
    add_selection_flags(eval, sel, false);
    eval->add_option("--grid", grid.text, "lo:hi:n (use --grid=lo:hi:n for negative lo)");
    eval->add_option("--out", out_path, "Output file");

    auto* figure = app.add_subcommand("figure", "Profiles of a published parameter set (CSV)");
    figure->add_option("--fig", fig_id, "Parameter set 1..4")->required();
    figure->add_option("--grid", grid.text, "lo:hi:n");
    figure->add_option("--out", out_path, "Output directory");

    auto* verify = app.add_subcommand("verify", "Residual and integration checks");
    add_selection_flags(verify, sel, true);
    verify->add_option("--rho-perturb", rho_perturbation, "Add this to rho in every check");

    auto* delay = app.add_subcommand("delay", "Switching midpoints against lambda (CSV)");
    add_selection_flags(delay, sel, false);
    delay->add_option("--out", out_path, "Output file");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return exit_ok;
    } catch (const CLI::CallForVersion&) {
        out << version() << "\n";
        return exit_ok;
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return exit_ok;
        }
        err << "error: " << e.what() << "\n";
        return exit_usage;
    }

    try {
        if (*families) return cmd_families(sel, out);
        if (*eval) return cmd_eval(sel, grid, out_path, out);
        if (*figure) return cmd_figure(fig_id, grid, out_path, out);
        if (*verify) return cmd_verify(sel, rho_perturbation, out);
        if (*delay) return cmd_delay(sel, out_path, out);
    } catch (const DomainError& e) {
        err << "error: " << e.what() << "\n";
        return exit_domain;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return exit_usage;
    }
    return exit_usage;
}

}  // namespace glkinks
