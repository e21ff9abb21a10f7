// sobolev: build and check discrete Laguerre-Sobolev orthogonal polynomials.
//
//   sobolev poly    SPEC N [--classical] [--eval x0,x1,...]
//   sobolev verify  SPEC N_MAX
//   sobolev connect SPEC N --basis zeta|shifted
//   sobolev kernel  SPEC N J K X Y
//
// Global: --backend exact|float, --format csv|json, --out PATH.
// Exit codes: 0 ok, 1 verification failure, 2 usage/parse error,
// 3 nonexistent degree.

#include <CLI11.hpp>
#include <json.hpp>

#include <sobolev/connect.hpp>
#include <sobolev/kernels.hpp>
#include <sobolev/sobolev.hpp>
#include <sobolev/spec_io.hpp>
#include <sobolev/verify.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

namespace {

using sobolev::Backend;
using sobolev::Rational;

constexpr int kOk = 0;
constexpr int kVerifyFailed = 1;
constexpr int kUsage = 2;
constexpr int kNonexistent = 3;

struct Options {
    std::string spec_path;
    std::string spec_flag;
    std::optional<std::string> backend;
    std::string format = "csv";
    std::string out_path;

    std::size_t n = 0;
    bool classical = false;
    std::string eval;
    std::string basis = "zeta";
    std::size_t j = 0;
    std::size_t k = 0;
    std::string x;
    std::string y;
};

class Output {
public:
    explicit Output(const std::string& path) {
        if (!path.empty()) {
            file_.open(path);
            if (!file_) throw sobolev::ParseError("cannot open output file '" + path + "'");
        }
    }
    std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

private:
    std::ofstream file_;
};

sobolev::SpecFile load(const Options& o) {
    const std::string& path = o.spec_flag.empty() ? o.spec_path : o.spec_flag;
    if (path.empty()) throw sobolev::ParseError("no spec file given (positional or --spec)");
    auto file = sobolev::load_spec_file(path);
    if (o.backend) file.backend = sobolev::parse_backend(*o.backend);
    return file;
}

void emit(const Options& o, const sobolev::Table& table) {
    Output out(o.out_path);
    if (o.format == "json") {
        out.stream() << table.json().dump(2) << '\n';
    } else {
        out.stream() << table.csv();
    }
}

template <sobolev::Field T>
std::vector<std::string> render(std::span<const T> values) {
    std::vector<std::string> out;
    for (const auto& v : values) out.push_back(sobolev::to_string(v));
    return out;
}

std::vector<Rational> parse_grid(const std::string& text) {
    std::vector<Rational> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(sobolev::parse_rational(item));
    return out;
}

template <sobolev::Field T>
int poly_rows(const Options& o, const sobolev::SpecFile& file) {
    const auto spec = [&] {
        if constexpr (std::same_as<T, Rational>) return file.spec();
        else return file.spec().template convert<double>();
    }();
    const sobolev::SobolevFamily<T> family(spec);
    const sobolev::SobolevEvaluator<T> evaluator(spec);
    sobolev::Table table;
    table.numeric = !sobolev::field_traits<T>::is_exact;
    const auto grid = parse_grid(o.eval);
    if (grid.empty()) {
        table.header = {"n", "coefficients"};
        table.ragged = true;
    } else {
        table.header = {"n", "x", "value"};
    }
    int status = kOk;
    for (std::size_t n = 0; n <= o.n; ++n) {
        try {
            if (!grid.empty()) {
                const auto beta = o.classical ? std::vector<T>(n, T(0)) : evaluator.correction(n);
                for (const auto& xq : grid) {
                    const T xv = sobolev::from_rational<T>(xq);
                    table.rows.push_back({std::to_string(n), sobolev::to_string(xv),
                                          sobolev::to_string(evaluator.evaluate(n, beta, xv))});
                }
                continue;
            }
            const auto p = o.classical ? family.laguerre().poly(n) : family.poly(n);
            std::vector<std::string> row{std::to_string(n)};
            for (auto& s : render(p.coeffs())) row.push_back(std::move(s));
            table.rows.push_back(std::move(row));
        } catch (const sobolev::NonexistentDegreeError& e) {
            std::cerr << "error: " << e.what() << '\n';
            status = kNonexistent;
        }
    }
    emit(o, table);
    return status;
}

int cmd_poly(const Options& o) {
    const auto file = load(o);
    return file.backend == Backend::exact ? poly_rows<Rational>(o, file) : poly_rows<double>(o, file);
}

nlohmann::json report_json(const sobolev::VerificationReport& r, const sobolev::SpecFile& file) {
    nlohmann::json j;
    j["spec"] = sobolev::to_json(file);
    j["n_max"] = r.n_max;
    j["passed"] = r.identities_hold();
    j["checks"] = nlohmann::json::array();
    for (const auto& c : r.checks) {
        nlohmann::json cj{{"name", c.name}, {"cases", c.cases}, {"failures", c.failures}, {"skipped", c.skipped}};
        if (!c.note.empty()) cj["note"] = c.note;
        j["checks"].push_back(cj);
    }
    j["existence_failures"] = nlohmann::json::array();
    for (const auto& e : r.existence_failures)
        j["existence_failures"].push_back({{"n", e.n}, {"determinant", e.determinant}});
    if (r.counterexample) {
        j["counterexample"] = {{"check", r.counterexample->check},
                               {"n", r.counterexample->n},
                               {"detail", r.counterexample->detail}};
    } else {
        j["counterexample"] = nullptr;
    }
    return j;
}

int cmd_verify(const Options& o) {
    const auto file = load(o);
    if (file.backend != Backend::exact) throw sobolev::ParseError("verify runs on the exact backend only");
    const auto report = sobolev::verify_spec(file.spec(), o.n);
    Output out(o.out_path);
    out.stream() << report_json(report, file).dump(2) << '\n';
    if (!report.identities_hold()) return kVerifyFailed;
    if (!report.existence_failures.empty()) return kNonexistent;
    return kOk;
}

template <sobolev::Field T>
int connect_rows(const Options& o, const sobolev::SobolevSpec<T>& spec) {
    const sobolev::SobolevFamily<T> family(spec);
    const auto ladder = sobolev::build_zeta(spec);
    if (o.n < ladder.nu()) {
        std::cerr << "error: n = " << o.n << " is below nu = " << ladder.nu() << '\n';
        return kUsage;
    }
    sobolev::ConnectionResult<T> result;
    try {
        result = o.basis == "zeta" ? sobolev::connect_zeta(family, o.n, ladder)
                                   : sobolev::connect_shifted(family, o.n, ladder.nu());
    } catch (const sobolev::FormulaViolationError& e) {
        std::cerr << "error: " << e.what() << "\nresidual: " << e.residual() << '\n';
        return kVerifyFailed;
    }
    for (const auto& w : result.warnings) std::cerr << "warning: " << w << '\n';
    T residual(0);
    for (const auto& c : result.residual.coeffs()) residual = std::max(residual, sobolev::abs_value(c));

    Output out(o.out_path);
    if (o.format == "json") {
        nlohmann::json j{{"basis", sobolev::basis_name(result.basis)}, {"n", o.n}, {"nu", ladder.nu()}};
        j["coefficients"] = render<T>(result.coefficients);
        j["residual_max_abs"] = sobolev::to_string(residual);
        j["warnings"] = result.warnings;
        out.stream() << j.dump(2) << '\n';
    } else {
        out.stream() << "k,coefficient\n";
        for (std::size_t k = 0; k < result.coefficients.size(); ++k)
            out.stream() << k << ',' << sobolev::to_string(result.coefficients[k]) << '\n';
        out.stream() << "residual," << sobolev::to_string(residual) << '\n';
    }
    return kOk;
}

int cmd_connect(const Options& o) {
    if (o.basis != "zeta" && o.basis != "shifted") throw sobolev::ParseError("--basis must be zeta or shifted");
    const auto file = load(o);
    if (file.backend == Backend::exact) return connect_rows<Rational>(o, file.spec());
    return connect_rows<double>(o, file.spec().convert<double>());
}

template <sobolev::Field T>
int kernel_row(const Options& o, const sobolev::SpecFile& file) {
    const sobolev::LaguerreFamily<T> fam(sobolev::from_rational<T>(file.alpha));
    const T x = sobolev::from_rational<T>(sobolev::parse_rational(o.x));
    const T y = sobolev::from_rational<T>(sobolev::parse_rational(o.y));
    const T oracle = sobolev::kernel_partial(fam, o.n, o.j, o.k, x, y);
    const T closed = sobolev::kernel_partial_cd(fam, o.n, o.j, o.k, x, y);
    bool agree = oracle == closed;
    if constexpr (!sobolev::field_traits<T>::is_exact) {
        agree = std::fabs(oracle - closed) <= 1e-10 * std::max(1.0, std::fabs(oracle));
    }
    Output out(o.out_path);
    if (o.format == "json") {
        nlohmann::json j{{"n", o.n}, {"j", o.j}, {"k", o.k}, {"x", sobolev::to_string(x)}, {"y", sobolev::to_string(y)},
                         {"oracle", sobolev::to_string(oracle)}, {"closed_form", sobolev::to_string(closed)},
                         {"agree", agree}};
        out.stream() << j.dump(2) << '\n';
    } else {
        out.stream() << "n,j,k,x,y,oracle,closed_form,agree\n"
                     << o.n << ',' << o.j << ',' << o.k << ',' << sobolev::to_string(x) << ','
                     << sobolev::to_string(y) << ',' << sobolev::to_string(oracle) << ','
                     << sobolev::to_string(closed) << ',' << (agree ? "true" : "false") << '\n';
    }
    return agree ? kOk : kVerifyFailed;
}

int cmd_kernel(const Options& o) {
    const auto file = load(o);
    return file.backend == Backend::exact ? kernel_row<Rational>(o, file) : kernel_row<double>(o, file);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Discrete Laguerre-Sobolev orthogonal polynomials"};
    app.require_subcommand(1);
    app.fallthrough();
    Options o;
    app.add_option("--backend", o.backend, "exact or float (overrides the spec file)")
        ->check(CLI::IsMember({"exact", "float"}));
    app.add_option("--format", o.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    app.add_option("--out", o.out_path, "output path (default stdout)");

    // with --spec present the positional slot is left to the numeric arguments
    const bool spec_by_flag = std::any_of(argv + 1, argv + argc, [](const char* a) {
        const std::string_view s(a);
        return s == "--spec" || s.starts_with("--spec=");
    });
    auto spec_args = [&](CLI::App* sub) {
        if (!spec_by_flag) sub->add_option("SPEC", o.spec_path, "spec file (JSON)");
        sub->add_option("--spec", o.spec_flag, "spec file (JSON)");
    };

    auto* poly = app.add_subcommand("poly", "print S_0..S_n coefficients or an evaluation grid");
    spec_args(poly);
    poly->add_option("n", o.n, "highest degree")->required();
    poly->add_flag("--classical", o.classical, "print L_n^alpha instead");
    poly->add_option("--eval", o.eval, "comma-separated evaluation points");

    auto* verify = app.add_subcommand("verify", "check every identity up to n_max (JSON report)");
    spec_args(verify);
    verify->add_option("n_max", o.n, "highest degree")->required();

    auto* connect = app.add_subcommand("connect", "connection coefficients of S_n");
    spec_args(connect);
    connect->add_option("n", o.n, "degree")->required();
    connect->add_option("--basis", o.basis, "zeta or shifted")->check(CLI::IsMember({"zeta", "shifted"}));

    auto* kernel = app.add_subcommand("kernel", "K_n^{(j,k)}(x, y) from the sum and the closed form");
    spec_args(kernel);
    kernel->add_option("n", o.n)->required();
    kernel->add_option("j", o.j)->required();
    kernel->add_option("k", o.k)->required();
    kernel->add_option("x", o.x)->required();
    kernel->add_option("y", o.y)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kOk : kUsage;
    }

    try {
        if (poly->parsed()) return cmd_poly(o);
        if (verify->parsed()) return cmd_verify(o);
        if (connect->parsed()) return cmd_connect(o);
        if (kernel->parsed()) return cmd_kernel(o);
    } catch (const sobolev::ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const sobolev::DegenerateParameterError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const sobolev::PreconditionError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const sobolev::NonexistentDegreeError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kNonexistent;
    } catch (const sobolev::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kVerifyFailed;
    }
    return kUsage;
}
