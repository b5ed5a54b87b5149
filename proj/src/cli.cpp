#include "klab/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <map>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "klab/appell.hpp"
#include "klab/fukaya.hpp"
#include "klab/hfun.hpp"
#include "klab/kronecker.hpp"
#include "klab/report.hpp"
#include "klab/theta.hpp"
#include "klab/verify.hpp"

namespace klab {

namespace {

struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

cplx parse_complex(const std::string& s) {
    const auto comma = s.find(',');
    if (comma == std::string::npos) throw InputError("expected re,im but got '" + s + "'");
    try {
        std::size_t used_re = 0, used_im = 0;
        const std::string re = s.substr(0, comma), im = s.substr(comma + 1);
        const double r = std::stod(re, &used_re);
        const double i = std::stod(im, &used_im);
        if (used_re != re.size() || used_im != im.size()) throw std::invalid_argument(s);
        return {r, i};
    } catch (const std::logic_error&) {
        throw InputError("expected re,im but got '" + s + "'");
    }
}

double parse_double(const std::string& s) {
    try {
        std::size_t used = 0;
        const double v = std::stod(s, &used);
        if (used != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::logic_error&) {
        throw InputError("expected a number but got '" + s + "'");
    }
}

std::vector<Rational> parse_slopes(const std::string& s) {
    std::vector<Rational> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(parse_rational(item));
    return out;
}

LineOnTorus parse_line(const std::string& s) {
    const auto c1 = s.find(':');
    const auto c2 = c1 == std::string::npos ? c1 : s.find(':', c1 + 1);
    if (c2 == std::string::npos) throw InputError("line spec must be slope:y:beta, got '" + s + "'");
    return {parse_rational(s.substr(0, c1)), parse_double(s.substr(c1 + 1, c2 - c1 - 1)), parse_double(s.substr(c2 + 1))};
}

OutputFormat parse_format(const std::string& s) {
    if (s == "json") return OutputFormat::json;
    if (s == "csv") return OutputFormat::csv;
    if (s == "text") return OutputFormat::text;
    throw InputError("unknown format '" + s + "'");
}

double default_tol() {
    if (const char* env = std::getenv("KLAB_DEFAULT_TOL")) {
        const double v = parse_double(env);
        if (!(v > 0.0)) throw InputError("KLAB_DEFAULT_TOL must be positive");
        return v;
    }
    return 1e-9;
}

struct Common {
    std::string tau = "0,1";
    std::string format = "json";
    std::string out_path;
    double tol = 0.0;
};

void add_common(CLI::App* app, Common& c) {
    app->add_option("--tau", c.tau, "modulus as re,im")->capture_default_str();
    app->add_option("--format", c.format, "json, csv or text")->capture_default_str();
    app->add_option("--out", c.out_path, "write output to this file instead of stdout");
    app->add_option("--tol", c.tol, "summation target tolerance");
}

void emit(const Common& c, const std::string& text, std::ostream& out) {
    if (c.out_path.empty()) {
        out << text;
        return;
    }
    std::ofstream f(c.out_path, std::ios::binary);
    if (!f) throw InputError("cannot open '" + c.out_path + "' for writing");
    f << text;
}

struct EvalArgs {
    std::string fn;
    std::string z, z1, z2, x, y;
};

std::string eval_output(const std::string& fn, const SeriesValue& v, const std::vector<std::pair<std::string, cplx>>& args,
                        const Modulus& tau, OutputFormat fmt) {
    nlohmann::ordered_json j;
    j["schema"] = 1;
    j["function"] = fn;
    j["tau"] = {{"re", tau.tau().real()}, {"im", tau.tau().imag()}};
    nlohmann::ordered_json a = nlohmann::ordered_json::object();
    nlohmann::ordered_json diag = nlohmann::ordered_json::object();
    for (const auto& [name, z] : args) {
        a[name] = {{"re", z.real()}, {"im", z.imag()}};
        diag[name] = {{"alpha", alpha(z, tau)}, {"lattice_distance", lattice_distance(z, tau)}};
    }
    j["args"] = std::move(a);
    j["value"] = {{"re", v.value.real()}, {"im", v.value.imag()}};
    j["shells_used"] = v.shells_used;
    j["guard"] = {{"delta", kGuard}, {"args", std::move(diag)}};
    if (fmt == OutputFormat::json) return j.dump(2) + "\n";
    std::ostringstream os;
    os.precision(17);
    if (fmt == OutputFormat::csv) {
        os << "function,value_re,value_im,shells_used\n"
           << fn << ',' << v.value.real() << ',' << v.value.imag() << ',' << v.shells_used << '\n';
        return os.str();
    }
    os << fn << " = " << v.value.real() << (v.value.imag() < 0 ? " - " : " + ") << std::abs(v.value.imag())
       << "i  (shells_used=" << v.shells_used << ")\n";
    for (const auto& [name, z] : args) {
        os << "  " << name << ": alpha=" << alpha(z, tau) << " lattice_distance=" << lattice_distance(z, tau) << '\n';
    }
    return os.str();
}

int cmd_eval(const EvalArgs& e, const Common& c, const SummationBudget& budget, std::ostream& out) {
    const Modulus tau(parse_complex(c.tau));
    auto need = [](const std::string& v, const char* name) {
        if (v.empty()) throw InputError(std::string("missing --") + name);
        return parse_complex(v);
    };
    const OutputFormat fmt = parse_format(c.format);
    std::vector<std::pair<std::string, cplx>> args;
    SeriesValue v;
    const std::string& fn = e.fn;
    if (fn == "theta" || fn == "theta_prime" || fn == "psi") {
        const cplx z = e.z.empty() && !e.x.empty() ? need(e.x, "x") : need(e.z, "z");
        args = {{"z", z}};
        if (fn == "theta") v = theta(z, tau, budget);
        if (fn == "theta_prime") v = theta_prime(z, tau, budget);
        if (fn == "psi") v = {psi_closed(z, tau, budget), 0};
    } else if (fn == "kappa") {
        const cplx y = need(e.y, "y"), x = need(e.x, "x");
        args = {{"y", y}, {"x", x}};
        v = kappa(y, x, tau, budget);
    } else if (fn == "f" || fn == "g" || fn == "g0" || fn == "h" || fn == "h0") {
        const cplx z1 = need(e.z1, "z1"), z2 = need(e.z2, "z2");
        args = {{"z1", z1}, {"z2", z2}};
        if (fn == "f") v = f_series({z1, z2}, tau, budget);
        if (fn == "g") v = g_series({z1, z2}, tau, budget);
        if (fn == "g0") v = g0({z1, z2}, tau, budget);
        if (fn == "h") v = h_series({z1, z2}, tau, budget);
        if (fn == "h0") v = h0_series({z1, z2}, tau, budget);
    } else {
        throw InputError("unknown function '" + fn + "'");
    }
    out << eval_output(fn, v, args, tau, fmt);
    return 0;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"klab: theta functions, indefinite theta series and compositions on elliptic curves"};
    app.require_subcommand(1);

    Common eval_c, m3_c, verify_c;
    EvalArgs eval_args;
    auto* eval = app.add_subcommand("eval", "evaluate a function");
    eval->add_option("function", eval_args.fn, "theta, theta_prime, f, kappa, g, g0, h, h0 or psi")->required();
    eval->add_option("--z", eval_args.z, "argument as re,im");
    eval->add_option("--z1", eval_args.z1, "first argument as re,im");
    eval->add_option("--z2", eval_args.z2, "second argument as re,im");
    eval->add_option("--x", eval_args.x, "x argument as re,im");
    eval->add_option("--y", eval_args.y, "y argument as re,im");
    add_common(eval, eval_c);

    std::vector<std::string> line_specs;
    bool use_oracle = false;
    int radius = 16;
    auto* m3 = app.add_subcommand("m3", "compute m3 of four lines");
    m3->add_option("--line", line_specs, "slope:y:beta, given four times")->required()->expected(4);
    m3->add_flag("--oracle", use_oracle, "compare with the polygon enumeration");
    m3->add_option("--radius", radius, "translate radius for --oracle")->capture_default_str();
    add_common(m3, m3_c);

    std::string identity;
    int samples = 0;
    std::uint64_t seed = 7;
    std::string slopes;
    auto* verify = app.add_subcommand("verify", "run an identity suite");
    verify->add_option("identity", identity, "identity id or 'all'")->required();
    verify->add_option("--samples", samples, "sample count (grid size for grid suites)");
    verify->add_option("--seed", seed, "random seed")->capture_default_str();
    verify->add_option("--slopes", slopes, "comma separated rationals");
    add_common(verify, verify_c);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "InputError: " << e.what() << '\n';
        return 2;
    }

    try {
        if (eval->parsed()) {
            SummationBudget b;
            b.target_tol = eval_c.tol > 0.0 ? eval_c.tol : default_tol();
            b.validate();
            std::ostringstream buf;
            const int rc = cmd_eval(eval_args, eval_c, b, buf);
            emit(eval_c, buf.str(), out);
            return rc;
        }
        if (m3->parsed()) {
            const Modulus tau(parse_complex(m3_c.tau));
            const OutputFormat fmt = parse_format(m3_c.format);
            SummationBudget b;
            b.target_tol = m3_c.tol > 0.0 ? m3_c.tol : default_tol();
            b.validate();
            std::array<LineOnTorus, 4> lines;
            for (int i = 0; i < 4; ++i) lines[i] = parse_line(line_specs[i]);
            const CompositionResult res = m3_generic(lines, tau, b);
            std::optional<double> gap;
            if (use_oracle) gap = max_coefficient_gap(res.values(), polygon_oracle(lines, tau, radius).values());
            emit(m3_c, format_composition(res, fmt, gap), out);
            return 0;
        }
        RunParams p;
        p.tau = parse_complex(verify_c.tau);
        p.samples = samples;
        p.seed = seed;
        if (verify_c.tol > 0.0) p.budget.target_tol = verify_c.tol;
        p.budget.validate();
        if (!slopes.empty()) p.slopes = parse_slopes(slopes);
        if (samples < 0) throw InputError("--samples must be positive");
        const OutputFormat fmt = parse_format(verify_c.format);
        std::vector<IdentityReport> reps;
        if (identity == "all") {
            for (const auto& id : identity_ids()) {
                RunParams q = p;
                if (id != "five-term" && id != "sign-det") q.slopes.clear();
                reps.push_back(run_identity(id, q));
            }
            emit(verify_c, format_reports(reps, fmt), out);
        } else {
            reps.push_back(run_identity(identity, p));
            emit(verify_c, format_report(reps.front(), fmt), out);
        }
        bool ok = true;
        for (const auto& r : reps) ok = ok && r.pass && r.control_ok();
        return ok ? 0 : 1;
    } catch (const EvalError& e) {
        err << to_string(e.kind()) << ": " << e.detail() << '\n';
        return 2;
    } catch (const InputError& e) {
        err << "InputError: " << e.what() << '\n';
        return 2;
    }
}

}  // namespace klab
