#include "klab/report.hpp"

#include <cstdio>
#include <sstream>

#include <json.hpp>

namespace klab {

namespace {

using nlohmann::ordered_json;

ordered_json cjson(cplx z) { return ordered_json{{"re", z.real()}, {"im", z.imag()}}; }

std::string num(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

ordered_json report_json(const IdentityReport& rep) {
    ordered_json j;
    j["schema"] = 1;
    j["identity_id"] = rep.identity_id;
    j["tau"] = cjson(rep.tau);
    j["seed"] = rep.seed;
    j["budget"] = {{"target_tol", rep.budget_used.target_tol},
                   {"max_shell", rep.budget_used.max_shell},
                   {"stall_shells", rep.budget_used.stall_shells}};
    j["tolerance"] = rep.tolerance;
    j["pass"] = rep.pass;
    j["max_residual"] = rep.max_residual;
    j["n_samples"] = rep.samples.size();
    if (rep.control_residual) {
        j["control"] = {{"residual", *rep.control_residual},
                        {"threshold", rep.control_threshold},
                        {"ok", rep.control_ok()}};
    }
    ordered_json samples = ordered_json::array();
    for (const auto& s : rep.samples) {
        samples.push_back({{"point", s.point}, {"lhs", cjson(s.lhs)}, {"rhs", cjson(s.rhs)}, {"residual", s.residual}});
    }
    j["samples"] = std::move(samples);
    ordered_json skipped = ordered_json::array();
    for (const auto& s : rep.skipped) {
        skipped.push_back({{"point", s.point}, {"kind", std::string(to_string(s.kind))}, {"detail", s.detail}});
    }
    j["skipped"] = std::move(skipped);
    j["notes"] = rep.notes;
    return j;
}

}  // namespace

std::string format_report(const IdentityReport& rep, OutputFormat fmt) {
    std::ostringstream os;
    switch (fmt) {
        case OutputFormat::json:
            os << report_json(rep).dump(2) << '\n';
            break;
        case OutputFormat::csv:
            os << "identity_id,point,lhs_re,lhs_im,rhs_re,rhs_im,residual\n";
            for (const auto& s : rep.samples) {
                os << rep.identity_id << ',' << csv_field(s.point) << ',' << num(s.lhs.real()) << ','
                   << num(s.lhs.imag()) << ',' << num(s.rhs.real()) << ',' << num(s.rhs.imag()) << ','
                   << num(s.residual) << '\n';
            }
            break;
        case OutputFormat::text:
            os << rep.identity_id << ": " << (rep.pass ? "PASS" : "FAIL") << "  max_residual=" << num(rep.max_residual)
               << "  tol=" << num(rep.tolerance) << "  samples=" << rep.samples.size()
               << "  skipped=" << rep.skipped.size() << '\n';
            if (rep.control_residual) {
                os << "  control_residual=" << num(*rep.control_residual) << " (must exceed "
                   << num(rep.control_threshold) << ")\n";
            }
            for (const auto& n : rep.notes) os << "  note: " << n << '\n';
            break;
    }
    return os.str();
}

std::string format_reports(const std::vector<IdentityReport>& reps, OutputFormat fmt) {
    if (fmt != OutputFormat::json) {
        std::string out;
        for (std::size_t i = 0; i < reps.size(); ++i) {
            std::string one = format_report(reps[i], fmt);
            // Keep a single CSV header.
            if (fmt == OutputFormat::csv && i > 0) one = one.substr(one.find('\n') + 1);
            out += one;
        }
        return out;
    }
    ordered_json j;
    j["schema"] = 1;
    bool all = !reps.empty();
    for (const auto& r : reps) all = all && r.pass && r.control_ok();
    j["pass"] = all;
    ordered_json arr = ordered_json::array();
    for (const auto& r : reps) {
        ordered_json one = report_json(r);
        one.erase("schema");
        arr.push_back(std::move(one));
    }
    j["reports"] = std::move(arr);
    return j.dump(2) + "\n";
}

std::string format_composition(const CompositionResult& res, OutputFormat fmt, std::optional<double> oracle_gap) {
    std::ostringstream os;
    if (fmt == OutputFormat::json) {
        ordered_json j;
        j["schema"] = 1;
        if (res.zero) {
            j["zero"] = true;
        } else {
            j["prefactor"] = cjson(res.prefactor);
            j["sign"] = res.sign;
            ordered_json co = ordered_json::array();
            for (std::size_t k = 0; k < res.coefficients.size(); ++k) {
                const auto& c = res.coefficients[k];
                const cplx v = res.value(k);
                co.push_back({{"label", c.label}, {"a", c.a}, {"b", c.b}, {"value_re", v.real()}, {"value_im", v.imag()}});
            }
            j["coefficients"] = std::move(co);
        }
        if (oracle_gap) j["oracle_max_discrepancy"] = *oracle_gap;
        os << j.dump(2) << '\n';
    } else if (fmt == OutputFormat::csv) {
        os << "label,a,b,value_re,value_im\n";
        for (std::size_t k = 0; k < res.coefficients.size(); ++k) {
            const auto& c = res.coefficients[k];
            const cplx v = res.value(k);
            os << c.label << ',' << c.a << ',' << c.b << ',' << num(v.real()) << ',' << num(v.imag()) << '\n';
        }
    } else {
        if (res.zero) os << "zero\n";
        for (std::size_t k = 0; k < res.coefficients.size(); ++k) {
            const auto& c = res.coefficients[k];
            const cplx v = res.value(k);
            os << "label " << c.label << " (a=" << c.a << ", b=" << c.b << "): " << num(v.real()) << " + "
               << num(v.imag()) << "i\n";
        }
        if (oracle_gap) os << "oracle max discrepancy: " << num(*oracle_gap) << '\n';
    }
    return os.str();
}

}  // namespace klab
