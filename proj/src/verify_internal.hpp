#pragma once

#include <cstdio>
#include <optional>
#include <string>
#include <vector>

#include "klab/verify.hpp"

namespace klab::detail {

struct Outcome {
    std::vector<Sample> samples;
    std::optional<SkippedSample> skip;
    std::optional<double> control;
};

inline std::string fmt(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

inline std::string fmt(cplx z) { return "(" + fmt(z.real()) + "," + fmt(z.imag()) + ")"; }

inline Sample make_sample(std::string point, cplx lhs, cplx rhs) {
    return {std::move(point), lhs, rhs, residual(lhs, rhs)};
}

IdentityReport new_report(std::string id, const Modulus& tau, std::uint64_t seed, const SummationBudget& budget,
                          double tolerance);

// Evaluates every input independently (OpenMP over inputs) and merges the
// outcomes into the report in input order.
template <class Input, class Eval>
void run_inputs(const std::vector<Input>& inputs, Eval&& eval, IdentityReport& rep) {
    std::vector<Outcome> out(inputs.size());
    const long n = static_cast<long>(inputs.size());
#pragma omp parallel for schedule(dynamic)
    for (long k = 0; k < n; ++k) {
        try {
            eval(inputs[k], out[k]);
        } catch (const EvalError& e) {
            out[k].samples.clear();
            out[k].skip = SkippedSample{"input " + std::to_string(k), e.kind(), e.detail()};
        }
    }
    for (auto& o : out) {
        for (auto& s : o.samples) rep.samples.push_back(std::move(s));
        if (o.skip) rep.skipped.push_back(*o.skip);
        if (o.control) rep.control_residual = std::max(rep.control_residual.value_or(0.0), *o.control);
    }
}

}  // namespace klab::detail
