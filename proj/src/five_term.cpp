#include <algorithm>
#include <cmath>
#include <limits>

#include "klab/fukaya.hpp"
#include "klab/verify.hpp"
#include "verify_internal.hpp"

namespace klab {

namespace {

using detail::fmt;

// C+ tables for the lambda3 < lambda1 < lambda4 < lambda2 < lambda5 case, keyed by 0-based line indices.
ComposeOptions standard_cone_table() {
    ComposeOptions opt;
    opt.cone_table[{1, 2, 3, 4}] = {1, 1, -1, 1};
    opt.cone_table[{0, 1, 2, 3}] = {1, -1, -1, 1};
    opt.cone_table[{0, 2, 3, 4}] = {1, 1, -1, 1};
    opt.cone_table[{0, 1, 2, 4}] = {1, -1, -1, 1};
    opt.cone_table[{0, 1, 3, 4}] = {1, -1, -1, 1};
    return opt;
}

// Inner ranges (first, last) producing the five terms in five_term_values order.
constexpr std::array<std::array<std::size_t, 2>, 5> kTermRanges{{{1, 4}, {0, 3}, {0, 2}, {2, 4}, {1, 3}}};

double signed_residual(const std::array<cplx, 5>& t, const std::array<int, 5>& eps) {
    cplx total{};
    double scale = 0.0;
    for (int i = 0; i < 5; ++i) {
        total += static_cast<double>(eps[i]) * t[i];
        scale = std::max(scale, std::abs(t[i]));
    }
    return scale > 0.0 ? std::abs(total) / scale : std::abs(total);
}

std::array<int, 5> pattern_of(int bits) {
    std::array<int, 5> eps{};
    for (int i = 0; i < 5; ++i) eps[i] = (bits >> i) & 1 ? -1 : 1;
    return eps;
}

std::string pattern_str(const std::array<int, 5>& eps) {
    std::string s;
    for (int e : eps) s += e > 0 ? '+' : '-';
    return s;
}

struct FiveInput {
    std::vector<LineOnTorus> lines;
};

std::vector<FiveInput> five_inputs(const std::array<Rational, 5>& slopes, const Modulus& tau, int n_samples,
                                   std::uint64_t seed, const SummationBudget& budget, IdentityReport& rep) {
    Sampler rng(seed);
    std::vector<FiveInput> out;
    int attempts = 0;
    while (static_cast<int>(out.size()) < n_samples) {
        if (++attempts > 20 * n_samples) {
            throw EvalError(ErrorKind::ConvergenceBudgetExceeded, "five-term: no well-conditioned sample found");
        }
        FiveInput in;
        for (int i = 0; i < 5; ++i) in.lines.push_back({slopes[i], rng.uniform(0.0, 1.0), rng.uniform(0.0, 1.0)});
        const auto t = five_term_values(in.lines, tau, budget);
        double lo = std::numeric_limits<double>::infinity(), hi = 0.0;
        for (const cplx& v : t) {
            lo = std::min(lo, std::abs(v));
            hi = std::max(hi, std::abs(v));
        }
        // Terms far below the largest one would let a wrong sign hide in the noise.
        if (hi > 0.0 && lo / hi > 1e-2) out.push_back(std::move(in));
    }
    rep.notes.push_back("conditioning draws: " + std::to_string(attempts));
    return out;
}

std::string where(const std::vector<LineOnTorus>& lines) {
    std::string w = "y=";
    for (const auto& l : lines) w += fmt(l.shift_y) + ";";
    w += " beta=";
    for (const auto& l : lines) w += fmt(l.monodromy_beta) + ";";
    return w;
}

void check_order(const std::array<Rational, 5>& slopes) {
    if (!five_term_order_ok(slopes)) {
        throw EvalError(ErrorKind::DomainError,
                        "five-term: only the order lambda3 < lambda1 < lambda4 < lambda2 < lambda5 is supported");
    }
}

}  // namespace

bool five_term_order_ok(const std::array<Rational, 5>& s) {
    return s[2] < s[0] && s[0] < s[3] && s[3] < s[1] && s[1] < s[4];
}

std::array<cplx, 5> five_term_values(const std::vector<LineOnTorus>& lines, const Modulus& tau,
                                     const SummationBudget& budget, long representative_offset) {
    if (lines.size() != 5) throw EvalError(ErrorKind::DomainError, "five-term: need five lines");
    ComposeOptions opt = standard_cone_table();
    opt.representative_offset = representative_offset;
    std::array<cplx, 5> out{};
    for (int i = 0; i < 5; ++i) {
        const auto m = compose_nested(lines, kTermRanges[i][0], kTermRanges[i][1], tau, budget, opt);
        auto it = m.find(0);
        out[i] = it == m.end() ? cplx{} : it->second;
    }
    return out;
}

IdentityReport verify_five_term(const std::array<Rational, 5>& slopes, const Modulus& tau, int n_samples,
                                std::uint64_t seed, const SummationBudget& budget) {
    check_order(slopes);
    auto rep = detail::new_report("five-term", tau, seed, budget, 1e-7);

    const Rational& l2 = slopes[1];
    const Rational& l3 = slopes[2];
    const Rational& l4 = slopes[3];
    const Rational& l5 = slopes[4];
    const Rational k(1);
    const Rational split = (l5 - l2) / (l5 - l3) * ((l4 - l3) / (l4 - l2) * k) +
                           (l5 - l4) / (l5 - l3) * ((l3 - l2) / (l4 - l2) * k);
    rep.notes.push_back(std::string("ideal inclusion identity exact: ") + (split == k ? "yes" : "no"));

    const auto inputs = five_inputs(slopes, tau, n_samples, seed, budget, rep);
    std::vector<std::array<double, 5>> flips(inputs.size());
    std::vector<detail::Outcome> outs(inputs.size());
#pragma omp parallel for schedule(dynamic)
    for (std::size_t s = 0; s < inputs.size(); ++s) {
        auto& o = outs[s];
        try {
            const auto& lines = inputs[s].lines;
            const std::string w = where(lines);
            const auto t = five_term_values(lines, tau, budget);
            cplx total{};
            double scale = 0.0;
            for (int i = 0; i < 5; ++i) {
                total += static_cast<double>(kFiveTermSigns[i]) * t[i];
                scale = std::max(scale, std::abs(t[i]));
            }
            o.samples.push_back({"sum " + w, total, cplx{}, std::abs(total) / scale});
            for (int i = 0; i < 5; ++i) {
                auto flipped = kFiveTermSigns;
                flipped[i] = -flipped[i];
                flips[s][i] = signed_residual(t, flipped);
            }
            const auto t_shift = five_term_values(lines, tau, budget, 1);
            for (int i = 0; i < 5; ++i) {
                o.samples.push_back(detail::make_sample(
                    "representative term=" + std::to_string(i + 1) + " " + w, t_shift[i], t[i]));
            }
        } catch (const EvalError& e) {
            o.skip = SkippedSample{"sample " + std::to_string(s), e.kind(), e.detail()};
        }
    }
    std::array<double, 5> worst{};
    for (std::size_t s = 0; s < outs.size(); ++s) {
        for (auto& smp : outs[s].samples) rep.samples.push_back(std::move(smp));
        if (outs[s].skip) {
            rep.skipped.push_back(*outs[s].skip);
            continue;
        }
        for (int i = 0; i < 5; ++i) worst[i] = std::max(worst[i], flips[s][i]);
    }
    // A flipped pattern is refuted by its worst sample; the control is the least refuted flip.
    const double control = *std::min_element(worst.begin(), worst.end());
    for (int i = 0; i < 5; ++i) rep.notes.push_back("flip eps" + std::to_string(i + 1) + ": residual " + fmt(worst[i]));
    if (!inputs.empty()) {
        rep.control_residual = control;
        rep.control_threshold = 1e-2;
    }
    rep.finalize();
    if (split != k) rep.pass = false;
    return rep;
}

IdentityReport verify_sign_determination(const std::array<Rational, 5>& slopes, const Modulus& tau, int n_samples,
                                         std::uint64_t seed, const SummationBudget& budget) {
    check_order(slopes);
    if (tau.tau().real() != 0.0) throw EvalError(ErrorKind::DomainError, "sign-det: tau must be purely imaginary");
    auto rep = detail::new_report("sign-det", tau, seed, budget, 1e-7);
    const auto inputs = five_inputs(slopes, tau, n_samples, seed, budget, rep);

    std::vector<std::array<cplx, 5>> terms(inputs.size());
    std::vector<std::optional<SkippedSample>> skips(inputs.size());
#pragma omp parallel for schedule(dynamic)
    for (std::size_t s = 0; s < inputs.size(); ++s) {
        try {
            terms[s] = five_term_values(inputs[s].lines, tau, budget);
        } catch (const EvalError& e) {
            skips[s] = SkippedSample{"sample " + std::to_string(s), e.kind(), e.detail()};
        }
    }

    auto expected = kFiveTermSigns;
    auto flipped = expected;
    for (int& e : flipped) e = -e;
    double single_flip = std::numeric_limits<double>::infinity();
    double nearest = std::numeric_limits<double>::infinity();
    int passing = 0;
    std::array<int, 5> found{};
    for (int bits = 0; bits < 32; ++bits) {
        const auto eps = pattern_of(bits);
        if (eps == expected || eps == flipped) continue;
        double worst = 0.0;
        for (std::size_t s = 0; s < inputs.size(); ++s) {
            if (!skips[s]) worst = std::max(worst, signed_residual(terms[s], eps));
        }
        nearest = std::min(nearest, worst);
        int differs = 0;
        for (int i = 0; i < 5; ++i) differs += eps[i] != expected[i] ? 1 : 0;
        if (differs == 1) single_flip = std::min(single_flip, worst);
        if (worst < rep.tolerance) {
            ++passing;
            found = eps;
        }
    }
    for (std::size_t s = 0; s < inputs.size(); ++s) {
        if (skips[s]) {
            rep.skipped.push_back(*skips[s]);
            continue;
        }
        const std::string w = where(inputs[s].lines);
        for (const auto& eps : {expected, flipped}) {
            cplx total{};
            for (int i = 0; i < 5; ++i) total += static_cast<double>(eps[i]) * terms[s][i];
            rep.samples.push_back({"pattern " + pattern_str(eps) + " " + w, total, cplx{}, signed_residual(terms[s], eps)});
        }
    }
    rep.notes.push_back("nearest other sign pattern residual: " + fmt(nearest));
    if (passing > 0) rep.notes.push_back("other passing pattern: " + pattern_str(found));
    const bool rel = expected[3] == -expected[0] && expected[4] == expected[0] && expected[2] == -expected[1] && expected[4] == expected[1];
    rep.notes.push_back(std::string("eps4=-eps1, eps5=eps1, eps3=-eps2, eps5=eps2: ") + (rel ? "hold" : "violated"));
    rep.control_residual = single_flip;
    rep.control_threshold = 1e-2;
    rep.finalize();
    if (passing > 0) rep.pass = false;
    return rep;
}

}  // namespace klab
