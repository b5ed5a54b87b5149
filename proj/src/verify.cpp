#include "klab/verify.hpp"

#include <algorithm>
#include <cmath>

#include "klab/kronecker.hpp"
#include "klab/theta.hpp"
#include "verify_internal.hpp"

namespace klab {

double residual(cplx lhs, cplx rhs) { return std::abs(lhs - rhs) / std::max(1.0, std::abs(rhs)); }

void IdentityReport::finalize() {
    max_residual = 0.0;
    for (const auto& s : samples) max_residual = std::max(max_residual, s.residual);
    pass = !samples.empty() && max_residual < tolerance;
}

Sampler::Sampler(std::uint64_t seed) : rng_(seed) {}

double Sampler::uniform(double lo, double hi) {
    const double u = static_cast<double>(rng_() >> 11) * 0x1.0p-53;
    return lo + (hi - lo) * u;
}

cplx Sampler::point(const Modulus& tau, double alpha_lo, double alpha_hi) {
    const double a = uniform(alpha_lo, alpha_hi);
    const double b = uniform(0.0, 1.0);
    return a * tau.tau() + b;
}

namespace detail {

IdentityReport new_report(std::string id, const Modulus& tau, std::uint64_t seed, const SummationBudget& budget,
                          double tolerance) {
    IdentityReport r;
    r.identity_id = std::move(id);
    r.tau = tau.tau();
    r.seed = seed;
    r.budget_used = budget;
    r.tolerance = tolerance;
    return r;
}

}  // namespace detail

IdentityReport verify_eta_constant(const Modulus& tau, const SummationBudget& budget) {
    auto rep = detail::new_report("eta-const", tau, 0, budget, 1e-12);
    const cplx lhs = theta_prime(tau.xi(), tau, budget).value / kTwoPiI;
    cplx prod{1.0, 0.0};
    for (int n = 1; n <= 50; ++n) {
        const cplx f = 1.0 - e_of(static_cast<double>(n) * tau.tau());
        prod *= f * f * f;
    }
    rep.samples.push_back(detail::make_sample("theta'(xi)/2pi i vs product n<=50", lhs, prod));
    rep.samples.push_back(
        detail::make_sample("theta'(xi)/2pi i vs eta_cubed_constant", lhs, eta_cubed_constant(tau, budget)));
    rep.finalize();
    return rep;
}

IdentityReport verify_kronecker_id(const Modulus& tau, int n_samples, std::uint64_t seed,
                                   const SummationBudget& budget) {
    auto rep = detail::new_report("kronecker", tau, seed, budget, 1e-9);
    Sampler rng(seed);
    std::vector<KroneckerPoint> pts;
    for (int k = 0; k < n_samples; ++k) {
        const cplx z1 = rng.point(tau, kSampleMargin, 1.0 - kSampleMargin);
        const cplx z2 = rng.point(tau, kSampleMargin, 1.0 - kSampleMargin);
        pts.push_back({z1, z2});
    }
    detail::run_inputs(
        pts,
        [&](const KroneckerPoint& p, detail::Outcome& o) {
            const cplx lhs = f_series(p, tau, budget).value;
            const cplx rhs = f_closed(p, tau, budget);
            o.samples.push_back(detail::make_sample("z1=" + detail::fmt(p.z1) + " z2=" + detail::fmt(p.z2), lhs, rhs));
        },
        rep);
    rep.finalize();
    return rep;
}

IdentityReport verify_functional_equation(const Modulus& tau, int n_samples, std::uint64_t seed,
                                          const SummationBudget& budget) {
    auto rep = detail::new_report("functional", tau, seed, budget, 1e-8);
    rep.control_threshold = 0.1;
    const Modulus dual(-1.0 / tau.tau());
    const Modulus shifted(tau.tau() + 1.0);
    Sampler rng(seed);
    auto admissible = [&](cplx z) {
        return dist_to_integers(alpha(z, tau)) > kSampleMargin &&
               dist_to_integers(alpha(z / tau.tau(), dual)) > kSampleMargin;
    };
    std::vector<KroneckerPoint> pts;
    for (int k = 0; k < n_samples; ++k) {
        KroneckerPoint p{};
        for (int tries = 0; tries < 10000; ++tries) {
            p.z1 = rng.point(tau, kSampleMargin, 1.0 - kSampleMargin);
            p.z2 = rng.point(tau, kSampleMargin, 1.0 - kSampleMargin);
            if (admissible(p.z1) && admissible(p.z2)) break;
        }
        pts.push_back(p);
    }
    detail::run_inputs(
        pts,
        [&](const KroneckerPoint& p, detail::Outcome& o) {
            const cplx t = tau.tau();
            const std::string where = "z1=" + detail::fmt(p.z1) + " z2=" + detail::fmt(p.z2);
            const cplx base = f_series(p, tau, budget).value;
            const cplx lhs = f_series({p.z1 / t, p.z2 / t}, dual, budget).value;
            const cplx rhs = t * e_of(p.z1 * p.z2 / t) * base;
            o.samples.push_back(detail::make_sample("S: " + where, lhs, rhs));
            o.control = residual(lhs, -rhs);
            o.samples.push_back(detail::make_sample("T: " + where, f_series(p, shifted, budget).value, base));
        },
        rep);
    rep.notes.push_back("control: functional equation with zeta = -1");
    rep.finalize();
    return rep;
}

const std::vector<std::string>& identity_ids() {
    static const std::vector<std::string> ids{
        "kronecker", "functional", "t-quasi",   "hqp",      "g-bridge",    "fg",        "identity1",
        "identity2", "psi",        "five-term", "sign-det", "m2-assoc",    "eta-const", "m3-oracle",
        "h-five-line"};
    return ids;
}

namespace {

std::array<Rational, 5> five_slopes(const RunParams& p) {
    if (p.slopes.empty()) return {Rational(0), Rational(2), Rational(-1), Rational(1), Rational(3)};
    if (p.slopes.size() != 5) throw EvalError(ErrorKind::DomainError, "five slopes required");
    return {p.slopes[0], p.slopes[1], p.slopes[2], p.slopes[3], p.slopes[4]};
}

int or_default(int v, int d) { return v > 0 ? v : d; }

}  // namespace

IdentityReport run_identity(std::string_view id, const RunParams& p) {
    const Modulus tau(p.tau);
    const auto& b = p.budget;
    if (id == "kronecker") return verify_kronecker_id(tau, or_default(p.samples, 100), p.seed, b);
    if (id == "functional") return verify_functional_equation(tau, or_default(p.samples, 20), p.seed, b);
    if (id == "t-quasi") return verify_t_quasi(tau, or_default(p.samples, 10), p.seed, b);
    if (id == "hqp") return verify_hqp(tau, or_default(p.samples, 10), p.seed, b);
    if (id == "g-bridge") return verify_g_bridge(tau, or_default(p.samples, 8), p.seed, b);
    if (id == "fg") return verify_fg_identity(tau, or_default(p.samples, 50), p.seed, b);
    if (id == "identity1") return verify_identity1(tau, or_default(p.samples, 50), p.seed, b);
    if (id == "identity2") return verify_identity2(tau, or_default(p.samples, 50), p.seed, b);
    if (id == "psi") return verify_psi(tau, or_default(p.samples, 50), p.seed, b);
    if (id == "h-five-line") return verify_h_five_line(tau, or_default(p.samples, 30), p.seed, b);
    if (id == "eta-const") return verify_eta_constant(tau, b);
    if (id == "five-term") return verify_five_term(five_slopes(p), tau, or_default(p.samples, 3), p.seed, b);
    if (id == "sign-det") return verify_sign_determination(five_slopes(p), tau, or_default(p.samples, 3), p.seed, b);
    if (id == "m2-assoc") {
        std::array<Rational, 4> s{Rational(0), Rational(1), Rational(2), Rational(3)};
        if (!p.slopes.empty()) {
            if (p.slopes.size() != 4) throw EvalError(ErrorKind::DomainError, "four slopes required");
            s = {p.slopes[0], p.slopes[1], p.slopes[2], p.slopes[3]};
        }
        return verify_m2_assoc(s, tau, or_default(p.samples, 10), p.seed, b);
    }
    if (id == "m3-oracle") {
        std::vector<std::array<Rational, 4>> quads;
        if (p.slopes.empty()) {
            quads = {{Rational(0), Rational(2), Rational(1), Rational(3)},
                     {Rational(1, 2), Rational(2), Rational(-1), Rational(1)},
                     {Rational(0), Rational(1, 3), Rational(-1), Rational(3, 2)},
                     {Rational(2), Rational(-1), Rational(1), Rational(3)}};
        } else {
            if (p.slopes.size() % 4 != 0) throw EvalError(ErrorKind::DomainError, "slopes must come in fours");
            for (std::size_t i = 0; i < p.slopes.size(); i += 4) {
                quads.push_back({p.slopes[i], p.slopes[i + 1], p.slopes[i + 2], p.slopes[i + 3]});
            }
        }
        return verify_m3_oracle(quads, tau, p.seed, b);
    }
    throw EvalError(ErrorKind::DomainError, "unknown identity '" + std::string(id) + "'");
}

}  // namespace klab
