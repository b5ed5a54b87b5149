#include <algorithm>
#include <array>
#include <cmath>
#include <numeric>

#include "klab/appell.hpp"
#include "klab/fukaya.hpp"
#include "klab/hfun.hpp"
#include "klab/kronecker.hpp"
#include "klab/theta.hpp"
#include "klab/verify.hpp"
#include "verify_internal.hpp"

namespace klab {

namespace {

using detail::fmt;
using detail::make_sample;
using detail::Outcome;

struct Pair {
    cplx z1;
    cplx z2;
};

struct Triple {
    cplx z1;
    cplx z2;
    cplx z3;
};

// Midpoints of `grid` equal cells of the window (lo + margin, lo + 1 - margin).
std::vector<double> grid_alphas(int grid, double lo) {
    std::vector<double> out;
    const double w = 1.0 - 2.0 * kSampleMargin;
    for (int k = 0; k < grid; ++k) out.push_back(lo + kSampleMargin + w * (k + 0.5) / grid);
    return out;
}

std::vector<Pair> grid_points(const Modulus& tau, int grid, double lo1, double lo2, Sampler& rng) {
    std::vector<Pair> pts;
    for (double a1 : grid_alphas(grid, lo1)) {
        for (double a2 : grid_alphas(grid, lo2)) {
            const double b1 = rng.uniform(0.0, 1.0);
            const double b2 = rng.uniform(0.0, 1.0);
            pts.push_back({a1 * tau.tau() + b1, a2 * tau.tau() + b2});
        }
    }
    return pts;
}

bool clear_of_integers(std::initializer_list<cplx> zs, const Modulus& tau) {
    for (cplx z : zs) {
        if (dist_to_integers(alpha(z, tau)) <= kSampleMargin) return false;
    }
    return true;
}

std::string where(const Pair& p) { return "z1=" + fmt(p.z1) + " z2=" + fmt(p.z2); }
std::string where(const Triple& p) { return "z1=" + fmt(p.z1) + " z2=" + fmt(p.z2) + " z3=" + fmt(p.z3); }

const std::array<std::array<int, 2>, 8> kShifts{
    {{-1, -1}, {-1, 0}, {-1, 1}, {0, -1}, {0, 1}, {1, -1}, {1, 0}, {1, 1}}};

}  // namespace

IdentityReport verify_t_quasi(const Modulus& tau, int grid, std::uint64_t seed, const SummationBudget& budget) {
    auto rep = detail::new_report("t-quasi", tau, seed, budget, 1e-9);
    Sampler rng(seed);
    const auto pts = grid_points(tau, grid, 0.0, 0.0, rng);
    const cplx t = tau.tau();
    detail::run_inputs(
        pts,
        [&](const Pair& p, Outcome& o) {
            const std::string w = where(p);
            const cplx f0 = f_series({p.z1, p.z2}, tau, budget).value;
            const cplx g0v = g_series({p.z1, p.z2}, tau, budget).value;
            o.samples.push_back(make_sample("t1 " + w, f_series({p.z2, p.z1}, tau, budget).value, f0));
            o.samples.push_back(make_sample("odd " + w, f_series({-p.z1, -p.z2}, tau, budget).value, -f0));
            for (const auto& s : kShifts) {
                const double m = s[0], n = s[1];
                const cplx d = m + n * t;
                const std::string tag = " m=" + std::to_string(s[0]) + " n=" + std::to_string(s[1]) + " ";
                o.samples.push_back(make_sample("t2" + tag + w, f_series({p.z1 + d, p.z2}, tau, budget).value,
                                                e_of(-n * p.z2) * f0));
                o.samples.push_back(make_sample("t3" + tag + w, f_series({p.z1, p.z2 + d}, tau, budget).value,
                                                e_of(-n * p.z1) * f0));
                o.samples.push_back(make_sample("t4" + tag + w, g_series({p.z1 + d, p.z2}, tau, budget).value,
                                                e_of(-n * p.z2) * g0v));
                o.samples.push_back(make_sample("t5" + tag + w, g_series({p.z1, p.z2 + d}, tau, budget).value,
                                                e_of(-n * n * t / 2.0 - n * (p.z1 + p.z2)) * g0v));
            }
            const cplx y = p.z1, x = p.z2;
            const cplx k_shift = kappa(y, x + t, tau, budget).value;
            const cplx k_rhs = e_of(y) * kappa(y, x, tau, budget).value + theta(x, tau, budget).value;
            o.samples.push_back(make_sample("kappa-diff " + w, k_shift, k_rhs));
            o.samples.push_back(make_sample("theta-qp " + w, theta(p.z1 + t, tau, budget).value,
                                            e_of(-t / 2.0 - p.z1) * theta(p.z1, tau, budget).value));
        },
        rep);
    rep.finalize();
    return rep;
}

IdentityReport verify_hqp(const Modulus& tau, int grid, std::uint64_t seed, const SummationBudget& budget) {
    auto rep = detail::new_report("hqp", tau, seed, budget, 1e-9);
    Sampler rng(seed);
    const auto pts = grid_points(tau, grid, 0.0, 0.0, rng);
    const cplx t = tau.tau();
    detail::run_inputs(
        pts,
        [&](const Pair& p, Outcome& o) {
            const std::string w = where(p);
            const cplx h = h_series({p.z1, p.z2}, tau, budget).value;
            for (int m = -1; m <= 1; ++m) {
                const std::string tag = " m=" + std::to_string(m) + " ";
                const double dm = m;
                o.samples.push_back(make_sample("hqp1" + tag + w, h_series({p.z1 + dm + t, p.z2}, tau, budget).value,
                                                e_of(-t - 2.0 * p.z1 - 2.0 * p.z2) * h));
                o.samples.push_back(make_sample("hqp2" + tag + w, h_series({p.z1, p.z2 + dm + t}, tau, budget).value,
                                                e_of(-t / 2.0 - 2.0 * p.z1 - p.z2) * h));
            }
            o.samples.push_back(make_sample("h-1-periodic " + w, h_series({p.z1 + 1.0, p.z2}, tau, budget).value, h));
            o.samples.push_back(make_sample("h0-restriction " + w, h0_series({p.z1, p.z2}, tau, budget).value, h));
        },
        rep);
    rep.finalize();
    return rep;
}

IdentityReport verify_g_bridge(const Modulus& tau, int grid, std::uint64_t seed, const SummationBudget& budget) {
    auto rep = detail::new_report("g-bridge", tau, seed, budget, 1e-9);
    Sampler rng(seed);
    std::vector<Pair> pts;
    for (double lo : {-1.0, 0.0, 1.0}) {
        const auto w = grid_points(tau, grid, lo, 0.0, rng);
        pts.insert(pts.end(), w.begin(), w.end());
    }
    const cplx t = tau.tau();
    detail::run_inputs(
        pts,
        [&](const Pair& p, Outcome& o) {
            const TrapezoidPoint q{p.z1, p.z2};
            const cplx g0v = g0(q, tau, budget).value;
            const cplx gs = g_series(q, tau, budget).value;
            const std::string w = where(p) + " alpha1=" + fmt(alpha(p.z1, tau));
            o.samples.push_back(make_sample("bridge " + w, g0v - gs, g0_minus_g(q, tau, budget)));
            o.samples.push_back(make_sample("g0-kappa " + w, g0v, kappa(p.z2, t - p.z1 - p.z2, tau, budget).value));
        },
        rep);
    rep.finalize();
    return rep;
}

IdentityReport verify_fg_identity(const Modulus& tau, int n_samples, std::uint64_t seed,
                                  const SummationBudget& budget) {
    auto rep = detail::new_report("fg", tau, seed, budget, 1e-8);
    Sampler rng(seed);
    std::vector<Triple> pts;
    while (static_cast<int>(pts.size()) < n_samples) {
        Triple p{rng.point(tau, -1.0, 1.0), rng.point(tau, -1.0, 1.0), rng.point(tau, -1.0, 1.0)};
        if (clear_of_integers({p.z3, p.z1 + p.z2, p.z1 + p.z3}, tau)) pts.push_back(p);
    }
    detail::run_inputs(
        pts,
        [&](const Triple& p, Outcome& o) {
            const cplx lhs = theta(p.z1, tau, budget).value * g_series({p.z3, p.z1 + p.z2}, tau, budget).value +
                             theta(p.z1 + p.z2 + p.z3, tau, budget).value *
                                 g_series({-p.z3, p.z1 + p.z3}, tau, budget).value;
            const cplx rhs = theta(p.z2, tau, budget).value * f_series({p.z1 + p.z2, p.z1 + p.z3}, tau, budget).value;
            o.samples.push_back(make_sample(where(p), lhs, rhs));
        },
        rep);
    rep.finalize();
    return rep;
}

IdentityReport verify_identity1(const Modulus& tau, int n_samples, std::uint64_t seed,
                                const SummationBudget& budget) {
    auto rep = detail::new_report("identity1", tau, seed, budget, 1e-8);
    Sampler rng(seed);
    std::vector<Triple> pts;  // (x, y, z)
    for (int k = 0; k < n_samples; ++k) {
        const cplx x = rng.point(tau, kSampleMargin, 1.0 - kSampleMargin);
        const cplx y = rng.point(tau, kSampleMargin, 1.0 - kSampleMargin);
        const cplx z = rng.point(tau, -1.0, 1.0);
        pts.push_back({x, y, z});
    }
    detail::run_inputs(
        pts,
        [&](const Triple& p, Outcome& o) {
            const cplx x = p.z1, y = p.z2, z = p.z3;
            const cplx lhs = e_of(y) * theta(y + z, tau, budget).value * kappa(y, z - x, tau, budget).value -
                             e_of(-x) * theta(x - z, tau, budget).value * kappa(-x, y + z, tau, budget).value;
            const cplx rhs = theta(z, tau, budget).value * f_series({x, y}, tau, budget).value;
            o.samples.push_back(make_sample("x=" + fmt(x) + " y=" + fmt(y) + " z=" + fmt(z), lhs, rhs));
        },
        rep);
    rep.finalize();
    return rep;
}

IdentityReport verify_identity2(const Modulus& tau, int n_samples, std::uint64_t seed,
                                const SummationBudget& budget) {
    auto rep = detail::new_report("identity2", tau, seed, budget, 1e-8);
    Sampler rng(seed);
    std::vector<Triple> pts;  // (x, y, z)
    while (static_cast<int>(pts.size()) < n_samples) {
        Triple p{rng.point(tau, -0.3, 0.3), rng.point(tau, -0.3, 0.3), rng.point(tau, -0.3, 0.3)};
        if (lattice_distance(2.0 * p.z1 + p.z2 + p.z3, tau) > 0.05) pts.push_back(p);
    }
    const Modulus tau2 = tau.scaled(2);
    const cplx t = tau.tau();
    detail::run_inputs(
        pts,
        [&](const Triple& p, Outcome& o) {
            const cplx x = p.z1, y = p.z2, z = p.z3;
            const cplx lhs = theta(2.0 * x + y, tau, budget).value * h0_series({x, z}, tau, budget).value -
                             theta(2.0 * x + z, tau, budget).value * h0_series({x, y}, tau, budget).value;
            const cplx k = -2.0 * x - y - z;
            const cplx rhs = theta(2.0 * (x + z), tau2, budget).value * kappa(k, 2.0 * x + y + t, tau, budget).value -
                             theta(2.0 * (x + y), tau2, budget).value * kappa(k, 2.0 * x + z + t, tau, budget).value;
            o.samples.push_back(make_sample("x=" + fmt(x) + " y=" + fmt(y) + " z=" + fmt(z), lhs, rhs));
        },
        rep);
    rep.finalize();
    return rep;
}

IdentityReport verify_psi(const Modulus& tau, int n_samples, std::uint64_t seed, const SummationBudget& budget) {
    auto rep = detail::new_report("psi", tau, seed, budget, 1e-8);
    Sampler rng(seed);
    std::vector<cplx> pts;
    for (int k = 0; k < n_samples; ++k) pts.push_back(rng.point(tau, -0.5, 0.5));
    const Modulus tau2 = tau.scaled(2);
    const cplx t = tau.tau();
    const cplx xi = tau.xi();
    detail::run_inputs(
        pts,
        [&](const cplx& x, Outcome& o) {
            const std::string w = "x=" + fmt(x);
            const cplx psi = psi_closed(x, tau, budget);
            const cplx h0x = h0_diagonal(x, tau, budget).value;
            const cplx th0_2 = theta(0.0, tau2, budget).value;
            o.samples.push_back(make_sample("closed " + w, psi, theta(x - xi, tau, budget).value * h0x));
            const cplx diff_rhs = e_of(xi) * psi +
                                  e_of(t / 2.0) * theta(x, tau, budget).value * theta(x - xi, tau, budget).value +
                                  th0_2 * theta(x + xi, tau, budget).value;
            o.samples.push_back(make_sample("difference " + w, psi_closed(x + t, tau, budget), diff_rhs));
            o.samples.push_back(make_sample("h0-recursion " + w, h0_diagonal(x + t, tau, budget).value,
                                            e_of(t / 2.0 + x) * (h0x - theta(x, tau, budget).value) + th0_2));
            o.samples.push_back(make_sample("period " + w, psi_closed(x + 1.0, tau, budget), psi));
        },
        rep);
    rep.finalize();
    return rep;
}

IdentityReport verify_h_five_line(const Modulus& tau, int n_samples, std::uint64_t seed,
                                  const SummationBudget& budget) {
    auto rep = detail::new_report("h-five-line", tau, seed, budget, 1e-8);
    Sampler rng(seed);
    std::vector<Triple> pts;
    while (static_cast<int>(pts.size()) < n_samples) {
        Triple p{rng.point(tau, -1.0, 1.0), rng.point(tau, -1.0, 1.0), rng.point(tau, -1.0, 1.0)};
        if (clear_of_integers({p.z3, p.z1 + p.z3, p.z1 + p.z2, -p.z1 + p.z2 - p.z3}, tau)) pts.push_back(p);
    }
    const Modulus tau2 = tau.scaled(2);
    detail::run_inputs(
        pts,
        [&](const Triple& p, Outcome& o) {
            const cplx z1 = p.z1, z2 = p.z2, z3 = p.z3;
            const cplx lhs =
                theta(2.0 * z1 + z3, tau, budget).value * h_series({z1 + z3, -z1 + z2 - z3}, tau, budget).value +
                theta(z1 + z2 + z3, tau, budget).value * h_series({-z1 - z3, z3}, tau, budget).value;
            const cplx rhs =
                theta(2.0 * z2, tau2, budget).value * g_series({-z1 + z2 - z3, -z1 - z2}, tau, budget).value +
                theta(2.0 * z1, tau2, budget).value * g_series({z3, z1 + z2}, tau, budget).value;
            o.samples.push_back(make_sample(where(p), lhs, rhs));
        },
        rep);
    rep.finalize();
    return rep;
}

IdentityReport verify_m2_assoc(const std::array<Rational, 4>& slopes, const Modulus& tau, int n_samples,
                               std::uint64_t seed, const SummationBudget& budget) {
    auto rep = detail::new_report("m2-assoc", tau, seed, budget, 1e-9);
    Sampler rng(seed);
    std::vector<std::vector<LineOnTorus>> configs;
    for (int k = 0; k < n_samples; ++k) {
        std::vector<LineOnTorus> lines;
        for (int i = 0; i < 4; ++i) {
            const double y = rng.uniform(0.0, 1.0);
            const double b = rng.uniform(0.0, 1.0);
            lines.push_back({slopes[i], y, b});
        }
        configs.push_back(std::move(lines));
    }
    detail::run_inputs(
        configs,
        [&](const std::vector<LineOnTorus>& lines, Outcome& o) {
            const auto left = compose_nested(lines, 0, 2, tau, budget);
            const auto right = compose_nested(lines, 1, 3, tau, budget);
            std::string w = "y=";
            for (const auto& l : lines) w += fmt(l.shift_y) + ";";
            std::vector<long> labels;
            for (const auto& kv : left) labels.push_back(kv.first);
            for (const auto& kv : right) labels.push_back(kv.first);
            std::sort(labels.begin(), labels.end());
            labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
            for (long lab : labels) {
                const cplx a = left.count(lab) ? left.at(lab) : cplx{};
                const cplx b = right.count(lab) ? right.at(lab) : cplx{};
                o.samples.push_back(make_sample(w + " label=" + std::to_string(lab), a, b));
            }
        },
        rep);
    rep.finalize();
    return rep;
}

IdentityReport verify_m3_oracle(const std::vector<std::array<Rational, 4>>& quadruples, const Modulus& tau,
                                std::uint64_t seed, const SummationBudget& budget) {
    auto rep = detail::new_report("m3-oracle", tau, seed, budget, 1e-9);
    Sampler rng(seed);
    std::vector<std::array<LineOnTorus, 4>> configs;
    for (auto q : quadruples) {
        if (!m3_degree_condition(q)) {
            std::sort(q.begin(), q.end());
            while (!m3_degree_condition(q) && std::next_permutation(q.begin(), q.end())) {
            }
            rep.notes.push_back("permuted slopes to satisfy the degree condition: " + to_string(q[0]) + "," +
                                to_string(q[1]) + "," + to_string(q[2]) + "," + to_string(q[3]));
        }
        std::array<LineOnTorus, 4> lines;
        for (int i = 0; i < 4; ++i) {
            const double y = rng.uniform(0.0, 1.0);
            const double b = rng.uniform(0.0, 1.0);
            lines[i] = {q[i], y, b};
        }
        configs.push_back(lines);
    }
    for (const auto& lines : configs) {
        std::array<Rational, 4> s{lines[0].slope, lines[1].slope, lines[2].slope, lines[3].slope};
        rep.notes.push_back("slopes " + to_string(s[0]) + "," + to_string(s[1]) + "," + to_string(s[2]) + "," +
                            to_string(s[3]) + ": global sign " + std::to_string(m3_orientation_sign(s)));
    }
    detail::run_inputs(
        configs,
        [&](const std::array<LineOnTorus, 4>& lines, Outcome& o) {
            const auto formula = m3_generic(lines, tau, budget).values();
            const auto oracle = polygon_oracle(lines, tau, 16).values();
            std::string w = "slopes=";
            for (const auto& l : lines) w += to_string(l.slope) + ";";
            std::vector<long> labels;
            for (const auto& kv : formula) labels.push_back(kv.first);
            for (const auto& kv : oracle) labels.push_back(kv.first);
            std::sort(labels.begin(), labels.end());
            labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
            for (long lab : labels) {
                const cplx a = formula.count(lab) ? formula.at(lab) : cplx{};
                const cplx b = oracle.count(lab) ? oracle.at(lab) : cplx{};
                o.samples.push_back(make_sample(w + " label=" + std::to_string(lab), a, b));
            }
        },
        rep);
    rep.finalize();
    return rep;
}

}  // namespace klab
