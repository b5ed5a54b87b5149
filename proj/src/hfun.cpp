#include "klab/hfun.hpp"

#include <algorithm>
#include <cmath>

#include "klab/appell.hpp"
#include "klab/shell_sum.hpp"
#include "klab/theta.hpp"

namespace klab {

namespace {

cplx h_term(const Modulus& tau, const HPoint& p, double m, double n) {
    return e_of(tau.tau() / 2.0 * (2.0 * m * m + 4.0 * m * n + n * n) + 2.0 * (m + n) * p.z1 + (2.0 * m + n) * p.z2);
}

}  // namespace

SeriesValue h_series(const HPoint& p, const Modulus& tau, const SummationBudget& budget) {
    const double a1 = alpha(p.z1, tau);
    const double a2 = alpha(p.z2, tau);
    if (dist_to_integers(a1) <= kGuard || dist_to_integers(a2) <= kGuard) {
        throw EvalError(ErrorKind::PoleProximity, "h_series: alpha(z1) or alpha(z2) within guard of an integer");
    }
    ShellOptions opt;
    opt.center = {std::lround(-a1), std::lround(-a2)};
    opt.min_radius = 2;
    return sum_by_shells_2d(
        [&](long m, long n) -> cplx {
            const double u = static_cast<double>(m) + a1;
            const double v = static_cast<double>(n) + a2;
            if (u * v <= 0.0) return {0.0, 0.0};
            return sign_of(u) * h_term(tau, p, static_cast<double>(m), static_cast<double>(n));
        },
        budget, opt);
}

SeriesValue h0_series(const HPoint& p, const Modulus& tau, const SummationBudget& budget) {
    const double reach = std::max(std::abs(alpha(p.z1, tau)), std::abs(alpha(p.z2, tau)));
    ShellOptions opt;
    opt.min_radius = 2 * static_cast<int>(std::ceil(reach)) + 2;
    return sum_by_shells_2d(
        [&](long m, long n) -> cplx {
            const double u = static_cast<double>(m) + 0.5;
            const double v = static_cast<double>(n) + 0.5;
            if (u * v <= 0.0) return {0.0, 0.0};
            return sign_of(u) * h_term(tau, p, static_cast<double>(m), static_cast<double>(n));
        },
        budget, opt);
}

SeriesValue h0_diagonal(cplx x, const Modulus& tau, const SummationBudget& budget) {
    return h0_series({x, -x}, tau, budget);
}

cplx psi_closed(cplx x, const Modulus& tau, const SummationBudget& budget) {
    const Modulus tau2 = tau.scaled(2);
    const cplx t = tau.tau();
    const cplx xi = tau.xi();
    const cplx th0 = theta(0.0, tau2, budget).value;
    const cplx thxi = theta(xi, tau2, budget).value;
    const cplx k1 = kappa(xi, x + xi, tau, budget).value;
    const cplx k2 = kappa(xi, 2.0 * x - xi, tau2, budget).value;
    const cplx k3 = kappa(-xi, 2.0 * x + xi, tau2, budget).value;
    return th0 * k1 + thxi * (e_of(t / 2.0) * k2 - e_of(x - t / 2.0) * k3);
}

}  // namespace klab
