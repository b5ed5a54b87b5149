#include "klab/kronecker.hpp"

#include <cmath>

#include "klab/shell_sum.hpp"
#include "klab/theta.hpp"

namespace klab {

SeriesValue f_series(const KroneckerPoint& p, const Modulus& tau, const SummationBudget& budget) {
    const double a1 = alpha(p.z1, tau);
    const double a2 = alpha(p.z2, tau);
    if (dist_to_integers(a1) <= kGuard || dist_to_integers(a2) <= kGuard) {
        throw EvalError(ErrorKind::PoleProximity, "f_series: alpha(z1) or alpha(z2) within guard of an integer");
    }
    const cplx t = tau.tau();
    ShellOptions opt;
    opt.center = {std::lround(-a1), std::lround(-a2)};
    opt.min_radius = 2;
    return sum_by_shells_2d(
        [&](long m, long n) -> cplx {
            const double x = a1 + static_cast<double>(m);
            const double y = a2 + static_cast<double>(n);
            if (x * y <= 0.0) return {0.0, 0.0};
            const double dm = static_cast<double>(m);
            const double dn = static_cast<double>(n);
            return sign_of(x) * e_of(t * (dm * dn) + dn * p.z1 + dm * p.z2);
        },
        budget, opt);
}

cplx f_closed(const KroneckerPoint& p, const Modulus& tau, const SummationBudget& budget) {
    if (lattice_distance(p.z1, tau) <= kGuard || lattice_distance(p.z2, tau) <= kGuard) {
        throw EvalError(ErrorKind::PoleProximity, "f_closed: z1 or z2 within guard of a lattice point");
    }
    const cplx xi = tau.xi();
    const cplx c = theta_prime(xi, tau, budget).value / kTwoPiI;
    const cplx num = theta(p.z1 + p.z2 - xi, tau, budget).value;
    const cplx d1 = theta(p.z1 - xi, tau, budget).value;
    const cplx d2 = theta(p.z2 - xi, tau, budget).value;
    return c * num / (d1 * d2);
}

}  // namespace klab
