#include "klab/appell.hpp"

#include <cmath>

#include "klab/shell_sum.hpp"
#include "klab/theta.hpp"

namespace klab {

namespace {

int warmup_radius(double a) { return static_cast<int>(std::ceil(std::abs(a))) + 2; }

}  // namespace

SeriesValue kappa(cplx y, cplx x, const Modulus& tau, const SummationBudget& budget) {
    const cplx t = tau.tau();
    const cplx ey = e_of(y);
    const double floor_den = kGuard * std::abs(ey);
    return sum_by_shells_1d(
        [&](long n) {
            const double m = static_cast<double>(n);
            const cplx den = e_of(m * t) - ey;
            if (std::abs(den) < floor_den) {
                throw EvalError(ErrorKind::PoleProximity, "kappa: e(n tau) - e(y) below guard");
            }
            return e_of(t * (m * m / 2.0) + m * x) / den;
        },
        budget, 0, warmup_radius(alpha(x, tau)));
}

SeriesValue g_series(const TrapezoidPoint& p, const Modulus& tau, const SummationBudget& budget) {
    const double a1 = alpha(p.z1, tau);
    const double a2 = alpha(p.z2, tau);
    if (dist_to_integers(a1) <= kGuard || dist_to_integers(a2) <= kGuard) {
        throw EvalError(ErrorKind::PoleProximity, "g_series: alpha(z1) or alpha(z2) within guard of an integer");
    }
    const cplx t = tau.tau();
    ShellOptions opt;
    opt.center = {std::lround(-a1), std::lround(-a2)};
    opt.min_radius = 2;
    return sum_by_shells_2d(
        [&](long n, long m) -> cplx {
            const double u = static_cast<double>(n) + a1;
            const double v = static_cast<double>(m) + a2;
            if (u * v <= 0.0) return {0.0, 0.0};
            const double dn = static_cast<double>(n);
            const double dm = static_cast<double>(m);
            return sign_of(v) * e_of((dn + dm / 2.0) * dm * t + dm * p.z1 + (dm + dn) * p.z2);
        },
        budget, opt);
}

SeriesValue g0(const TrapezoidPoint& p, const Modulus& tau, const SummationBudget& budget) {
    if (lattice_distance(p.z2, tau) <= kGuard) {
        throw EvalError(ErrorKind::PoleProximity, "g0: z2 within guard of a lattice point");
    }
    const cplx t = tau.tau();
    const cplx s = p.z1 + p.z2;
    return sum_by_shells_1d(
        [&](long n) {
            const double m = static_cast<double>(n);
            return e_of(t * (m * m / 2.0) + m * s) / (1.0 - e_of(m * t + p.z2));
        },
        budget, 0, warmup_radius(alpha(s, tau)));
}

cplx p_correction(cplx z, const Modulus& tau) {
    const double a = alpha(z, tau);
    if (dist_to_integers(a) <= kGuard) {
        throw EvalError(ErrorKind::BoundaryProximity, "p_correction: alpha(z) within guard of an integer");
    }
    const cplx t = tau.tau();
    auto term = [&](long n) {
        const double m = static_cast<double>(n);
        return e_of(-(m * m / 2.0) * t + m * z);
    };
    cplx sum{0.0, 0.0};
    const long fl = static_cast<long>(std::floor(a));
    if (a >= 0.0) {
        for (long n = 1; n <= fl; ++n) sum -= term(n);
    } else {
        for (long n = fl + 1; n <= 0; ++n) sum += term(n);
    }
    return sum;
}

cplx g0_minus_g(const TrapezoidPoint& p, const Modulus& tau, const SummationBudget& budget) {
    return p_correction(p.z1, tau) * theta(p.z1 + p.z2, tau, budget).value;
}

}  // namespace klab
