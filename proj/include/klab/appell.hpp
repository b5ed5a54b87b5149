#pragma once

#include "klab/core.hpp"

namespace klab {

struct TrapezoidPoint {
    cplx z1;
    cplx z2;
};

// kappa(y, x; tau) = sum_n e(tau n^2 / 2 + n x) / (e(n tau) - e(y))
SeriesValue kappa(cplx y, cplx x, const Modulus& tau, const SummationBudget& budget = {});

// Cone-restricted trapezoid series g(z1, z2; tau).
SeriesValue g_series(const TrapezoidPoint& p, const Modulus& tau, const SummationBudget& budget = {});

// g0(z1, z2) = sum_m e(m^2 tau / 2 + m (z1 + z2)) / (1 - e(m tau + z2))
SeriesValue g0(const TrapezoidPoint& p, const Modulus& tau, const SummationBudget& budget = {});

// Piecewise correction p(z): empty for 0 < alpha(z) < 1.
cplx p_correction(cplx z, const Modulus& tau);

// p(z1) * theta(z1 + z2), the predicted value of g0 - g.
cplx g0_minus_g(const TrapezoidPoint& p, const Modulus& tau, const SummationBudget& budget = {});

}  // namespace klab
