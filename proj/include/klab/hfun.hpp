#pragma once

#include "klab/core.hpp"

namespace klab {

struct HPoint {
    cplx z1;
    cplx z2;
};

// Cone-restricted series with summand e(tau/2 (2m^2 + 4mn + n^2) + 2(m+n) z1 + (2m+n) z2).
SeriesValue h_series(const HPoint& p, const Modulus& tau, const SummationBudget& budget = {});

// Same summand over the fixed cone (m + 1/2)(n + 1/2) > 0; entire in (z1, z2).
SeriesValue h0_series(const HPoint& p, const Modulus& tau, const SummationBudget& budget = {});

// h0(x, -x)
SeriesValue h0_diagonal(cplx x, const Modulus& tau, const SummationBudget& budget = {});

// theta(0,2tau) kappa(xi, x+xi; tau)
//   + theta(xi,2tau) [e(tau/2) kappa(xi, 2x-xi; 2tau) - e(x-tau/2) kappa(-xi, 2x+xi; 2tau)]
cplx psi_closed(cplx x, const Modulus& tau, const SummationBudget& budget = {});

}  // namespace klab
