#pragma once

#include "klab/core.hpp"

namespace klab {

struct KroneckerPoint {
    cplx z1;
    cplx z2;
};

// Cone-restricted double series of f(z1, z2; tau).
SeriesValue f_series(const KroneckerPoint& p, const Modulus& tau, const SummationBudget& budget = {});

// Theta-ratio closed form (theta'(xi) / 2 pi i) theta(z1 + z2 - xi) / (theta(z1 - xi) theta(z2 - xi)).
cplx f_closed(const KroneckerPoint& p, const Modulus& tau, const SummationBudget& budget = {});

}  // namespace klab
